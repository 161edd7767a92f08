#include "lipkit/spaces/grid_function.hpp"

#include <cmath>
#include <stdexcept>

namespace lipkit {

InteriorGrid::InteriorGrid(const Domain& dom, double h, double rho_cut)
    : dom_(&dom), n_(dom.dim()) {
  if (!(h > 0.0)) throw std::invalid_argument("InteriorGrid: h must be positive");
  double side = dom.root_side();
  int cells = std::max(1, int(std::llround(side / h)));
  h_ = side / cells;
  origin_ = dom.root_origin();
  dims_ = {cells, cells, n_ == 3 ? cells : 1};
  long total = long(dims_[0]) * dims_[1] * dims_[2];
  if (total > (1L << 26))
    throw std::invalid_argument("InteriorGrid: lattice too large");
  map_.assign(size_t(total), -1);
  for (int k = 0; k < dims_[2]; ++k)
    for (int j = 0; j < dims_[1]; ++j)
      for (int i = 0; i < dims_[0]; ++i) {
        Point x = cell_center(i, j, k);
        if (!dom.inside(x)) continue;
        double r = dom.rho(x);
        if (!(r > rho_cut)) continue;
        size_t flat = size_t((long(k) * dims_[1] + j) * dims_[0] + i);
        map_[flat] = int32_t(pts_.size());
        pts_.push_back(x);
        rho_.push_back(r);
        ijk_.push_back({i, j, k});
      }
}

double InteriorGrid::cell_measure() const {
  return n_ == 3 ? h_ * h_ * h_ : h_ * h_;
}

int InteriorGrid::at(int i, int j, int k) const {
  if (i < 0 || i >= dims_[0] || j < 0 || j >= dims_[1] || k < 0 || k >= dims_[2])
    return -1;
  return map_[size_t((long(k) * dims_[1] + j) * dims_[0] + i)];
}

Point InteriorGrid::cell_center(int i, int j, int k) const {
  Point x = origin_;
  x[0] += (i + 0.5) * h_;
  x[1] += (j + 0.5) * h_;
  if (n_ == 3) x[2] += (k + 0.5) * h_;
  return x;
}

double InteriorGrid::interp(const std::vector<double>& field, const Point& X) const {
  // Dual cell: the box spanned by up to 2^n neighbouring cell centers.
  std::array<int, 3> base{0, 0, 0};
  std::array<double, 3> frac{0.0, 0.0, 0.0};
  for (int d = 0; d < n_; ++d) {
    double t = (X[d] - origin_[d]) / h_ - 0.5;
    double fl = std::floor(t);
    base[size_t(d)] = int(fl);
    frac[size_t(d)] = t - fl;
  }
  double wsum = 0.0, acc = 0.0;
  int kmax = n_ == 3 ? 2 : 1;
  for (int dk = 0; dk < kmax; ++dk)
    for (int dj = 0; dj < 2; ++dj)
      for (int di = 0; di < 2; ++di) {
        int idx = at(base[0] + di, base[1] + dj, base[2] + dk);
        if (idx < 0) continue;
        double w = (di ? frac[0] : 1.0 - frac[0]) * (dj ? frac[1] : 1.0 - frac[1]);
        if (n_ == 3) w *= dk ? frac[2] : 1.0 - frac[2];
        wsum += w;
        acc += w * field[size_t(idx)];
      }
  if (wsum <= 0.0) return 0.0;
  return acc / wsum;
}

GridFunction::GridFunction(std::shared_ptr<const InteriorGrid> grid, int components,
                           int max_order)
    : g_(std::move(grid)), l_(components), max_order_(max_order) {
  if (l_ < 1) throw std::invalid_argument("GridFunction: components must be >= 1");
  if (max_order_ < 0) throw std::invalid_argument("GridFunction: max_order < 0");
  vals_.assign(size_t(l_), std::vector<double>(g_->size(), 0.0));
}

GridFunction GridFunction::from_function(std::shared_ptr<const InteriorGrid> grid,
                                         const std::function<double(const Point&)>& f,
                                         int max_order) {
  GridFunction u(grid, 1, max_order);
  const auto& pts = u.g_->points();
  for (size_t i = 0; i < pts.size(); ++i) u.vals_[0][i] = f(pts[i]);
  return u;
}

void GridFunction::set(size_t i, int c, double v) {
  vals_[size_t(c)][i] = v;
  dcache_.clear();
}

GridFunction& GridFunction::operator*=(double c) {
  for (auto& comp : vals_)
    for (double& v : comp) v *= c;
  dcache_.clear();
  return *this;
}

std::vector<double> GridFunction::axis_derivative(const std::vector<double>& in,
                                                  int axis, int order) const {
  const double h = g_->h();
  std::vector<double> out(in.size(), 0.0);
  auto shift = [&](const std::array<int, 3>& c, int step) {
    std::array<int, 3> s = c;
    s[size_t(axis)] += step;
    return g_->at(s[0], s[1], s[2]);
  };
  for (size_t i = 0; i < in.size(); ++i) {
    const auto& c = g_->coords(i);
    int ip = shift(c, +1), im = shift(c, -1);
    if (order == 1) {
      if (ip >= 0 && im >= 0)
        out[i] = (in[size_t(ip)] - in[size_t(im)]) / (2.0 * h);
      else if (ip >= 0)
        out[i] = (in[size_t(ip)] - in[i]) / h;
      else if (im >= 0)
        out[i] = (in[i] - in[size_t(im)]) / h;
    } else {  // order == 2
      if (ip >= 0 && im >= 0) {
        out[i] = (in[size_t(ip)] - 2.0 * in[i] + in[size_t(im)]) / (h * h);
      } else if (ip >= 0) {
        int ip2 = shift(c, +2);
        if (ip2 >= 0)
          out[i] = (in[i] - 2.0 * in[size_t(ip)] + in[size_t(ip2)]) / (h * h);
      } else if (im >= 0) {
        int im2 = shift(c, -2);
        if (im2 >= 0)
          out[i] = (in[i] - 2.0 * in[size_t(im)] + in[size_t(im2)]) / (h * h);
      }
    }
  }
  return out;
}

const std::vector<double>& GridFunction::derivative(const MultiIndex& alpha,
                                                    int c) const {
  if (alpha.order() > max_order_)
    throw std::domain_error("GridFunction: derivative order exceeds max_order");
  auto key = std::make_pair(alpha.key(), c);
  auto it = dcache_.find(key);
  if (it != dcache_.end()) return it->second;
  if (alpha.order() == 0) {
    it = dcache_.emplace(key, vals_[size_t(c)]).first;
    return it->second;
  }
  std::vector<double> cur = vals_[size_t(c)];
  for (int axis = 0; axis < g_->dim(); ++axis) {
    int rem = alpha[axis];
    while (rem >= 2) {
      cur = axis_derivative(cur, axis, 2);
      rem -= 2;
    }
    if (rem == 1) cur = axis_derivative(cur, axis, 1);
  }
  it = dcache_.emplace(key, std::move(cur)).first;
  return it->second;
}

namespace {

double cap_profile(double t) {
  if (t <= 0.5) return 1.0;
  if (t >= 1.0) return 0.0;
  double q = 2.0 * t - 1.0;  // in (0,1)
  return std::exp(1.0 - 1.0 / (1.0 - q * q));
}

}  // namespace

GridFunction plateau_bump(std::shared_ptr<const InteriorGrid> grid, const Point& c,
                          double r0, int max_order) {
  if (!(r0 > 0.0)) throw std::invalid_argument("plateau_bump: r0 must be positive");
  int n = grid->dim();
  return GridFunction::from_function(
      grid,
      [&, n](const Point& X) {
        double r2 = 0.0;
        for (int d = 0; d < n; ++d) r2 += (X[d] - c[d]) * (X[d] - c[d]);
        return cap_profile(std::sqrt(r2) / r0);
      },
      max_order);
}

GridFunction hardy_bump(std::shared_ptr<const InteriorGrid> grid, const Point& anchor,
                        double delta, double lambda, int max_order) {
  if (!(delta > 0.0) || !(lambda > 0.0))
    throw std::invalid_argument("hardy_bump: delta and lambda must be positive");
  GridFunction u(grid, 1, max_order);
  const int n = grid->dim();
  const auto& pts = grid->points();
  const auto& rho = grid->rho();
  for (size_t i = 0; i < pts.size(); ++i) {
    double r2 = 0.0;
    for (int d = 0; d < n; ++d) r2 += (pts[i][d] - anchor[d]) * (pts[i][d] - anchor[d]);
    double cap = cap_profile(std::sqrt(r2) / delta);
    if (cap == 0.0) continue;
    u.set(i, 0, cap * std::pow(std::min(rho[i], delta) / delta, lambda));
  }
  return u;
}

GridFunction collar_bump(std::shared_ptr<const InteriorGrid> grid, double delta,
                         double s_exp, double omega, int max_order) {
  if (!(delta > 0.0) || !(omega > 0.0))
    throw std::invalid_argument("collar_bump: delta and omega must be positive");
  GridFunction u(grid, 1, max_order);
  const auto& rho = grid->rho();
  for (size_t i = 0; i < rho.size(); ++i) {
    if (rho[i] >= delta || rho[i] <= 0.0) continue;
    double tau = std::log(delta / rho[i]);
    u.set(i, 0, std::pow(rho[i] / delta, s_exp) * std::sin(omega * tau));
  }
  return u;
}

}  // namespace lipkit
