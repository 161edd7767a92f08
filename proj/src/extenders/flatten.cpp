#include "lipkit/extenders/flatten.hpp"

#include <cmath>
#include <stdexcept>

#include "lipkit/geometry/oscillation.hpp"
#include "lipkit/spaces/sobolev.hpp"

namespace lipkit {

namespace {

// BMO seminorm of the graph function's slope (planar graphs).
double graph_slope_bmo(const LipschitzGraphDomain& g) {
  if (g.dim() != 2)
    throw std::domain_error("flatten: slope oscillation is planar-only");
  int N = g.samples_per_axis();
  double h = g.grid_h();
  ScanField f;
  f.d = 1;
  f.h = h;
  f.period = {g.window(), 0.0, 0.0};
  for (int i = 0; i < N; ++i) {
    double u = (i + 0.5) * h;
    f.pos.push_back(Point(u, 0.0));
    f.val.push_back(g.grad_phi(u)[0]);
    f.w.push_back(h);
  }
  return bmo_seminorm(f).sup;
}

}  // namespace

FlatteningMap::FlatteningMap(std::shared_ptr<const LipschitzGraphDomain> dom,
                             const SmoothingKernel& ker, double C)
    : dom_(std::move(dom)), ker_(ker), C_(C) {
  if (!dom_) throw std::invalid_argument("FlatteningMap: null domain");
  if (ker_.ambient_dim() != dom_->dim())
    throw std::invalid_argument("FlatteningMap: kernel dimension mismatch");
  if (!(C > 0.0)) throw std::invalid_argument("FlatteningMap: C must be positive");
  ceff_ = C_ * std::max(dom_->lip_constant(), 1.0);

  // The inverse is found by bisection, which needs lambda_n strictly
  // increasing in x_n; probe the vertical slope and reject a C that lets the
  // mollifier's slope term overpower it anywhere on the probe grid.
  int n = dom_->dim();
  double dmin = 1e300;
  for (int iz = 0; iz < 12; ++iz) {
    double xn = 1e-3 * std::pow(2.0, iz);
    for (int ix = 0; ix < 16; ++ix) {
      Point x((ix + 0.5) * dom_->window() / 16.0, xn);
      if (n == 3) x = Point(x[0], x[0], xn);
      dmin = std::min(dmin, det_jacobian(x));
    }
  }
  if (!(dmin > 0.0))
    throw std::runtime_error(
        "FlatteningMap: vertical slope loses monotonicity (map parameter C too small)");
}

double FlatteningMap::t_phi(const Point& x) const {
  int n = dom_->dim();
  double xn = x[n - 1];
  if (!(xn > 0.0)) throw std::domain_error("flatten: requires x_n > 0");
  double s = 0.0;
  for (const SmoothingKernel::Node& nd : ker_.nodes()) {
    if (n == 2)
      s += nd.w * dom_->phi(x[0] + xn * nd.t[0]);
    else
      s += nd.w * dom_->phi(x[0] + xn * nd.t[0], x[1] + xn * nd.t[1]);
  }
  return s;
}

Point FlatteningMap::flatten(const Point& x) const {
  int n = dom_->dim();
  Point X = x;
  X[n - 1] = ceff_ * x[n - 1] + t_phi(x);
  return X;
}

Point FlatteningMap::unflatten(const Point& X) const {
  int n = dom_->dim();
  double target = X[n - 1];
  double phi0 = n == 2 ? dom_->phi(X[0]) : dom_->phi(X[0], X[1]);
  if (!(target > phi0))
    throw std::domain_error("flatten: point not above the graph");

  // lambda_n(x', .) is strictly increasing with slope >= ceff - c M > 0, and
  // approaches phi(x') as x_n -> 0+. Bracket upward from a seed, then bisect.
  auto height = [&](double xn) {
    Point x = X;
    x[n - 1] = xn;
    return ceff_ * xn + t_phi(x);
  };
  double lo = 0.0;  // height(0+) = phi0 < target
  double hi = (target - dom_->phi_min()) / ceff_ + 1e-12;
  if (height(hi) < target) {
    int grow = 0;
    while (height(hi) < target && grow++ < 60) hi *= 2.0;
    if (grow >= 60)
      throw std::runtime_error(
          "flatten: bisection failed to bracket (map parameter C too small)");
  }
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (height(mid) < target)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-12 * std::max(1.0, hi)) break;
  }
  Point x = X;
  x[n - 1] = 0.5 * (lo + hi);
  return x;
}

Matrix3 FlatteningMap::jacobian(const Point& x) const {
  int n = dom_->dim();
  double xn = x[n - 1];
  if (!(xn > 0.0)) throw std::domain_error("flatten: requires x_n > 0");
  Matrix3 J{};
  for (int i = 0; i < n; ++i) J[size_t(i)][size_t(i)] = 1.0;
  // Differentiating the node sum T phi = sum w_i phi(x' + x_n t_i) directly:
  // each x'-derivative picks up the interpolant slope, the x_n-derivative the
  // slope contracted with the node offset t_i.
  double row[2] = {0.0, 0.0};
  double dn = 0.0;
  for (const SmoothingKernel::Node& nd : ker_.nodes()) {
    if (n == 2) {
      double sl = dom_->grad_phi(x[0] + xn * nd.t[0])[0];
      row[0] += nd.w * sl;
      dn += nd.w * sl * nd.t[0];
    } else {
      Point g = dom_->grad_phi(x[0] + xn * nd.t[0], x[1] + xn * nd.t[1]);
      row[0] += nd.w * g[0];
      row[1] += nd.w * g[1];
      dn += nd.w * (g[0] * nd.t[0] + g[1] * nd.t[1]);
    }
  }
  for (int j = 0; j + 1 < n; ++j) J[size_t(n - 1)][size_t(j)] = row[j];
  J[size_t(n - 1)][size_t(n - 1)] = ceff_ + dn;
  return J;
}

double FlatteningMap::det_jacobian(const Point& x) const {
  int n = dom_->dim();
  return jacobian(x)[size_t(n - 1)][size_t(n - 1)];
}

Matrix3 FlatteningMap::kappa_jacobian(const Point& X) const {
  int n = dom_->dim();
  Point x = unflatten(X);
  Matrix3 J = jacobian(x);
  double d = J[size_t(n - 1)][size_t(n - 1)];
  Matrix3 K{};
  for (int i = 0; i < n; ++i) K[size_t(i)][size_t(i)] = 1.0;
  K[size_t(n - 1)][size_t(n - 1)] = 1.0 / d;
  for (int j = 0; j + 1 < n; ++j)
    K[size_t(n - 1)][size_t(j)] = -J[size_t(n - 1)][size_t(j)] / d;
  return K;
}

FlattenBoundsReport flatten_derivative_bounds(const FlatteningMap& map,
                                              const MultiIndex& alpha, int nx, int nz,
                                              double gap_lo, double gap_hi) {
  const LipschitzGraphDomain& g = map.domain();
  if (g.dim() != 2)
    throw std::domain_error("flatten: bounds report is planar-only");
  if (alpha.order() < 1)
    throw std::invalid_argument("flatten: bounds need |alpha| >= 1");

  FlattenBoundsReport rep;
  rep.grad_phi_bmo = graph_slope_bmo(g);
  if (rep.grad_phi_bmo <= 1e-12 * (std::abs(g.phi_max()) + std::abs(g.phi_min()) + 1.0)) {
    rep.exact = true;
    return rep;
  }

  double window = g.window();
  double lr = std::log(gap_hi / gap_lo);
  // ||D^alpha kappa'|| by iterated gap-scaled central differences of the
  // kappa Jacobian entries; alpha over the X coordinates.
  std::function<double(const Point&, const MultiIndex&, double, int, int)> dk =
      [&](const Point& X, const MultiIndex& al, double step, int r, int c) -> double {
    if (al.order() == 0) return map.kappa_jacobian(X)[size_t(r)][size_t(c)];
    int ax = al[0] > 0 ? 0 : 1;
    MultiIndex rest = al - MultiIndex::unit(2, ax);
    Point Xp = X, Xm = X;
    Xp[ax] += step;
    Xm[ax] -= step;
    return (dk(Xp, rest, step, r, c) - dk(Xm, rest, step, r, c)) / (2.0 * step);
  };

  for (int iz = 0; iz < nz; ++iz) {
    double gap = gap_lo * std::exp(lr * (iz + 0.5) / nz);
    for (int ix = 0; ix < nx; ++ix) {
      double u = (ix + 0.5) * window / nx;
      Point X(u, g.phi(u) + gap);
      double step = gap / 16.0;
      double mx = 0.0;
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          mx = std::max(mx, std::abs(dk(X, alpha, step, r, c)));
      rep.max_scaled = std::max(
          rep.max_scaled, mx * std::pow(gap, alpha.order()) / rep.grad_phi_bmo);
    }
  }
  return rep;
}

GapBand flatten_gap_band(const FlatteningMap& map, int nx, int nz, double z_lo,
                         double z_hi) {
  const LipschitzGraphDomain& g = map.domain();
  if (g.dim() != 2) throw std::domain_error("flatten: gap band is planar-only");
  double window = g.window();
  double lr = std::log(z_hi / z_lo);
  GapBand band{1e300, 0.0};
  for (int iz = 0; iz < nz; ++iz) {
    double xn = z_lo * std::exp(lr * (iz + 0.5) / nz);
    for (int ix = 0; ix < nx; ++ix) {
      Point x((ix + 0.5) * window / nx, xn);
      Point X = map.flatten(x);
      double q = (X[1] - g.phi(X[0])) / xn;
      band.lo = std::min(band.lo, q);
      band.hi = std::max(band.hi, q);
    }
  }
  return band;
}

NormChangeResult change_of_variables_norm_check(const GridFunction& u,
                                                const FlatteningMap& map,
                                                const std::vector<double>& p_list,
                                                const std::vector<double>& s_list,
                                                int m, double grid_h, double rho_cut) {
  const LipschitzGraphDomain& g = map.domain();
  auto ggrid = std::make_shared<InteriorGrid>(g, grid_h, rho_cut);
  const InteriorGrid& ugrid = u.grid();

  // Compose u with kappa once; derivatives of the composition come from the
  // grid stencils, capturing the chain-rule factors numerically.
  GridFunction v(ggrid, 1, m);
  for (size_t i = 0; i < ggrid->size(); ++i) {
    Point x = map.unflatten(ggrid->points()[i]);
    v.set(i, 0, ugrid.interp(u.values(0), x));
  }

  NormChangeResult out;
  out.p_list = p_list;
  out.s_list = s_list;
  out.lo = 1e300;
  out.hi = 0.0;
  for (double p : p_list)
    for (double s : s_list) {
      NormParams prm = NormParams::from_ps(p, s, m);
      double nu = weighted_sobolev_norm_V(u, prm);
      double nv = weighted_sobolev_norm_V(v, prm);
      double r;
      if (nu <= 1e-300 && nv <= 1e-300) {
        r = std::nan("");  // 0/0: skip
      } else {
        r = nv / nu;
        out.lo = std::min(out.lo, r);
        out.hi = std::max(out.hi, r);
        ++out.defined;
      }
      out.ratio.push_back(r);
    }
  if (out.defined == 0) {
    out.lo = out.hi = 0.0;
  }
  return out;
}

}  // namespace lipkit
