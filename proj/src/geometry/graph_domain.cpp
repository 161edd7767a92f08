#include "lipkit/geometry/graph_domain.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lipkit {

namespace {
// Wrap u into [0, window).
double wrap(double u, double window) {
  double w = std::fmod(u, window);
  if (w < 0) w += window;
  return w;
}
}  // namespace

LipschitzGraphDomain LipschitzGraphDomain::from_samples(double window,
                                                        std::vector<double> samples) {
  if (window <= 0 || samples.size() < 2)
    throw std::invalid_argument("graph domain needs window > 0 and >= 2 samples");
  LipschitzGraphDomain d;
  d.n_ = 2;
  d.window_ = window;
  d.N_ = int(samples.size());
  d.h_ = window / d.N_;
  d.samples_ = std::move(samples);
  d.finish();
  return d;
}

LipschitzGraphDomain LipschitzGraphDomain::from_samples_2d(double window, int N,
                                                           std::vector<double> samples) {
  if (window <= 0 || N < 2 || samples.size() != size_t(N) * size_t(N))
    throw std::invalid_argument("graph domain: bad 2-d sample block");
  LipschitzGraphDomain d;
  d.n_ = 3;
  d.window_ = window;
  d.N_ = N;
  d.h_ = window / N;
  d.samples_ = std::move(samples);
  d.finish();
  return d;
}

LipschitzGraphDomain LipschitzGraphDomain::from_function(
    int n, double window, int N, const std::function<double(double, double)>& phi) {
  if (n == 2) {
    std::vector<double> s(size_t(N), 0.0);
    for (int i = 0; i < N; ++i) s[size_t(i)] = phi(window * i / N, 0.0);
    return from_samples(window, std::move(s));
  }
  if (n == 3) {
    std::vector<double> s(size_t(N) * size_t(N), 0.0);
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        s[size_t(i) * N + j] = phi(window * i / N, window * j / N);
    return from_samples_2d(window, N, std::move(s));
  }
  throw std::invalid_argument("graph domain dimension must be 2 or 3");
}

double LipschitzGraphDomain::node(int i, int j) const {
  i %= N_;
  if (i < 0) i += N_;
  if (n_ == 2) return samples_[size_t(i)];
  j %= N_;
  if (j < 0) j += N_;
  return samples_[size_t(i) * N_ + j];
}

void LipschitzGraphDomain::finish() {
  phi_min_ = *std::min_element(samples_.begin(), samples_.end());
  phi_max_ = *std::max_element(samples_.begin(), samples_.end());

  // Lipschitz constant of the interpolant = max discrete gradient over cells.
  M_ = 0.0;
  if (n_ == 2) {
    for (int i = 0; i < N_; ++i)
      M_ = std::max(M_, std::abs(node(i + 1) - node(i)) / h_);
  } else {
    // Bilinear cell gradient norm is maximal at a cell corner.
    for (int i = 0; i < N_; ++i)
      for (int j = 0; j < N_; ++j) {
        double du0 = (node(i + 1, j) - node(i, j)) / h_;
        double du1 = (node(i + 1, j + 1) - node(i, j + 1)) / h_;
        double dv0 = (node(i, j + 1) - node(i, j)) / h_;
        double dv1 = (node(i + 1, j + 1) - node(i + 1, j)) / h_;
        for (double du : {du0, du1})
          for (double dv : {dv0, dv1}) M_ = std::max(M_, std::hypot(du, dv));
      }
  }
  rho_lip_ = std::sqrt(1.0 + M_ * M_);

  // Cell-centered boundary grid with sigma-weights.
  if (n_ == 2) {
    for (int i = 0; i < N_; ++i) {
      double u = (i + 0.5) * h_;
      bpts_.push_back(Point(u, phi(u)));
      Point g = grad_phi(u);
      bw_.push_back(h_ * std::sqrt(1.0 + g[0] * g[0]));
      bnu_.push_back(normal_from_param(u));
    }
  } else {
    for (int i = 0; i < N_; ++i)
      for (int j = 0; j < N_; ++j) {
        double u = (i + 0.5) * h_, v = (j + 0.5) * h_;
        bpts_.push_back(Point(u, v, phi(u, v)));
        Point g = grad_phi(u, v);
        bw_.push_back(h_ * h_ * std::sqrt(1.0 + g[0] * g[0] + g[1] * g[1]));
        bnu_.push_back(normal_from_param(u, v));
      }
  }
}

double LipschitzGraphDomain::phi(double u, double v) const {
  u = wrap(u, window_);
  int i = std::min(int(u / h_), N_ - 1);
  double tu = u / h_ - i;
  if (n_ == 2) return node(i) * (1 - tu) + node(i + 1) * tu;
  v = wrap(v, window_);
  int j = std::min(int(v / h_), N_ - 1);
  double tv = v / h_ - j;
  return node(i, j) * (1 - tu) * (1 - tv) + node(i + 1, j) * tu * (1 - tv) +
         node(i, j + 1) * (1 - tu) * tv + node(i + 1, j + 1) * tu * tv;
}

Point LipschitzGraphDomain::grad_phi(double u, double v) const {
  u = wrap(u, window_);
  int i = std::min(int(u / h_), N_ - 1);
  if (n_ == 2) return Point((node(i + 1) - node(i)) / h_, 0.0);
  v = wrap(v, window_);
  int j = std::min(int(v / h_), N_ - 1);
  double tu = u / h_ - i, tv = v / h_ - j;
  double du = ((node(i + 1, j) - node(i, j)) * (1 - tv) +
               (node(i + 1, j + 1) - node(i, j + 1)) * tv) /
              h_;
  double dv = ((node(i, j + 1) - node(i, j)) * (1 - tu) +
               (node(i + 1, j + 1) - node(i + 1, j)) * tu) /
              h_;
  return Point(du, dv, 0.0);
}

Point LipschitzGraphDomain::normal_from_param(double u, double v) const {
  Point g = grad_phi(u, v);
  if (n_ == 2) {
    double den = std::sqrt(1.0 + g[0] * g[0]);
    return Point(g[0] / den, -1.0 / den);
  }
  double den = std::sqrt(1.0 + g[0] * g[0] + g[1] * g[1]);
  return Point(g[0] / den, g[1] / den, -1.0 / den);
}

bool LipschitzGraphDomain::inside(const Point& x) const { return rho(x) > 0.0; }

double LipschitzGraphDomain::rho(const Point& x) const {
  return n_ == 2 ? x[1] - phi(x[0]) : x[2] - phi(x[0], x[1]);
}

double LipschitzGraphDomain::phi_max_on(double u0, double u1, double v0,
                                        double v1) const {
  double best = std::max(phi(u0, v0), phi(u1, v0));
  if (n_ == 2) {
    for (int i = int(std::ceil(u0 / h_)); i <= int(std::floor(u1 / h_)); ++i)
      best = std::max(best, node(i));
    return best;
  }
  best = std::max({best, phi(u0, v1), phi(u1, v1)});
  // Bilinear max over an axis-aligned rectangle sits at a corner of some
  // cell-clipped subrectangle; checking grid lines through the range covers it.
  int i0 = int(std::floor(u0 / h_)), i1 = int(std::ceil(u1 / h_));
  int j0 = int(std::floor(v0 / h_)), j1 = int(std::ceil(v1 / h_));
  for (int i = i0; i <= i1; ++i) {
    double u = std::clamp(i * h_, u0, u1);
    for (int j = j0; j <= j1; ++j) {
      double v = std::clamp(j * h_, v0, v1);
      best = std::max(best, phi(u, v));
    }
  }
  return best;
}

double LipschitzGraphDomain::phi_min_on(double u0, double u1, double v0,
                                        double v1) const {
  double best = std::min(phi(u0, v0), phi(u1, v0));
  if (n_ == 2) {
    for (int i = int(std::ceil(u0 / h_)); i <= int(std::floor(u1 / h_)); ++i)
      best = std::min(best, node(i));
    return best;
  }
  best = std::min({best, phi(u0, v1), phi(u1, v1)});
  int i0 = int(std::floor(u0 / h_)), i1 = int(std::ceil(u1 / h_));
  int j0 = int(std::floor(v0 / h_)), j1 = int(std::ceil(v1 / h_));
  for (int i = i0; i <= i1; ++i) {
    double u = std::clamp(i * h_, u0, u1);
    for (int j = j0; j <= j1; ++j) {
      double v = std::clamp(j * h_, v0, v1);
      best = std::min(best, phi(u, v));
    }
  }
  return best;
}

double LipschitzGraphDomain::cube_rho_min(const Point& c, double s) const {
  double r = s / 2;
  double bottom = (n_ == 2 ? c[1] : c[2]) - r;
  if (n_ == 2) return bottom - phi_max_on(c[0] - r, c[0] + r);
  return bottom - phi_max_on(c[0] - r, c[0] + r, c[1] - r, c[1] + r);
}

bool LipschitzGraphDomain::cube_outside(const Point& c, double s) const {
  double r = s / 2;
  double top = (n_ == 2 ? c[1] : c[2]) + r;
  if (n_ == 2) return top < phi_min_on(c[0] - r, c[0] + r);
  return top < phi_min_on(c[0] - r, c[0] + r, c[1] - r, c[1] + r);
}

Point LipschitzGraphDomain::root_origin() const {
  return n_ == 2 ? Point(0.0, phi_min_) : Point(0.0, 0.0, phi_min_);
}

Point LipschitzGraphDomain::normal_at(const Point& bp, double tol) const {
  if (std::abs(rho(bp)) > tol)
    throw std::domain_error("point is not on the graph boundary");
  return n_ == 2 ? normal_from_param(bp[0]) : normal_from_param(bp[0], bp[1]);
}

double sawtooth(double eps, double x) {
  if (x <= 0.0) return 0.0;
  return x * std::sin(eps * std::log(1.0 / x));
}

double sawtooth_deriv(double eps, double x) {
  double t = eps * std::log(1.0 / x);
  return std::sin(t) - eps * std::cos(t);
}

}  // namespace lipkit
