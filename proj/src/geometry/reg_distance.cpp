#include "lipkit/geometry/reg_distance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lipkit {

namespace {
// C-infinity bump, psi(0) = 1, support |t| < 1.
double psi(double t2) {
  if (t2 >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - t2));
}
}  // namespace

RegularizedDistance::RegularizedDistance(const WhitneyDecomposition& wd, double beta)
    : wd_(&wd),
      n_(wd.domain().dim()),
      origin_(wd.origin()),
      root_side_(wd.root_side()),
      beta_(beta > 0 ? beta : (n_ == 2 ? 0.85 : 0.95)) {
  // A cube's own center must be active anywhere inside the cube: the farthest
  // corner sits at sqrt(n)/2 * side, so beta must exceed that ratio.
  if (beta_ <= std::sqrt(double(n_)) / 2)
    throw std::invalid_argument("regularized distance: beta too small");
  center_rho_.reserve(wd.cubes().size());
  for (const WhitneyCube& q : wd.cubes())
    center_rho_.push_back(wd.domain().rho(q.center));
}

double RegularizedDistance::weight_sum(const Point& X, double* weighted_value) const {
  double wsum = 0.0, vsum = 0.0;
  for (int level : wd_->levels()) {
    double s = wd_->side_at(level);
    double reach = beta_ * s;  // support radius of cubes at this level
    std::array<int, 3> lo{0, 0, 0}, hi{0, 0, 0};
    for (int i = 0; i < n_; ++i) {
      lo[size_t(i)] = int(std::floor((X[i] - reach - origin_[i]) / s - 0.5));
      hi[size_t(i)] = int(std::ceil((X[i] + reach - origin_[i]) / s - 0.5));
    }
    std::array<int, 3> idx{0, 0, 0};
    for (idx[0] = lo[0]; idx[0] <= hi[0]; ++idx[0])
      for (idx[1] = lo[1]; idx[1] <= hi[1]; ++idx[1]) {
        int k2hi = n_ == 3 ? hi[2] : lo[2];
        for (idx[2] = lo[2]; idx[2] <= k2hi; ++idx[2]) {
          int id = wd_->cube_at(level, idx);
          if (id < 0) continue;
          const WhitneyCube& q = wd_->cubes()[size_t(id)];
          double r2 = 0.0;
          for (int i = 0; i < n_; ++i) {
            double d = X[i] - q.center[i];
            r2 += d * d;
          }
          double w = psi(r2 / (reach * reach));
          if (w > 0) {
            wsum += w;
            vsum += w * center_rho_[size_t(id)];
          }
        }
      }
  }
  if (weighted_value) *weighted_value = vsum;
  return wsum;
}

double RegularizedDistance::value(const Point& X) const {
  double vsum = 0.0;
  double wsum = weight_sum(X, &vsum);
  if (wsum <= 0.0)
    throw std::domain_error("regularized distance: no cube covers this point");
  return vsum / wsum;
}

Point RegularizedDistance::gradient(const Point& X) const {
  double step = 1e-5 * std::max(value(X), wd_->min_side());
  Point g;
  for (int i = 0; i < n_; ++i) {
    Point xp = X, xm = X;
    xp[i] += step;
    xm[i] -= step;
    g[i] = (value(xp) - value(xm)) / (2 * step);
  }
  return g;
}

double RegularizedDistance::hessian_max_abs(const Point& X) const {
  double step = 1e-4 * std::max(value(X), wd_->min_side());
  double v0 = value(X);
  double best = 0.0;
  for (int i = 0; i < n_; ++i) {
    Point xp = X, xm = X;
    xp[i] += step;
    xm[i] -= step;
    best = std::max(best,
                    std::abs((value(xp) - 2 * v0 + value(xm)) / (step * step)));
    for (int j = i + 1; j < n_; ++j) {
      Point pp = X, pm = X, mp = X, mm = X;
      pp[i] += step;
      pp[j] += step;
      pm[i] += step;
      pm[j] -= step;
      mp[i] -= step;
      mp[j] += step;
      mm[i] -= step;
      mm[j] -= step;
      best = std::max(best, std::abs((value(pp) - value(pm) - value(mp) + value(mm)) /
                                     (4 * step * step)));
    }
  }
  return best;
}

RegularizedDistance::Band RegularizedDistance::calibrate(
    const std::vector<Point>& pts) const {
  if (pts.empty()) throw std::invalid_argument("calibrate: no sample points");
  double c1 = 1e300, c2 = 0.0;
  for (const Point& X : pts) {
    double r = wd_->domain().rho(X);
    if (r <= 0) continue;
    double ratio = value(X) / r;
    c1 = std::min(c1, ratio);
    c2 = std::max(c2, ratio);
  }
  if (c2 == 0.0) throw std::invalid_argument("calibrate: no interior points");
  return {c1, c2};
}

}  // namespace lipkit
