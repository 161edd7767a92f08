#include "lipkit/extenders/extension.hpp"

#include <cmath>
#include <stdexcept>

#include "lipkit/spaces/taylor.hpp"

namespace lipkit {

double extension_cutoff(double r) {
  if (r <= 1.0) return 1.0;
  if (r >= 2.0) return 0.0;
  // C^inf partition step between the plateaus, exact at both ends.
  double a = std::exp(-1.0 / (2.0 - r));
  double b = std::exp(-1.0 / (r - 1.0));
  return a / (a + b);
}

BoundaryExtension::BoundaryExtension(const Domain& dom, ExtensionParams prm)
    : dom_(&dom), prm_(prm) {
  if (!(prm_.resolution > 0.0))
    throw std::invalid_argument("BoundaryExtension: resolution must be set");
  if (!(prm_.mu > 1.0))
    throw std::invalid_argument("BoundaryExtension: mu must exceed 1");

  // The regularized distance must cover rho >= resolution/2, which needs
  // Whitney cubes of side <= rho/4 there.
  wd_ = std::make_shared<WhitneyDecomposition>(dom, prm_.resolution / 8.0);
  rd_ = std::make_shared<RegularizedDistance>(*wd_);

  // Measure the band of rho_reg/rho on the cube centers (they sweep every
  // distance generation) and place kappa inside the feasible interval
  //   (mu / (2 c1), 1 / c2]:
  // the upper end keeps the support inside |X-Y| < 2 rho(X); the lower end
  // keeps the boundary within reach of the bump's interior plateau with
  // margin mu.
  std::vector<Point> probes;
  size_t stride = std::max<size_t>(1, wd_->cubes().size() / size_t(prm_.probes));
  for (size_t i = 0; i < wd_->cubes().size(); i += stride)
    probes.push_back(wd_->cubes()[i].center);
  RegularizedDistance::Band band = rd_->calibrate(probes);
  c1_ = band.c1;
  c2_ = band.c2;

  if (prm_.kappa > 0.0) {
    kappa_ = prm_.kappa;
  } else {
    double lo = prm_.mu / (2.0 * c1_), hi = 1.0 / c2_;
    if (!(lo < hi))
      throw std::runtime_error(
          "BoundaryExtension: no feasible kernel radius (kernel parameter): "
          "regularized-distance band too wide for the requested margin");
    kappa_ = std::sqrt(lo * hi);
  }
}

double BoundaryExtension::radius_at(const Point& X, double* rho_out) const {
  double rho = dom_->rho(X);
  if (rho_out) *rho_out = rho;
  if (!(rho >= 0.5 * prm_.resolution))
    throw std::domain_error(
        "BoundaryExtension: point below the serviced distance range");
  // min with rho makes the support condition |X-Y| < 2 rho(X) hold by
  // construction, independent of how tight the calibrated band is.
  return std::min(kappa_ * rd_->value(X), rho);
}

double BoundaryExtension::normalization(const Point& X, double radius) const {
  const std::vector<Point>& bp = dom_->boundary_points();
  const std::vector<double>& bw = dom_->boundary_weights();
  double cut = 2.0 * radius, cut2 = cut * cut;
  double z = 0.0;
  for (size_t j = 0; j < bp.size(); ++j) {
    Point d = X - bp[j];
    double r2 = dot(d, d);
    if (r2 >= cut2) continue;
    z += bw[j] * extension_cutoff(std::sqrt(r2) / radius);
  }
  return z;
}

double BoundaryExtension::kernel(const Point& X, size_t y_index) const {
  double radius = radius_at(X, nullptr);
  Point d = X - dom_->boundary_points()[y_index];
  double r = norm(d);
  if (r >= 2.0 * radius) return 0.0;
  double e = extension_cutoff(r / radius);
  if (e == 0.0) return 0.0;
  return e / normalization(X, radius);
}

double BoundaryExtension::value(const WhitneyArray& fdot, const Point& X) const {
  if (&fdot.domain() != dom_)
    throw std::invalid_argument(
        "extension: data array lives on a different domain's boundary grid");
  double rho = 0.0;
  double radius = radius_at(X, &rho);
  const std::vector<Point>& bp = dom_->boundary_points();
  const std::vector<double>& bw = dom_->boundary_weights();
  double cut = 2.0 * radius, cut2 = cut * cut;
  int n = dom_->dim();
  double z = 0.0, acc = 0.0;
  MultiIndex zero = MultiIndex::zero(n);
  for (size_t j = 0; j < bp.size(); ++j) {
    Point d = X - bp[j];
    double r2 = dot(d, d);
    if (r2 >= cut2) continue;
    double e = bw[j] * extension_cutoff(std::sqrt(r2) / radius);
    if (e == 0.0) continue;
    z += e;
    acc += e * taylor_polynomial(fdot, zero, X, j);
  }
  double scaled = z / std::pow(cut, n - 1);
  if (!(scaled >= prm_.norm_floor))
    throw std::runtime_error(
        "BoundaryExtension: normalization integral below floor (kernel "
        "parameter): boundary sampling too coarse at this point");
  return acc / z;
}

GridFunction BoundaryExtension::apply(const WhitneyArray& fdot,
                                      std::shared_ptr<const InteriorGrid> grid,
                                      int max_order) const {
  GridFunction out(grid, 1, max_order);
  for (size_t i = 0; i < grid->size(); ++i)
    out.set(i, 0, value(fdot, grid->points()[i]));
  return out;
}

BoundaryExtension::Diagnostics BoundaryExtension::diagnostics(
    const std::vector<Point>& probes) const {
  Diagnostics d;
  d.c1 = c1_;
  d.c2 = c2_;
  d.kappa = kappa_;
  d.norm_min = 1e300;
  const std::vector<Point>& bp = dom_->boundary_points();
  int n = dom_->dim();
  for (const Point& X : probes) {
    double rho = 0.0;
    double radius = radius_at(X, &rho);
    double z = normalization(X, radius) / std::pow(2.0 * radius, n - 1);
    d.norm_min = std::min(d.norm_min, z);
    d.norm_max = std::max(d.norm_max, z);
    for (size_t j = 0; j < bp.size(); ++j) {
      Point diff = X - bp[j];
      if (norm(diff) >= 2.0 * rho) {
        ++d.support_checked;
        if (extension_cutoff(norm(diff) / radius) != 0.0) ++d.support_violations;
      }
    }
  }
  return d;
}

}  // namespace lipkit
