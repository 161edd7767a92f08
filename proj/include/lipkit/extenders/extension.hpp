#pragma once
#include <memory>
#include <vector>

#include "lipkit/geometry/reg_distance.hpp"
#include "lipkit/geometry/whitney.hpp"
#include "lipkit/spaces/boundary_function.hpp"
#include "lipkit/spaces/grid_function.hpp"

namespace lipkit {

// Parameters of the boundary-to-domain extension kernel.
struct ExtensionParams {
  // Finest boundary-distance scale the operator must serve; evaluation
  // points need rho(X) >= resolution/2 (the regularized distance is built to
  // cover exactly that range). Required.
  double resolution = 0.0;
  // Reachability margin mu > 1: the kernel radius is calibrated so that the
  // boundary stays within radius mu * rho(X)/2-fold reach on the probe set,
  // keeping the normalization integral bounded below with a safety factor.
  double mu = 1.25;
  // Kernel radius multiplier kappa; 0 requests per-domain calibration into
  // the feasible interval (mu/(2 c1), 1/c2], where [c1, c2] is the measured
  // band of rho_reg/rho.
  double kappa = 0.0;
  // Minimum admissible normalization integral, scaled by the kernel window
  // measure (2 * radius)^{n-1}; below it evaluation reports a kernel
  // parameter error (boundary sampling too coarse for the requested point).
  double norm_floor = 0.02;
  // Probe budget for the calibration of rho_reg/rho.
  int probes = 4000;
};

// Averaged-Taylor extension of a Whitney array from the boundary into the
// domain:
//   (E fdot)(X) = sum_Y K(X, Y) P(X, Y) w_Y,
// where P(X, Y) is the boundary Taylor polynomial of the array at Y and the
// kernel K(X, .) is a smooth bump in |X-Y| / radius(X), normalized to unit
// boundary integral for every X. The radius is
//   radius(X) = min(kappa * rho_reg(X), rho(X)),
// and the bump vanishes identically at twice its radius, so the support
// condition K(X, Y) = 0 for |X-Y| >= 2 rho(X) holds bit-exactly by
// construction. Constants are calibrated once per domain at startup.
class BoundaryExtension {
 public:
  BoundaryExtension(const Domain& dom, ExtensionParams prm);

  const Domain& domain() const { return *dom_; }
  double kappa() const { return kappa_; }
  const RegularizedDistance& reg_distance() const { return *rd_; }

  // Kernel weight K(X, y_index) (normalized; exactly 0.0 outside the support
  // window). O(boundary size) per call: the normalization is recomputed.
  double kernel(const Point& X, size_t y_index) const;

  // Extension value at X; throws std::runtime_error (kernel parameter) when
  // the normalization integral falls below the floor, std::domain_error when
  // X is outside the serviced range rho >= resolution/2.
  double value(const WhitneyArray& fdot, const Point& X) const;

  GridFunction apply(const WhitneyArray& fdot,
                     std::shared_ptr<const InteriorGrid> grid,
                     int max_order = 2) const;

  // Kernel health over a probe set: normalization min/max (scaled by the
  // window measure) and the exact count of support violations (kernel mass
  // at |X-Y| >= 2 rho(X)), which is zero by construction.
  struct Diagnostics {
    double c1 = 0.0, c2 = 0.0;      // measured band of rho_reg / rho
    double kappa = 0.0;
    double norm_min = 0.0, norm_max = 0.0;
    long support_checked = 0;
    long support_violations = 0;
  };
  Diagnostics diagnostics(const std::vector<Point>& probes) const;

  double band_c1() const { return c1_; }
  double band_c2() const { return c2_; }

 private:
  double radius_at(const Point& X, double* rho_out) const;
  double normalization(const Point& X, double radius) const;

  const Domain* dom_;
  ExtensionParams prm_;
  std::shared_ptr<WhitneyDecomposition> wd_;
  std::shared_ptr<RegularizedDistance> rd_;
  double kappa_ = 0.0;
  double c1_ = 0.0, c2_ = 0.0;
};

// The C^inf cutoff of the kernel: 1 on [0,1], strictly decreasing on (1,2),
// exactly 0.0 on [2,inf).
double extension_cutoff(double r);

}  // namespace lipkit
