#pragma once
#include <vector>

#include "lipkit/geometry/whitney.hpp"

namespace lipkit {

// Smooth distance substitute: a partition-of-unity average, over Whitney
// cubes, of the boundary distance at the cube centers. Smoothing the center
// distances (rather than the cube sides) keeps the band rho_reg/rho tight,
// which the boundary-extension kernel needs (its support condition requires
// c2 < 2*c1). Valid where cubes exist, i.e. rho(X) >= ~4 * min_side.
class RegularizedDistance {
 public:
  explicit RegularizedDistance(const WhitneyDecomposition& wd, double beta = 0.0);

  double value(const Point& X) const;  // throws std::domain_error off-support
  Point gradient(const Point& X) const;         // central differences
  double hessian_max_abs(const Point& X) const;  // max |D^2| entry, central

  // min/max of value/rho over the sample points; feeds kernel calibration.
  struct Band {
    double c1, c2;
  };
  Band calibrate(const std::vector<Point>& pts) const;

  double beta() const { return beta_; }

 private:
  double weight_sum(const Point& X, double* weighted_value) const;

  const WhitneyDecomposition* wd_;
  int n_;
  Point origin_;
  double root_side_;
  double beta_;
  std::vector<double> center_rho_;
  // per level: map from dyadic index key to cube id
  std::vector<int> levels_;
};

}  // namespace lipkit
