#pragma once
#include <vector>

#include "lipkit/common/point.hpp"

namespace lipkit {

// Common face of the two domain kinds. rho is the boundary-distance weight
// used throughout: the true Euclidean distance for polygons, the vertical gap
// X_n - phi(X') for graph domains (equivalent to the distance within a factor
// sqrt(1+M^2); rho_lipschitz reports that factor).
class Domain {
 public:
  virtual ~Domain() = default;

  virtual int dim() const = 0;
  virtual bool inside(const Point& x) const = 0;
  virtual double rho(const Point& x) const = 0;  // > 0 strictly inside
  virtual double rho_lipschitz() const = 0;

  // Exact min of rho over the closed cube (center c, side s); <= 0 whenever
  // the cube is not contained in the open domain.
  virtual double cube_rho_min(const Point& c, double s) const = 0;
  // True only when the closed cube certainly misses the domain closure.
  virtual bool cube_outside(const Point& c, double s) const = 0;

  // Dyadic root cell for Whitney decompositions.
  virtual Point root_origin() const = 0;
  virtual double root_side() const = 0;

  // Cell-centered boundary quadrature grid: points, sigma-weights, normals.
  virtual const std::vector<Point>& boundary_points() const = 0;
  virtual const std::vector<double>& boundary_weights() const = 0;
  virtual const std::vector<Point>& boundary_normals() const = 0;

  // Outward unit normal at a point on the sampled boundary; throws
  // std::domain_error when the point is not on the boundary (tolerance tol).
  virtual Point normal_at(const Point& bp, double tol = 1e-9) const = 0;
};

}  // namespace lipkit
