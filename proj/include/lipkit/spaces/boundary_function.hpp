#pragma once
#include <functional>
#include <vector>

#include "lipkit/common/multi_index.hpp"
#include "lipkit/geometry/domain.hpp"
#include "lipkit/geometry/scan_field.hpp"

namespace lipkit {

// Sampled function on a domain's boundary quadrature grid. Samples are
// aligned index-for-index with domain().boundary_points(); the surface
// measure weights come from boundary_weights(). Supports l >= 1 real
// components (vector data is handled componentwise, norms Euclidean).
class BoundaryFunction {
 public:
  explicit BoundaryFunction(const Domain& dom, int components = 1);
  static BoundaryFunction from_function(const Domain& dom,
                                        const std::function<double(const Point&)>& f);

  const Domain& domain() const { return *dom_; }
  int components() const { return l_; }
  size_t size() const { return vals_[0].size(); }

  double value(size_t i, int c = 0) const { return vals_[size_t(c)][i]; }
  void set(size_t i, int c, double v) { vals_[size_t(c)][i] = v; }
  const std::vector<double>& values(int c = 0) const { return vals_[size_t(c)]; }

  // (sum_i w_i |v_i|^p)^{1/p} with |v_i| the Euclidean norm across components.
  double lp_norm(double p) const;

  // Periodic linear interpolation in the graph parameter; requires the domain
  // to be a two-dimensional graph domain (throws std::domain_error otherwise).
  double interp_param(double u, int c = 0) const;

  // One component as a 1-D scan field over the arclength coordinate.
  // periodic=true marks the arclength axis as wrapping (period = perimeter);
  // leave false for data with a seam discontinuity at the basepoint.
  ScanField to_scan_field(int c = 0, bool periodic = false) const;

 private:
  const Domain* dom_;
  int l_;
  std::vector<std::vector<double>> vals_;
};

// Smallest boundary quadrature cell width; the resolution floor for pair
// integrals and moduli of continuity on the boundary.
double boundary_resolution(const Domain& dom);

// Upper bound for the boundary diameter (bounding-box diagonal).
double boundary_diameter(const Domain& dom);

// Family {f_alpha : |alpha| <= m-1} of boundary functions sharing one grid,
// indexed by multi-indices in graded-lex order. The index set is always
// complete; members are value-initialized to zero.
class WhitneyArray {
 public:
  WhitneyArray(const Domain& dom, int m, int components = 1);

  // Fill from globally defined data: member alpha gets dval(alpha, X) at each
  // boundary sample X (single-component).
  static WhitneyArray from_global(
      const Domain& dom, int m,
      const std::function<double(const MultiIndex&, const Point&)>& dval);

  const Domain& domain() const { return *dom_; }
  int order() const { return m_; }
  int components() const { return comp_[0].components(); }
  size_t boundary_size() const { return comp_[0].size(); }
  const std::vector<MultiIndex>& indices() const { return idx_; }

  BoundaryFunction& component(const MultiIndex& alpha);
  const BoundaryFunction& component(const MultiIndex& alpha) const;

 private:
  const Domain* dom_;
  int m_;
  std::vector<MultiIndex> idx_;
  std::vector<BoundaryFunction> comp_;

  size_t find(const MultiIndex& alpha) const;
};

}  // namespace lipkit
