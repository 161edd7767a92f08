#pragma once
#include <array>
#include <memory>
#include <vector>

#include "lipkit/common/multi_index.hpp"
#include "lipkit/extenders/gagliardo.hpp"
#include "lipkit/extenders/smoothing_kernel.hpp"
#include "lipkit/geometry/graph_domain.hpp"
#include "lipkit/spaces/grid_function.hpp"
#include "lipkit/spaces/norm_params.hpp"

namespace lipkit {

using Matrix3 = std::array<std::array<double, 3>, 3>;

// Bi-Lipschitz straightening of a graph domain G = {X_n > phi(X')}: the map
//   lambda(x', x_n) = (x', C_eff * x_n + (T phi)(x', x_n)),   C_eff = C * max(M, 1),
// sends the upper half space onto G, with inverse kappa recovered by monotone
// bisection in x_n. The classical constant C*M degenerates for flat graphs
// (M = 0), hence the max(M, 1) floor. det lambda' = C_eff + d(T phi)/dx_n
// stays positive once C exceeds the mollifier's slope constant.
class FlatteningMap {
 public:
  FlatteningMap(std::shared_ptr<const LipschitzGraphDomain> dom,
                const SmoothingKernel& ker, double C = 10.0);

  const LipschitzGraphDomain& domain() const { return *dom_; }
  const SmoothingKernel& kernel() const { return ker_; }
  double C() const { return C_; }
  double c_eff() const { return ceff_; }

  double t_phi(const Point& x) const;  // (T phi)(x', x_n), x_n > 0

  Point flatten(const Point& x) const;    // lambda; throws for x_n <= 0
  Point unflatten(const Point& X) const;  // kappa; bisection to 1e-12 in x_n

  // Jacobian of lambda at x: lower-triangular block form
  //   [ I            0      ]
  //   [ grad_x' Tphi  C_eff + d_n Tphi ],
  // the exact derivative of the implemented (node-quadrature) map.
  Matrix3 jacobian(const Point& x) const;
  double det_jacobian(const Point& x) const;

  // Jacobian of kappa at X in G, from the inverse-function formula applied
  // to jacobian() at kappa(X).
  Matrix3 kappa_jacobian(const Point& X) const;

 private:
  std::shared_ptr<const LipschitzGraphDomain> dom_;
  SmoothingKernel ker_;
  double C_, ceff_;
};

// max over a probe grid of ||D^alpha kappa'(X)|| * (X_n - phi(X'))^{|alpha|}
// divided by [phi']_BMO (|alpha| >= 1, entries differentiated by gap-scaled
// central differences). Affine data sets the exact flag.
struct FlattenBoundsReport {
  bool exact = false;
  double grad_phi_bmo = 0.0;
  double max_scaled = 0.0;
};
FlattenBoundsReport flatten_derivative_bounds(const FlatteningMap& map,
                                              const MultiIndex& alpha, int nx = 48,
                                              int nz = 32, double gap_lo = 1e-2,
                                              double gap_hi = 0.4);

// Equivalence band of the vertical gap: min/max over a probe grid of
// (lambda_n(x) - phi(x')) / x_n. Positive and resolution-independent for a
// bi-Lipschitz map.
struct GapBand {
  double lo = 0.0, hi = 0.0;
};
GapBand flatten_gap_band(const FlatteningMap& map, int nx = 64, int nz = 48,
                         double z_lo = 1e-3, double z_hi = 0.5);

// Norm transport check: ratios ||u o kappa||_{V(G)} / ||u||_{V(half space)}
// over a (p, s) grid, order m. Entries where both norms vanish are NaN
// ("0/0: skip"); lo/hi summarize the defined entries. u must be compactly
// supported in its grid with image under lambda inside G's root box.
struct NormChangeResult {
  std::vector<double> p_list, s_list;
  std::vector<double> ratio;  // row-major over (p, s); NaN marks skipped
  double lo = 0.0, hi = 0.0;
  int defined = 0;
};
NormChangeResult change_of_variables_norm_check(const GridFunction& u,
                                                const FlatteningMap& map,
                                                const std::vector<double>& p_list,
                                                const std::vector<double>& s_list,
                                                int m, double grid_h,
                                                double rho_cut = 0.0);

}  // namespace lipkit
