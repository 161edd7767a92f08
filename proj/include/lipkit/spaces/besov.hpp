#pragma once
#include <vector>

#include "lipkit/spaces/boundary_function.hpp"

namespace lipkit {

struct BesovBreakdown {
  double lp;        // ||g||_{L_p} on the boundary
  double seminorm;  // double-integral smoothness seminorm
  double total;     // lp + seminorm
};

// First-order Besov norm: boundary L_p norm plus the seminorm
//   ( sum_{pairs} w_i w_j |g(X_i)-g(X_j)|^p / |X_i-X_j|^{n-1+sp} )^{1/p},
// a full deterministic double sum over boundary quadrature pairs with the
// diagonal excluded below the boundary resolution (the discrete data carries
// no information under grid scale).
BesovBreakdown besov_norm_parts(const BoundaryFunction& g, double p, double s);
double besov_norm(const BoundaryFunction& g, double p, double s);
double besov_seminorm(const BoundaryFunction& g, double p, double s);

// L_p modulus of continuity: p-th root of the double integral of
// |g(X)-g(Y)|^p over boundary pairs with |X-Y| < t. Nondecreasing in t;
// throws std::domain_error when t is below the boundary resolution.
double lp_modulus(const BoundaryFunction& g, double p, double t);

struct HigherBesovResult {
  double total;                         // lp_sum + semi_sum
  double lp_sum;                        // sum_alpha ||f_alpha||_{L_p}
  double semi_sum;                      // sum_alpha seminorm_alpha
  std::vector<double> per_alpha_semi;   // aligned with fdot.indices()
};

// Higher-order Besov norm of a Whitney array:
//   sum_alpha ||f_alpha||_{L_p}
//   + sum_alpha ( int r_alpha(t)^p / t^{p(m-1+s-|alpha|)+n-1} dt )^{1/p},
// where r_alpha(t) is the L_p modulus of the Taylor remainder R_alpha over
// pairs closer than t. The t-integral is truncated to the resolved range
// [h, 2*diam] and evaluated on a dyadic ladder by log-midpoint quadrature;
// values are finite truncations by construction.
HigherBesovResult higher_besov_norm(const WhitneyArray& fdot, double p, double s);

struct CompatibilityReport {
  bool vacuous = false;   // m == 1: no conditions to check
  double max_residual = 0.0;
  double mean_residual = 0.0;
};

// Residuals of the tangential-derivative compatibility relations
//   (nu_j d_k - nu_k d_j) f_alpha = nu_j f_{alpha+e_k} - nu_k f_{alpha+e_j}
// over all |alpha| <= m-2 and j < k, with the left side evaluated by
// finite differences along the boundary grid. Polygon corners (where the
// normal jumps) are skipped.
CompatibilityReport compatibility_check(const WhitneyArray& fdot);

}  // namespace lipkit
