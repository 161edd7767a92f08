#pragma once
#include "lipkit/spaces/grid_function.hpp"
#include "lipkit/spaces/norm_params.hpp"

namespace lipkit {

// Weighted Sobolev norm (sum over all derivative orders 0..m of the
// rho-weighted L_p integrals, midpoint quadrature):
//   ( sum_{|alpha| <= m} int |D^alpha U|^p rho^{pa} dX )^{1/p}.
// The weight exponent pa defaults to p*a but can be overridden.
double weighted_sobolev_norm_W(const GridFunction& U, const NormParams& prm,
                               double pa);
double weighted_sobolev_norm_W(const GridFunction& U, const NormParams& prm);

// Rho-graded variant: every derivative order is scaled to top order,
//   ( sum_{|beta| <= m} int |rho^{|beta|-m} D^beta U|^p rho^{pa} dX )^{1/p}.
double weighted_sobolev_norm_V(const GridFunction& U, const NormParams& prm);

// Top-order part alone: ( sum_{|gamma| = m} int |D^gamma U|^p rho^{pa} dX )^{1/p}.
double top_order_seminorm(const GridFunction& U, const NormParams& prm);

// ||U||_V / top-order seminorm; the Hardy-type inequality bounds this by a
// constant multiple of 1/s for compactly supported U.
double hardy_ratio(const GridFunction& U, const NormParams& prm);

// One-dimensional reduction for collar_bump profiles (p = 2, m = 1). In the
// log coordinate tau = ln(delta/rho) on [0, L], the profile w = sin(omega*tau)
// has lower-to-top quotient N/T = 1/q with
//   q(omega) = int_0^L (w' - s*w)^2 dtau / int_0^L w^2 dtau,
// so the discrete Hardy ratio of the matching collar bump is ~ sqrt(1 + 1/q).
double log_profile_quotient(double s, double L, double omega);

// Frequency whose quotient best approaches target_q (target_q <= 0 requests
// the minimizer, i.e. the largest achievable Hardy ratio for the range L).
struct ProfileFrequency {
  double omega;
  double q;
};
ProfileFrequency collar_frequency(double s, double L, double target_q);

}  // namespace lipkit
