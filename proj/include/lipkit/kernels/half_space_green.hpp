#pragma once
#include <array>

#include "lipkit/common/multi_index.hpp"
#include "lipkit/common/point.hpp"
#include "lipkit/common/rng.hpp"
#include "lipkit/kernels/model_operator.hpp"

namespace lipkit {

// Reflection across the wall {x_n = 0} of the half-space R^n_+.
Point wall_reflection(int n, Point y);

// Fundamental solution F of the model operator:
//   laplace_2d:   -(2 pi)^{-1} log|x|
//   laplace_3d:    (4 pi |x|)^{-1}
//   bilaplace_2d:  (8 pi)^{-1} |x|^2 log|x|
// Throws std::domain_error at x = 0.
double fundamental_solution(const ModelOperator& op, const Point& x);

// |L_h F|(x): compact finite-difference stencil for the operator (5-point
// Laplacian, 13-point bilaplacian, 7-point in 3-D) with one Richardson
// extrapolation step, step size h_rel * |x|.  Away from the singularity this
// is a numerical zero; callers compare against the natural magnitude
// (1 + |F(x)|) / |x|^{2m} of the cancelled terms.
double fundamental_stencil_residual(const ModelOperator& op, const Point& x,
                                    double h_rel = 0.02);

// Dirichlet Green function of the half-space x_n > 0 (method of images for
// the Laplacians, Boggio's closed form for the 2-D bilaplacian).  Requires
// x, y in the closed half-space; throws std::domain_error at x = y where
// the fundamental singularity sits.
double half_space_green(const ModelOperator& op, const Point& x, const Point& y);

// Regular part R(x,y) = F(x-y) - G(x,y).  Smooth across x = y; defined for
// all pairs with x != ybar (i.e. everywhere except both points on the wall
// at the same spot).
double green_residual(const ModelOperator& op, const Point& x, const Point& y);

// Mixed derivative d^alpha_x d^beta_y R(x,y) from hand-coded closed forms
// (binomial expansion over exact derivative tables of log|v|, |v|^{-1},
// |u|^2 in the variables u = x - y, v = x - ybar).  Requires
// |alpha|, |beta| <= m; throws std::invalid_argument otherwise.
double green_residual_derivative(const ModelOperator& op, const MultiIndex& alpha,
                                 const MultiIndex& beta, const Point& x,
                                 const Point& y);

// Poisson kernels P_j(x, y') of the half-space Dirichlet problem, for wall
// points y' (the normal coordinate of y_wall must be exactly 0).  Closed
// forms exist for laplace_2d/laplace_3d (j = 0) and bilaplace_2d (j = 0, 1);
// any other (op, j) throws std::domain_error (capability error).
double poisson_kernel(const ModelOperator& op, int j, const Point& x,
                      const Point& y_wall);

// Decay statistic of the residual derivatives: samples (x, y) pairs with
// heights and horizontal separations log-uniform across four decades and
// records per-decade suprema of |d^alpha_x d^beta_y R| * |x - ybar|^n.
// For a kernel obeying the |x - ybar|^{-n} envelope the statistic is
// scale-free, so the decade suprema agree up to sampling noise.
struct ResidualDecayReport {
  std::array<double, 4> decade_sup{0.0, 0.0, 0.0, 0.0};
  std::array<long, 4> decade_count{0, 0, 0, 0};
  double overall_sup = 0.0;
  double drift = 0.0;  // max decade supremum / min decade supremum
};

ResidualDecayReport residual_decay_check(const ModelOperator& op,
                                         const MultiIndex& alpha,
                                         const MultiIndex& beta, long pairs,
                                         Rng& rng);

// Same, aggregated over all top-order index pairs |alpha| = |beta| = m.
ResidualDecayReport residual_decay_check_all(const ModelOperator& op, long pairs,
                                             Rng& rng);

}  // namespace lipkit
