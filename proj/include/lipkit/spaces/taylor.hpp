#pragma once
#include <functional>

#include "lipkit/spaces/boundary_function.hpp"

namespace lipkit {

// Boundary Taylor polynomial attached to the array member alpha:
//   P_alpha(X, Y) = sum_{|beta| <= m-1-|alpha|} f_{alpha+beta}(Y) (X-Y)^beta / beta!
// with Y the boundary sample y_index and X an arbitrary point. Throws
// std::out_of_range when |alpha| > m-1.
double taylor_polynomial(const WhitneyArray& f, const MultiIndex& alpha,
                         const Point& X, size_t y_index, int comp = 0);

// Taylor remainder between two boundary samples:
//   R_alpha(X, Y) = f_alpha(X) - P_alpha(X, Y).
double taylor_remainder(const WhitneyArray& f, const MultiIndex& alpha,
                        size_t x_index, size_t y_index, int comp = 0);

// Layered-simplex integral form of the Taylor remainder for data given on a
// two-dimensional graph boundary. With r = m-1-|alpha| and the parameter
// points xu, yu, evaluates
//   sum over (j_1..j_r) in {1,2}^r of the iterated integral over
//   0 <= t_r <= ... <= t_1 <= 1 of
//     [f_{alpha+e_{j_1}+...+e_{j_r}}(yu + t_r (xu-yu)) - same at yu]
//     * prod_k dPhi_{j_k}(yu + t_k (xu-yu)) * (xu-yu)
// where Phi(u) = (u, phi(u)), so dPhi_1 = 1 and dPhi_2 = phi'. For data whose
// tangential derivatives satisfy the compatibility relations this equals the
// pointwise Taylor remainder. Gauss-Legendre rule per nesting level.
//
// f evaluates the array member gamma at graph parameter u; dphi is the graph
// function's derivative. Requires |alpha| <= m-2 (so r >= 1).
double simplex_remainder_integral(
    int m, const MultiIndex& alpha,
    const std::function<double(const MultiIndex&, double)>& f,
    const std::function<double(double)>& dphi, double xu, double yu,
    int gl_points = 16);

// Same, wired to a WhitneyArray on a 2-D graph domain: members are evaluated
// by periodic linear interpolation of the boundary samples and the slope
// comes from the domain's piecewise-linear interpolant.
double simplex_remainder_integral(const WhitneyArray& f, const MultiIndex& alpha,
                                  double xu, double yu, int gl_points = 16,
                                  int comp = 0);

}  // namespace lipkit
