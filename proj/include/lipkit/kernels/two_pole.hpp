#pragma once

namespace lipkit {

// The two-pole integral
//   I(N, eps, delta, a, b, zeta)
//     = int_{R^N} (|eta| + a)^{-(N+eps)} (|eta - zeta| + b)^{-(N-delta)} d eta
// (zeta enters through its length only; the integral is rotation invariant)
// together with its bound shape a^{-eps} (|zeta| + a + b)^{delta - N}.  The
// ratio value / bound_shape is the quantity that stays bounded over the
// whole admissible parameter range.
struct TwoPoleIntegral {
  double value = 0.0;        // I by annular quadrature
  double bound_shape = 0.0;  // a^{-eps} (|zeta| + a + b)^{delta - N}
  double ratio = 0.0;        // value / bound_shape
};

// Requires N in {1,2,3}, eps > 0, 0 < delta < N, a > 0, b >= 0, zeta >= 0
// (anything else makes the integral divergent or ill-posed and throws
// std::invalid_argument).  Quadrature: log-spaced radial panels with
// geometric refinement toward the second pole |eta| = zeta, Gauss-Legendre
// panels in the polar angle, and an analytic power-law tail.
TwoPoleIntegral two_pole_integral(int N, double eps, double delta, double a,
                                  double b, double zeta);

}  // namespace lipkit
