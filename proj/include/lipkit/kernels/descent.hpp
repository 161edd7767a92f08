#pragma once

namespace lipkit {

// Dimension-descent consistency check for the Laplacian: every second
// derivative of the 2-D fundamental solution equals the line integral over
// the extra coordinate of the same derivative of the 3-D one,
//   d^2_{ij} F_2(x) = int_R d^2_{ij} F_3(x_1, x_2, t) dt,   i, j in {1, 2}.
// The report compares closed forms on the left against sinh-substituted
// Gauss-Legendre quadrature on the right at probe points off the origin,
// together with two structural identities of the right-hand side: the trace
// sums to zero away from the origin (harmonicity survives the descent) and
// the integrand is even under x -> -x.
struct DescentReport {
  double max_rel_error = 0.0;      // worst closed-form vs quadrature mismatch
  double d11_closed_form = 0.0;    // d^2_11 F_2 at x = (1, 0): 1/(2 pi)
  double d11_quadrature = 0.0;     // the descent integral at the same point
  double trace_residual = 0.0;     // |sum_i d^2_ii| normalized by |x|^{-2}
  double symmetry_gap = 0.0;       // max |value(x) - value(-x)| (normalized)
  int combos = 0;                  // derivative pairs checked
  int probes = 0;                  // probe points per pair
};

DescentReport dimension_descent_report();

}  // namespace lipkit
