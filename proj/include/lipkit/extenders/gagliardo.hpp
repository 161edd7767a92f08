#pragma once
#include <functional>
#include <memory>
#include <string>

#include "lipkit/common/multi_index.hpp"
#include "lipkit/extenders/smoothing_kernel.hpp"
#include "lipkit/spaces/boundary_function.hpp"
#include "lipkit/spaces/grid_function.hpp"

namespace lipkit {

// Mollifier extension of boundary data phi: R^{n-1} -> R into the upper half
// space,
//   (T phi)(x', x_n) = int zeta(t) phi(x' + x_n t) dt,
// evaluated as sum_i w_i phi(x' + x_n t_i) over the kernel's node set. The
// boundary limit is phi itself; x_n <= 0 is rejected (boundary values belong
// to the trace path, not to T).
//
// Callable overloads take phi(u, v) directly (v ignored for n = 2); the
// BoundaryFunction overloads interpolate sampled data on a graph-domain
// parameter grid, periodic in the window.
double gagliardo_value(const std::function<double(double, double)>& phi, int n,
                       const SmoothingKernel& ker, const Point& x);
double gagliardo_value(const BoundaryFunction& phi, const SmoothingKernel& ker,
                       const Point& x);

GridFunction gagliardo_extend(const std::function<double(double, double)>& phi,
                              const SmoothingKernel& ker,
                              std::shared_ptr<const InteriorGrid> grid,
                              int max_order = 2);
GridFunction gagliardo_extend(const BoundaryFunction& phi, const SmoothingKernel& ker,
                              std::shared_ptr<const InteriorGrid> grid,
                              int max_order = 2);

// Exact derivative D^alpha (T phi) obtained by differentiating the kernel of
// the y-integral form (T phi)(x) = int x_n^{-1} zeta((y-x')/x_n) phi(y) dy:
// every derivative lands on the kernel, which is differentiated analytically,
// so no smoothness of phi beyond integrability is used. Planar boundaries
// (n = 2) with |alpha| <= 3; Gauss-Legendre rule over the support interval.
double gagliardo_derivative(const std::function<double(double)>& phi,
                            const SmoothingKernel& ker, const MultiIndex& alpha,
                            const Point& x, int gl_points = 48);
double gagliardo_derivative(const BoundaryFunction& phi, const SmoothingKernel& ker,
                            const MultiIndex& alpha, const Point& x,
                            int gl_points = 48);

// Scaled-derivative and oscillation diagnostics for T. The pointwise bound
//   |D^alpha (T phi)(x)| <= c x_n^{1-|alpha|} [phi']_BMO   (|alpha| >= 2)
// is reported as the max over an (x', x_n) probe grid of the left side times
// x_n^{|alpha|-1} / [phi']_BMO; the oscillation bound
//   [grad T phi]_BMO(half plane) <= c [phi']_BMO
// as the ratio of the two seminorms. Affine data ([phi']_BMO ~ 0) sets the
// exact flag instead of dividing by zero.
struct GagliardoBoundsOptions {
  int nx = 64;           // x' probes per window
  int nz = 40;           // x_n layers, log-spaced in [z_lo, z_hi]
  double z_lo = 1e-3;
  double z_hi = 0.4;
  int bmo_n = 96;        // square grid per axis for the half-plane BMO scan
  int gl_points = 48;
};

struct GagliardoDerivativeReport {
  bool exact = false;        // derivative vanishes identically (affine data)
  std::string note;
  double grad_phi_bmo = 0.0;  // [phi']_BMO of the boundary data
  double max_scaled = 0.0;    // max |D^alpha T phi| * x_n^{|alpha|-1} / BMO
  double bmo_ratio = 0.0;     // [grad T phi]_BMO(half plane) / [phi']_BMO
};

GagliardoDerivativeReport gagliardo_derivative_bounds(
    const BoundaryFunction& phi, const SmoothingKernel& ker, const MultiIndex& alpha,
    const GagliardoBoundsOptions& opt = {});

// Periodic piecewise-(bi)linear interpolation of sampled boundary data in the
// graph parameter(s); the shared accessor behind the BoundaryFunction
// overloads above (n = 3 uses the row-major sample layout of the domain).
double boundary_param_interp(const BoundaryFunction& phi, double u, double v = 0.0);

}  // namespace lipkit
