#pragma once
#include <vector>

#include "lipkit/common/point.hpp"

namespace lipkit {

// Radial, even, nonnegative mollifier profile on R^{n-1} supported in the
// unit ball, zeta(t) = c * exp(-1/(1-|t|^2)) for |t| < 1 and exactly 0
// outside. The normalization constant is calibrated against the kernel's own
// quadrature nodes, so the discrete unit-mass identity sum(w) = 1 holds to
// machine precision, not only the continuum integral int(zeta) = 1.
class SmoothingKernel {
 public:
  // ambient_dim = n of the half space R^n_+; the profile lives on R^{n-1}.
  // radial_points: Gauss-Legendre nodes of the radial rule; angular_points:
  // uniform angular nodes (n = 3 only).
  explicit SmoothingKernel(int ambient_dim, int radial_points = 32,
                           int angular_points = 32);

  int ambient_dim() const { return n_; }

  // Normalized profile value at radius r; returns exactly 0.0 for r >= 1.
  double profile(double r) const;

  // Derivatives d^k/dt^k of the normalized 1-D profile at signed argument t,
  // orders 0..upto (upto <= 3). Planar boundaries only (ambient_dim = 2).
  void profile_derivs(double t, int upto, double* out) const;

  // Quadrature nodes over the unit ball of R^{n-1}; weights absorb the
  // profile, so sum_i w_i = 1 and the extension operator reads
  //   (T phi)(x', x_n) = sum_i w_i phi(x' + x_n t_i).
  struct Node {
    Point t;  // only the first n-1 coordinates are used
    double w;
  };
  const std::vector<Node>& nodes() const { return nodes_; }

  double weight_sum() const;                // diagnostics: == 1
  double first_moment(int axis) const;      // diagnostics: == 0 (evenness)

 private:
  int n_;
  double c_ = 1.0;  // normalization constant
  std::vector<Node> nodes_;
};

}  // namespace lipkit
