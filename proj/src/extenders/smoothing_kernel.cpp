#include "lipkit/extenders/smoothing_kernel.hpp"

#include <cmath>
#include <stdexcept>

#include "lipkit/common/quadrature.hpp"

namespace lipkit {

namespace {

// Unnormalized profile exp(-1/(1-r^2)); exactly zero outside the unit ball.
double raw_profile(double r) {
  double q = 1.0 - r * r;
  if (q <= 0.0) return 0.0;
  return std::exp(-1.0 / q);
}

}  // namespace

SmoothingKernel::SmoothingKernel(int ambient_dim, int radial_points,
                                 int angular_points)
    : n_(ambient_dim) {
  if (n_ != 2 && n_ != 3)
    throw std::invalid_argument("SmoothingKernel: ambient dimension must be 2 or 3");
  if (radial_points < 4 || radial_points > 64)
    throw std::invalid_argument("SmoothingKernel: radial points out of range");
  const GaussLegendre& gl = gauss_legendre(radial_points);

  double mass = 0.0;
  if (n_ == 2) {
    // 1-D rule on [-1, 1]: map the [0,1] nodes symmetrically.
    for (size_t i = 0; i < gl.x.size(); ++i) {
      double t = 2.0 * gl.x[i] - 1.0;
      double w = 2.0 * gl.w[i] * raw_profile(t);
      nodes_.push_back({Point(t, 0.0), w});
      mass += w;
    }
  } else {
    if (angular_points < 4)
      throw std::invalid_argument("SmoothingKernel: angular points out of range");
    // Tensor rule on the unit disk: Gauss-Legendre in radius (with the
    // Jacobian r), uniform midpoint rule in angle (exact for trigonometric
    // polynomials of degree < angular_points).
    double dth = 2.0 * M_PI / angular_points;
    for (size_t i = 0; i < gl.x.size(); ++i) {
      double r = gl.x[i];
      double wr = gl.w[i] * r * raw_profile(r) * dth;
      for (int k = 0; k < angular_points; ++k) {
        double th = dth * (k + 0.5);
        nodes_.push_back({Point(r * std::cos(th), r * std::sin(th)), wr});
        mass += wr;
      }
    }
  }
  c_ = 1.0 / mass;
  for (Node& nd : nodes_) nd.w *= c_;
}

double SmoothingKernel::profile(double r) const { return c_ * raw_profile(r); }

void SmoothingKernel::profile_derivs(double t, int upto, double* out) const {
  if (n_ != 2)
    throw std::domain_error("SmoothingKernel: analytic profile derivatives are planar-only");
  if (upto < 0 || upto > 3)
    throw std::invalid_argument("SmoothingKernel: derivative order must be 0..3");
  double q = 1.0 - t * t;
  if (q <= 0.0) {
    for (int k = 0; k <= upto; ++k) out[k] = 0.0;
    return;
  }
  // zeta = c e^{-g}, g = 1/(1-t^2); chain rule through g', g'', g'''.
  double g1 = 1.0 / q;
  double gp = 2.0 * t * g1 * g1;
  double gpp = 2.0 * g1 * g1 + 8.0 * t * t * g1 * g1 * g1;
  double gppp = 24.0 * t * g1 * g1 * g1 + 48.0 * t * t * t * g1 * g1 * g1 * g1;
  double z = c_ * std::exp(-g1);
  out[0] = z;
  if (upto >= 1) out[1] = -gp * z;
  if (upto >= 2) out[2] = (gp * gp - gpp) * z;
  if (upto >= 3) out[3] = (-gp * gp * gp + 3.0 * gp * gpp - gppp) * z;
}

double SmoothingKernel::weight_sum() const {
  double s = 0.0;
  for (const Node& nd : nodes_) s += nd.w;
  return s;
}

double SmoothingKernel::first_moment(int axis) const {
  double s = 0.0;
  for (const Node& nd : nodes_) s += nd.w * nd.t[axis];
  return s;
}

}  // namespace lipkit
