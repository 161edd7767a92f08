#include "lipkit/kernels/two_pole.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "lipkit/common/quadrature.hpp"

namespace lipkit {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Radial breakpoints: dyadic ladders anchored at every intrinsic scale of the
// integrand (a, b, zeta), plus geometric refinement toward the second pole at
// radius zeta from both sides.  Panels between consecutive breakpoints span
// at most one octave, which is all Gauss-Legendre needs for power-law
// integrands; the refinement toward zeta resolves the kink (and, for b = 0,
// the integrable singularity) of the second factor.
std::vector<double> radial_knots(double a, double b, double zeta) {
  std::vector<double> scales{a};
  if (b > 0.0) scales.push_back(b);
  if (zeta > 0.0) scales.push_back(zeta);
  double smin = *std::min_element(scales.begin(), scales.end());
  double smax = *std::max_element(scales.begin(), scales.end());
  double r_min = smin * std::pow(2.0, -40);
  double r_max = smax * std::pow(2.0, 40);
  std::vector<double> knots{r_min, r_max};
  for (double c : scales)
    for (int k = -40; k <= 40; ++k) {
      double v = c * std::pow(2.0, k);
      if (v > r_min && v < r_max) knots.push_back(v);
    }
  if (zeta > 0.0)
    for (int k = 1; k <= 50; ++k) {
      double d = zeta * std::pow(2.0, -k);
      if (zeta - d > r_min) knots.push_back(zeta - d);
      if (zeta + d < r_max) knots.push_back(zeta + d);
    }
  std::sort(knots.begin(), knots.end());
  std::vector<double> out;
  for (double v : knots)
    if (out.empty() || v > out.back() * (1.0 + 1e-13)) out.push_back(v);
  return out;
}

// Antiderivative of w^{delta-3} (w - b) dw evaluated at w = s + b; used by
// the exact angular integral in three dimensions (substitute t = cos theta,
// so s ds = r zeta dt).
double phi_sphere(double w, double b, double delta) {
  if (delta == 1.0) return std::log(w) + b / w;
  if (delta == 2.0) return w - b * std::log(w);
  double e = delta - 3.0;
  return std::pow(w, e + 2.0) / (e + 2.0) - b * std::pow(w, e + 1.0) / (e + 1.0);
}

struct TwoPoleQuadrature {
  int N;
  double eps, delta, a, b, zeta;
  GaussLegendre gl_ang = gauss_legendre(8);

  // Angular factor: integral of (s + b)^{delta - N} over the unit sphere
  // S^{N-1} at radius r, where s = |r omega - zeta e_1|.
  double angular(double r) const {
    double pole = delta - double(N);
    if (N == 1)
      return std::pow(std::fabs(r - zeta) + b, pole) +
             std::pow(r + zeta + b, pole);
    double s0sq = r * r + zeta * zeta;
    if (N == 3) {
      if (zeta == 0.0 || r * zeta < 1e-8 * s0sq)
        return 4.0 * kPi * std::pow(std::sqrt(s0sq) + b, pole);
      double wlo = std::fabs(r - zeta) + b;
      double whi = r + zeta + b;
      return 2.0 * kPi *
             (phi_sphere(whi, b, delta) - phi_sphere(wlo, b, delta)) /
             (r * zeta);
    }
    // N == 2: Gauss-Legendre panels geometrically refined toward theta = 0,
    // where s is smallest; s via the cancellation-free form
    // s^2 = (r - zeta)^2 + 4 r zeta sin^2(theta / 2).
    if (zeta == 0.0) return 2.0 * kPi * std::pow(r + b, pole);
    double dr2 = (r - zeta) * (r - zeta);
    double sum = 0.0;
    double hi = kPi;
    for (int k = 0; k <= 30; ++k) {
      double lo = (k < 30) ? hi * 0.5 : 0.0;
      for (size_t q = 0; q < gl_ang.x.size(); ++q) {
        double theta = lo + (hi - lo) * gl_ang.x[q];
        double sh = std::sin(0.5 * theta);
        double s = std::sqrt(dr2 + 4.0 * r * zeta * sh * sh);
        sum += gl_ang.w[q] * (hi - lo) * std::pow(s + b, pole);
      }
      hi = lo;
    }
    return 2.0 * sum;  // the integrand is even in theta about 0
  }

  double radial_integrand(double r) const {
    double first = std::pow(r + a, -double(N) - eps);
    double jac = (N == 1) ? 1.0 : (N == 2 ? r : r * r);
    return first * jac * angular(r);
  }
};

}  // namespace

TwoPoleIntegral two_pole_integral(int N, double eps, double delta, double a,
                                  double b, double zeta) {
  if (N < 1 || N > 3)
    throw std::invalid_argument("two-pole integral: N must be 1, 2, or 3");
  if (!(eps > 0.0))
    throw std::invalid_argument(
        "two-pole integral: eps must be positive (the far field diverges "
        "otherwise)");
  if (!(delta > 0.0) || !(delta < double(N)))
    throw std::invalid_argument(
        "two-pole integral: delta must lie in (0, N) (the second pole or the "
        "far field diverges otherwise)");
  if (!(a > 0.0))
    throw std::invalid_argument("two-pole integral: a must be positive");
  if (b < 0.0 || zeta < 0.0)
    throw std::invalid_argument(
        "two-pole integral: b and zeta must be nonnegative");

  TwoPoleQuadrature quad{N, eps, delta, a, b, zeta};
  const GaussLegendre gl = gauss_legendre(10);
  auto knots = radial_knots(a, b, zeta);
  double total = 0.0;
  for (size_t i = 0; i + 1 < knots.size(); ++i) {
    double lo = knots[i], hi = knots[i + 1], width = hi - lo;
    for (size_t q = 0; q < gl.x.size(); ++q)
      total += gl.w[q] * width * quad.radial_integrand(lo + width * gl.x[q]);
  }
  // Beyond the last breakpoint (2^40 times the largest scale) both factors
  // are pure powers of r to machine precision; integrate the tail exactly.
  double T = knots.back();
  double omega = (N == 1) ? 2.0 : (N == 2 ? 2.0 * kPi : 4.0 * kPi);
  total += omega * std::pow(T, delta - eps - double(N)) /
           (double(N) + eps - delta);

  TwoPoleIntegral out;
  out.value = total;
  out.bound_shape = std::pow(a, -eps) * std::pow(zeta + a + b, delta - double(N));
  out.ratio = out.value / out.bound_shape;
  return out;
}

}  // namespace lipkit
