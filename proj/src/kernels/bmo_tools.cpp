#include "lipkit/kernels/bmo_tools.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lipkit/common/quadrature.hpp"

namespace lipkit {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Integral over the clipped disc B((., t), r) ∩ {z > 0} of a vertical
// function g(z).  The disc integral collapses to a chord integral, and the
// substitution z = t + r sin(psi) turns it into
//   int_{psi0}^{pi/2} g(t + r sin psi) 2 r^2 cos^2(psi) dpsi,
// with psi0 = -pi/2 for an interior disc and asin(-t/r) for a clipped one.
// Panels are geometric toward psi0 — that is where z -> 0, the only place a
// log-type profile is singular — and each octave is subdivided so that the
// kink of |b - c| integrands never sits in a wide panel.
double chord_integral(const std::function<double(double)>& g, double t,
                      double r) {
  double psi0 = (t >= r) ? -0.5 * kPi : std::asin(-t / r);
  double span = 0.5 * kPi - psi0;
  const GaussLegendre gl = gauss_legendre(12);
  auto panel = [&](double lo, double hi) {
    double width = hi - lo, acc = 0.0;
    for (size_t i = 0; i < gl.x.size(); ++i) {
      double psi = lo + width * gl.x[i];
      double z = t + r * std::sin(psi);
      double c = std::cos(psi);
      acc += gl.w[i] * width * g(z) * 2.0 * r * r * c * c;
    }
    return acc;
  };
  double sum = 0.0;
  const int octaves = 36, sub = 4;
  for (int k = 0; k < octaves; ++k) {
    double hi = psi0 + span * std::pow(2.0, -k);
    double lo = psi0 + span * std::pow(2.0, -k - 1);
    double step = (hi - lo) / sub;
    for (int q = 0; q < sub; ++q) sum += panel(lo + q * step, lo + (q + 1) * step);
  }
  sum += panel(psi0, psi0 + span * std::pow(2.0, -octaves));
  return sum;
}

void check_disc(double t, double r) {
  if (!(r > 0.0) || !(t + r > 0.0))
    throw std::invalid_argument(
        "half-plane disc: needs r > 0 and a nonempty intersection with the "
        "half-plane");
}

}  // namespace

double halfplane_disc_mean(const std::function<double(double)>& b, double t,
                           double r) {
  check_disc(t, r);
  double area = chord_integral([](double) { return 1.0; }, t, r);
  return chord_integral(b, t, r) / area;
}

double halfplane_disc_abs_dev(const std::function<double(double)>& b, double t,
                              double r, double c) {
  check_disc(t, r);
  double area = chord_integral([](double) { return 1.0; }, t, r);
  return chord_integral([&](double z) { return std::fabs(b(z) - c); }, t, r) /
         area;
}

double vertical_profile_bmo(const std::function<double(double)>& b,
                            const VerticalBmoOptions& opt) {
  if (opt.t_samples < 2 || opt.ratio_samples < 2 || !(opt.t_lo > 0.0) ||
      !(opt.t_hi > opt.t_lo) || !(opt.ratio_lo > 0.0) ||
      !(opt.ratio_hi > opt.ratio_lo))
    throw std::invalid_argument("vertical BMO: bad sampling options");
  double best = 0.0;
  for (int i = 0; i < opt.t_samples; ++i) {
    double t = opt.t_lo * std::pow(opt.t_hi / opt.t_lo,
                                   double(i) / double(opt.t_samples - 1));
    for (int j = 0; j < opt.ratio_samples; ++j) {
      double ratio =
          opt.ratio_lo * std::pow(opt.ratio_hi / opt.ratio_lo,
                                  double(j) / double(opt.ratio_samples - 1));
      double r = ratio * t;
      double c = halfplane_disc_mean(b, t, r);
      best = std::max(best, halfplane_disc_abs_dev(b, t, r, c));
    }
  }
  return best;
}

MeanDriftReport vertical_mean_drift(const std::function<double(double)>& b,
                                    const std::vector<double>& centers,
                                    const std::vector<double>& radii,
                                    double bmo) {
  if (!(bmo > 0.0))
    throw std::invalid_argument("mean drift: needs a positive seminorm");
  MeanDriftReport rep;
  for (double t : centers) {
    std::vector<double> means(radii.size());
    for (size_t i = 0; i < radii.size(); ++i)
      means[i] = halfplane_disc_mean(b, t, radii[i]);
    for (size_t i = 0; i < radii.size(); ++i)
      for (size_t j = 0; j < radii.size(); ++j) {
        if (!(radii[i] < radii[j])) continue;
        double drift = std::fabs(means[i] - means[j]);
        double ratio = drift / (std::log(radii[j] / radii[i] + 1.0) * bmo);
        rep.max_drift = std::max(rep.max_drift, drift);
        rep.max_ratio = std::max(rep.max_ratio, ratio);
      }
  }
  return rep;
}

}  // namespace lipkit
