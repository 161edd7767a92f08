#include "lipkit/spaces/sobolev.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "lipkit/common/parallel.hpp"

namespace lipkit {

namespace {

// Accumulates sum_{alpha in set} int |D^alpha U|^p rho^{w(alpha)} dX with a
// per-order weight exponent, midpoint quadrature, deterministic reduction.
double graded_sum_p(const GridFunction& U, double p,
                    const std::vector<MultiIndex>& set,
                    const std::function<double(int)>& weight_exp) {
  const auto& g = U.grid();
  const auto& rho = g.rho();
  const double cell = g.cell_measure();
  std::vector<double> terms(g.size());
  double total = 0.0;
  for (const auto& alpha : set) {
    const double we = weight_exp(alpha.order());
    std::vector<const std::vector<double>*> d(size_t(U.components()));
    for (int c = 0; c < U.components(); ++c) d[size_t(c)] = &U.derivative(alpha, c);
    for (size_t i = 0; i < g.size(); ++i) {
      double m2 = 0.0;
      for (int c = 0; c < U.components(); ++c) {
        double v = (*d[size_t(c)])[i];
        m2 += v * v;
      }
      double w = we == 0.0 ? 1.0 : std::pow(rho[i], we);
      terms[i] = cell * w * std::pow(m2, 0.5 * p);
    }
    total += pairwise_sum(terms);
  }
  return total;
}

void check_order(const GridFunction& U, const NormParams& prm) {
  if (prm.m > U.max_order())
    throw std::domain_error(
        "weighted norm: params.m exceeds the function's cached derivative order");
}

}  // namespace

double weighted_sobolev_norm_W(const GridFunction& U, const NormParams& prm,
                               double pa) {
  check_order(U, prm);
  auto set = multi_indices_upto(U.grid().dim(), prm.m);
  double s = graded_sum_p(U, prm.p, set, [pa](int) { return pa; });
  return std::pow(s, 1.0 / prm.p);
}

double weighted_sobolev_norm_W(const GridFunction& U, const NormParams& prm) {
  return weighted_sobolev_norm_W(U, prm, prm.p * prm.a);
}

double weighted_sobolev_norm_V(const GridFunction& U, const NormParams& prm) {
  check_order(U, prm);
  auto set = multi_indices_upto(U.grid().dim(), prm.m);
  const double p = prm.p, pa = prm.p * prm.a;
  const int m = prm.m;
  double s = graded_sum_p(U, p, set,
                          [&](int order) { return p * (order - m) + pa; });
  return std::pow(s, 1.0 / p);
}

double top_order_seminorm(const GridFunction& U, const NormParams& prm) {
  check_order(U, prm);
  auto set = multi_indices_exact(U.grid().dim(), prm.m);
  const double pa = prm.p * prm.a;
  double s = graded_sum_p(U, prm.p, set, [pa](int) { return pa; });
  return std::pow(s, 1.0 / prm.p);
}

double hardy_ratio(const GridFunction& U, const NormParams& prm) {
  double top = top_order_seminorm(U, prm);
  if (top <= 0.0) throw std::domain_error("hardy_ratio: vanishing top-order part");
  return weighted_sobolev_norm_V(U, prm) / top;
}

double log_profile_quotient(double s, double L, double omega) {
  if (!(L > 0.0) || !(omega > 0.0))
    throw std::invalid_argument("log_profile_quotient: L and omega must be positive");
  // With w = sin(omega*tau):  int w^2 = L/2 - sin(2 omega L)/(4 omega),
  // int w'^2 = omega^2 (L/2 + sin(2 omega L)/(4 omega)),
  // int w' w = sin^2(omega L)/2.
  double B = 0.5 * L - std::sin(2.0 * omega * L) / (4.0 * omega);
  double A = omega * omega * (0.5 * L + std::sin(2.0 * omega * L) / (4.0 * omega));
  double C = std::sin(omega * L) * std::sin(omega * L);
  return (A - s * C + s * s * B) / B;
}

ProfileFrequency collar_frequency(double s, double L, double target_q) {
  // Scan for the minimizer on (0, pi/L): beyond it the quotient increases
  // monotonically, so a target above the minimum is reached by bisection.
  double omin = 0.0, qmin = 1e300;
  const int scan = 2000;
  for (int i = 1; i <= scan; ++i) {
    double w = (M_PI / L) * (double(i) / (scan + 1));
    double q = log_profile_quotient(s, L, w);
    if (q < qmin) {
      qmin = q;
      omin = w;
    }
  }
  if (target_q <= qmin) return {omin, qmin};
  double lo = omin, hi = std::sqrt(target_q) + s + 2.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (log_profile_quotient(s, L, mid) < target_q)
      lo = mid;
    else
      hi = mid;
  }
  double om = 0.5 * (lo + hi);
  return {om, log_profile_quotient(s, L, om)};
}

}  // namespace lipkit
