#pragma once
#include <cmath>
#include <stdexcept>

namespace lipkit {

// Parameter bundle for the weighted-space norms: integrability p in (1,inf),
// weight exponent a in (-1/p, 1-1/p), smoothness s = 1 - a - 1/p in (0,1),
// and the integer order m >= 1. Exactly one of a, s is free; the other is
// derived so that s + a + 1/p = 1 holds to machine precision.
struct NormParams {
  double p = 2.0;
  double a = 0.0;
  double s = 0.5;
  int m = 1;

  static NormParams from_pa(double p, double a, int m) {
    check_p_m(p, m);
    if (!(a > -1.0 / p && a < 1.0 - 1.0 / p))
      throw std::invalid_argument("NormParams: a outside (-1/p, 1-1/p)");
    return NormParams{p, a, 1.0 - a - 1.0 / p, m};
  }

  static NormParams from_ps(double p, double s, int m) {
    check_p_m(p, m);
    if (!(s > 0.0 && s < 1.0))
      throw std::invalid_argument("NormParams: s outside (0,1)");
    return NormParams{p, 1.0 - s - 1.0 / p, s, m};
  }

  double conjugate() const { return p / (p - 1.0); }

 private:
  static void check_p_m(double p, int m) {
    if (!(p > 1.0) || !std::isfinite(p))
      throw std::invalid_argument("NormParams: p must lie in (1,inf)");
    if (m < 1) throw std::invalid_argument("NormParams: m must be >= 1");
  }
};

}  // namespace lipkit
