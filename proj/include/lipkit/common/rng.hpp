#pragma once
#include <cmath>
#include <cstdint>
#include <random>

namespace lipkit {

// Deterministic RNG. Raw draws come from mt19937_64 (sequence fixed by the
// standard); the distribution maps below are hand-rolled so outputs are
// identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : g_(seed) {}

  uint64_t raw() { return g_(); }

  // Uniform in [0,1).
  double unit() { return double(g_() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * unit(); }

  double log_uniform(double a, double b) {
    return std::exp(uniform(std::log(a), std::log(b)));
  }

  // Box-Muller; one value per call, cache discarded for simplicity.
  double normal() {
    double u1 = unit(), u2 = unit();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }

  int uniform_int(int lo, int hi) {  // inclusive
    return lo + int(g_() % uint64_t(hi - lo + 1));
  }

 private:
  std::mt19937_64 g_;
};

}  // namespace lipkit
