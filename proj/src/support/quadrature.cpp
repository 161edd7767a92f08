#include "lipkit/common/quadrature.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace lipkit {

namespace {

GaussLegendre build(int k) {
  GaussLegendre gl;
  gl.x.resize(size_t(k));
  gl.w.resize(size_t(k));
  for (int i = 0; i < k; ++i) {
    // Chebyshev-based initial guess for the i-th root of P_k on [-1,1].
    double z = std::cos(M_PI * (double(i) + 0.75) / (double(k) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre recurrence: p0 = 1, p1 = z, (j+1)P_{j+1} = (2j+1)zP_j - jP_{j-1}.
      double p0 = 1.0, p1 = z;
      for (int j = 1; j < k; ++j) {
        double p2 = ((2.0 * j + 1.0) * z * p1 - double(j) * p0) / double(j + 1);
        p0 = p1;
        p1 = p2;
      }
      dp = double(k) * (z * p1 - p0) / (z * z - 1.0);
      double dz = p1 / dp;
      z -= dz;
      if (std::abs(dz) < 1e-15) break;
    }
    // Map [-1,1] -> [0,1]: x = (z+1)/2, weight halves.
    gl.x[size_t(i)] = 0.5 * (z + 1.0);
    gl.w[size_t(i)] = 1.0 / ((1.0 - z * z) * dp * dp);
  }
  return gl;
}

}  // namespace

const GaussLegendre& gauss_legendre(int k) {
  if (k < 1 || k > 64) throw std::invalid_argument("gauss_legendre: k out of [1,64]");
  static std::map<int, GaussLegendre> cache;
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, build(k)).first;
  return it->second;
}

}  // namespace lipkit
