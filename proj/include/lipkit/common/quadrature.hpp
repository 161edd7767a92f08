#pragma once
#include <vector>

namespace lipkit {

// Gauss-Legendre rule with k nodes, mapped to [0,1].
// Nodes/weights are computed once per k (Newton iteration on the Legendre
// recurrence) and cached; exact for polynomials of degree <= 2k-1.
struct GaussLegendre {
  std::vector<double> x;
  std::vector<double> w;
};

const GaussLegendre& gauss_legendre(int k);  // k in [1, 64]

}  // namespace lipkit
