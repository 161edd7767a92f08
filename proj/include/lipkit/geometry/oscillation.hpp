#pragma once
#include <utility>
#include <vector>

#include "lipkit/geometry/scan_field.hpp"

namespace lipkit {

struct BmoResult {
  double sup = 0.0;
  double arg_radius = 0.0;
  Point arg_center;
  // (radius, sup over balls of that radius)
  std::vector<std::pair<double, double>> per_radius;
};

// Sup over a dyadic family of balls (radii 2h*2^k, centers on the sample
// grid, stride a power of two ~ radius/(stride_div*h)) of the weighted mean
// deviation from the ball mean. Power-of-two strides make coarser families
// subsets of finer ones, so the sup is monotone in stride_div.
BmoResult bmo_seminorm(const ScanField& f, int stride_div = 8);

struct OscPoint {
  double eps;
  double sup;
};

// For each ladder radius, the sup over balls of the double mean of
// |f(X) - f(Y)|. Ladder must be strictly decreasing with smallest >= 2h.
std::vector<OscPoint> infinitesimal_oscillation(const ScanField& f,
                                                const std::vector<double>& eps_ladder,
                                                int stride_div = 8);

// Vector-valued variants; fields share positions/weights, component values
// differ. Deviations use the Euclidean norm across components.
BmoResult vector_bmo(const std::vector<const ScanField*>& comps, int stride_div = 8);
std::vector<OscPoint> vector_oscillation(const std::vector<const ScanField*>& comps,
                                         const std::vector<double>& eps_ladder,
                                         int stride_div = 8);

}  // namespace lipkit
