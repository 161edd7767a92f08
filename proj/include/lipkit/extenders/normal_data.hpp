#pragma once
#include <vector>

#include "lipkit/spaces/boundary_function.hpp"

namespace lipkit {

// Iterated normal derivatives induced by a Whitney array:
//   g_k = sum_{|alpha| = k} (k!/alpha!) nu^alpha f_alpha,   k = 0..m-1,
// the multinomial expansion of (nu . grad)^k applied to the array members.
// Returns the m boundary functions g_k on the array's grid.
std::vector<BoundaryFunction> normal_data_map(const WhitneyArray& fdot);

// Injectivity probe of the map fdot -> {g_k}: the first-order members are
// reconstructed from g_0, g_1 and the tangential derivative of g_0 (finite
// differences along the boundary), by solving the orthonormal 2x2 system
//   nu . (f_1, f_2) = g_1,   tau . (f_1, f_2) = d_tau g_0,
// and compared against the original members. Small residuals on smooth
// compatible data exhibit that the normal data determine the array.
// Planar domains, m <= 2; samples where the normal jumps (polygon corners)
// or where the window seam breaks periodicity (graph windows) are skipped.
struct InjectivityReport {
  double max_residual = 0.0;
  double mean_residual = 0.0;
  long samples = 0;
};
InjectivityReport normal_data_injectivity(const WhitneyArray& fdot);

}  // namespace lipkit
