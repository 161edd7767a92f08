#pragma once
#include <string>
#include <utility>
#include <vector>

#include "lipkit/common/multi_index.hpp"
#include "lipkit/common/point.hpp"

namespace lipkit {

// Scalar constant-coefficient elliptic model operators with explicit
// half-space Dirichlet Green functions: the Laplacian in 2-D and 3-D
// (order 2) and the biharmonic operator in 2-D (order 4).
enum class ModelKind { laplace_2d, laplace_3d, bilaplace_2d };

// The operator is stored as L = sum_{|alpha| = 2m} A_alpha D^alpha in the
// derivative normalization D = -i*grad, which makes every coefficient real
// and the symbol L(xi) = |xi|^{2m}.  All real quantities evaluated by this
// module (Green functions, kernels, derivative magnitudes) are insensitive
// to the normalization; it only fixes the sign convention of the
// coefficient table.
struct ModelOperator {
  ModelKind kind = ModelKind::laplace_2d;

  int dim() const;             // ambient dimension n (2 or 3)
  int half_order() const;      // m; the operator order is 2m
  int order() const { return 2 * half_order(); }
  int components() const { return 1; }  // scalar models only

  // Largest kappa satisfying both Re<L(xi)e, e> >= kappa |xi|^{2m} |e|^2 and
  // sum_alpha |A_alpha| <= 1/kappa: 1/2, 1/3, 1/4 for the three kinds.
  double ellipticity() const;

  // Symbol sum_alpha A_alpha xi^alpha; equals |xi|^{2m} for all three kinds.
  double symbol(const Point& xi) const;

  // Nonzero coefficients A_alpha with |alpha| = 2m, graded-lex order.
  std::vector<std::pair<MultiIndex, double>> coefficients() const;

  std::string name() const;
  // Throws std::invalid_argument for unknown names.
  static ModelOperator from_name(const std::string& name);
};

}  // namespace lipkit
