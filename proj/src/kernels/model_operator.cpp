#include "lipkit/kernels/model_operator.hpp"

#include <stdexcept>

namespace lipkit {

int ModelOperator::dim() const {
  return kind == ModelKind::laplace_3d ? 3 : 2;
}

int ModelOperator::half_order() const {
  return kind == ModelKind::bilaplace_2d ? 2 : 1;
}

double ModelOperator::ellipticity() const {
  // Re<L(xi)e,e> = |xi|^{2m} always, so the symbol condition allows any
  // kappa <= 1; the binding constraint is sum |A_alpha| <= 1/kappa, and the
  // coefficient sums are 2, 3, 4.
  switch (kind) {
    case ModelKind::laplace_2d: return 0.5;
    case ModelKind::laplace_3d: return 1.0 / 3.0;
    case ModelKind::bilaplace_2d: return 0.25;
  }
  return 0.0;
}

double ModelOperator::symbol(const Point& xi) const {
  double s = 0.0;
  for (const auto& [alpha, c] : coefficients()) s += c * alpha.monomial(xi);
  return s;
}

std::vector<std::pair<MultiIndex, double>> ModelOperator::coefficients() const {
  switch (kind) {
    case ModelKind::laplace_2d:
      return {{MultiIndex(2, {2, 0, 0}), 1.0}, {MultiIndex(2, {0, 2, 0}), 1.0}};
    case ModelKind::laplace_3d:
      return {{MultiIndex(3, {2, 0, 0}), 1.0},
              {MultiIndex(3, {0, 2, 0}), 1.0},
              {MultiIndex(3, {0, 0, 2}), 1.0}};
    case ModelKind::bilaplace_2d:
      return {{MultiIndex(2, {4, 0, 0}), 1.0},
              {MultiIndex(2, {2, 2, 0}), 2.0},
              {MultiIndex(2, {0, 4, 0}), 1.0}};
  }
  return {};
}

std::string ModelOperator::name() const {
  switch (kind) {
    case ModelKind::laplace_2d: return "laplace_2d";
    case ModelKind::laplace_3d: return "laplace_3d";
    case ModelKind::bilaplace_2d: return "bilaplace_2d";
  }
  return "";
}

ModelOperator ModelOperator::from_name(const std::string& name) {
  if (name == "laplace_2d") return {ModelKind::laplace_2d};
  if (name == "laplace_3d") return {ModelKind::laplace_3d};
  if (name == "bilaplace_2d") return {ModelKind::bilaplace_2d};
  throw std::invalid_argument("model operator: unknown kind '" + name + "'");
}

}  // namespace lipkit
