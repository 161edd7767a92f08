#include "lipkit/spaces/taylor.hpp"

#include <stdexcept>

#include "lipkit/common/quadrature.hpp"
#include "lipkit/geometry/graph_domain.hpp"

namespace lipkit {

double taylor_polynomial(const WhitneyArray& f, const MultiIndex& alpha,
                         const Point& X, size_t y_index, int comp) {
  if (alpha.order() > f.order() - 1)
    throw std::out_of_range("taylor_polynomial: |alpha| > m-1");
  const Point Y = f.domain().boundary_points()[y_index];
  const Point d = X - Y;
  double acc = 0.0;
  for (const auto& beta :
       multi_indices_upto(f.domain().dim(), f.order() - 1 - alpha.order())) {
    acc += f.component(alpha + beta).value(y_index, comp) * beta.monomial(d) /
           beta.factorial();
  }
  return acc;
}

double taylor_remainder(const WhitneyArray& f, const MultiIndex& alpha,
                        size_t x_index, size_t y_index, int comp) {
  const Point X = f.domain().boundary_points()[x_index];
  return f.component(alpha).value(x_index, comp) -
         taylor_polynomial(f, alpha, X, y_index, comp);
}

namespace {

struct SimplexCtx {
  const std::function<double(const MultiIndex&, double)>* f;
  const std::function<double(double)>* dphi;
  double xu, yu;
  MultiIndex gamma;  // alpha + e_{j_1} + ... + e_{j_r}
  const int* tuple;  // j_k in {0,1} (0 = parameter axis, 1 = graph axis)
  int r;
  const GaussLegendre* gl;
};

// Iterated integral over 0 <= t_r <= ... <= t_1 <= 1 for one fixed tuple.
// level counts from 1; upper is the previous variable's value.
double nest(const SimplexCtx& c, int level, double upper,
            std::array<double, 8>& ts) {
  const double d = c.xu - c.yu;
  double acc = 0.0;
  for (size_t q = 0; q < c.gl->x.size(); ++q) {
    double t = upper * c.gl->x[q];
    ts[size_t(level - 1)] = t;
    double inner;
    if (level == c.r) {
      double u_r = c.yu + t * d;
      inner = (*c.f)(c.gamma, u_r) - (*c.f)(c.gamma, c.yu);
      for (int k = 0; k < c.r; ++k) {
        double uk = c.yu + ts[size_t(k)] * d;
        inner *= (c.tuple[k] == 0 ? 1.0 : (*c.dphi)(uk)) * d;
      }
    } else {
      inner = nest(c, level + 1, t, ts);
    }
    acc += upper * c.gl->w[q] * inner;
  }
  return acc;
}

}  // namespace

double simplex_remainder_integral(
    int m, const MultiIndex& alpha,
    const std::function<double(const MultiIndex&, double)>& f,
    const std::function<double(double)>& dphi, double xu, double yu,
    int gl_points) {
  const int r = m - 1 - alpha.order();
  if (r < 1)
    throw std::out_of_range("simplex_remainder_integral: needs |alpha| <= m-2");
  if (r > 8)
    throw std::invalid_argument("simplex_remainder_integral: nesting too deep");
  const GaussLegendre& gl = gauss_legendre(gl_points);
  double total = 0.0;
  // Enumerate tuples (j_1..j_r) in {0,1}^r via the bits of an r-bit counter.
  std::array<int, 8> tuple{};
  std::array<double, 8> ts{};
  for (int mask = 0; mask < (1 << r); ++mask) {
    MultiIndex gamma = alpha;
    for (int k = 0; k < r; ++k) {
      tuple[size_t(k)] = (mask >> k) & 1;
      gamma = gamma + MultiIndex::unit(2, tuple[size_t(k)]);
    }
    SimplexCtx c{&f, &dphi, xu, yu, gamma, tuple.data(), r, &gl};
    total += nest(c, 1, 1.0, ts);
  }
  return total;
}

double simplex_remainder_integral(const WhitneyArray& f, const MultiIndex& alpha,
                                  double xu, double yu, int gl_points, int comp) {
  const auto* g = dynamic_cast<const LipschitzGraphDomain*>(&f.domain());
  if (!g || g->dim() != 2)
    throw std::domain_error("simplex_remainder_integral: needs a 2-D graph domain");
  auto fv = [&](const MultiIndex& gamma, double u) {
    return f.component(gamma).interp_param(u, comp);
  };
  auto dphi = [&](double u) { return g->grad_phi(u)[0]; };
  return simplex_remainder_integral(f.order(), alpha, fv, dphi, xu, yu, gl_points);
}

}  // namespace lipkit
