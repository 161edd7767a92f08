#include "lipkit/extenders/normal_data.hpp"

#include <cmath>
#include <stdexcept>

#include "lipkit/common/multi_index.hpp"
#include "lipkit/geometry/graph_domain.hpp"

namespace lipkit {

std::vector<BoundaryFunction> normal_data_map(const WhitneyArray& fdot) {
  const Domain& dom = fdot.domain();
  const std::vector<Point>& nu = dom.boundary_normals();
  int m = fdot.order();
  std::vector<BoundaryFunction> g;
  g.reserve(size_t(m));
  for (int k = 0; k < m; ++k) {
    BoundaryFunction gk(dom);
    for (const MultiIndex& alpha : multi_indices_exact(dom.dim(), k)) {
      const BoundaryFunction& fa = fdot.component(alpha);
      double coeff = factorial(k) / alpha.factorial();
      for (size_t i = 0; i < gk.size(); ++i)
        gk.set(i, 0, gk.value(i) + coeff * alpha.monomial(nu[i]) * fa.value(i));
    }
    g.push_back(std::move(gk));
  }
  return g;
}

InjectivityReport normal_data_injectivity(const WhitneyArray& fdot) {
  const Domain& dom = fdot.domain();
  if (dom.dim() != 2)
    throw std::domain_error("normal data: injectivity probe is planar-only");
  int m = fdot.order();
  if (m > 2)
    throw std::domain_error("normal data: injectivity probe covers m <= 2");

  std::vector<BoundaryFunction> g = normal_data_map(fdot);
  InjectivityReport rep;

  // Zeroth member is determined directly.
  for (size_t i = 0; i < g[0].size(); ++i) {
    double r = std::abs(g[0].value(i) - fdot.component(MultiIndex::zero(2)).value(i));
    rep.max_residual = std::max(rep.max_residual, r);
  }
  if (m == 1) {
    rep.samples = long(g[0].size());
    return rep;
  }

  const std::vector<Point>& bp = dom.boundary_points();
  const std::vector<Point>& nu = dom.boundary_normals();
  const auto* graph = dynamic_cast<const LipschitzGraphDomain*>(&dom);
  size_t N = bp.size();
  const BoundaryFunction& f10 = fdot.component(MultiIndex(2, {1, 0, 0}));
  const BoundaryFunction& f01 = fdot.component(MultiIndex(2, {0, 1, 0}));

  double sum = 0.0;
  for (size_t i = 0; i < N; ++i) {
    // Window-seam samples (graphs) carry no periodic neighbor; corner
    // samples (polygons) have a jumping normal. Both are skipped.
    if (graph && (i == 0 || i + 1 == N)) continue;
    size_t ip = (i + 1) % N, im = (i + N - 1) % N;
    if (!graph) {
      Point dn = nu[ip] - nu[im];
      if (norm(dn) > 1e-12) continue;
    }
    Point chord = bp[ip] - bp[im];
    double len = norm(chord);
    if (!(len > 0.0)) continue;

    // Tangential slope of g0 along the boundary, by the centered chord rule.
    double dtau = (g[0].value(ip) - g[0].value(im)) / len;
    Point tau = (1.0 / len) * chord;

    // Solve [nu; tau] (f1, f2) = (g1, dtau g0); rows are orthonormal up to
    // the polygonal chord direction, so the solve is a transpose.
    double a11 = nu[i][0], a12 = nu[i][1];
    double a21 = tau[0], a22 = tau[1];
    double det = a11 * a22 - a12 * a21;
    if (std::abs(det) < 1e-12) continue;
    double b1 = g[1].value(i), b2 = dtau;
    double r10 = (b1 * a22 - a12 * b2) / det - f10.value(i);
    double r01 = (a11 * b2 - b1 * a21) / det - f01.value(i);
    double r = std::hypot(r10, r01);
    rep.max_residual = std::max(rep.max_residual, r);
    sum += r;
    ++rep.samples;
  }
  if (rep.samples > 0) rep.mean_residual = sum / double(rep.samples);
  return rep;
}

}  // namespace lipkit
