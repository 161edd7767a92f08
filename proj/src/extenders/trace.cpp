#include "lipkit/extenders/trace.hpp"

#include <cmath>
#include <stdexcept>

#include "lipkit/common/multi_index.hpp"
#include "lipkit/geometry/graph_domain.hpp"

namespace lipkit {

namespace {

// Graph domains are periodic in the horizontal coordinates; probes that step
// across the window seam re-enter on the other side. Other domains pass
// through unchanged.
Point canonical(const Domain& dom, Point X) {
  const auto* g = dynamic_cast<const LipschitzGraphDomain*>(&dom);
  if (!g) return X;
  double w = g->window();
  for (int a = 0; a < g->dim() - 1; ++a) {
    X[a] = std::fmod(X[a], w);
    if (X[a] < 0.0) X[a] += w;
  }
  return X;
}

// True when the dual interpolation cell around X has at least one interior
// corner, i.e. InteriorGrid::interp(X) returns data rather than a bare zero.
bool stencil_present(const InteriorGrid& g, const Point& X) {
  int n = g.dim();
  Point o = g.domain().root_origin();
  double h = g.h();
  int base[3] = {0, 0, 0};
  for (int a = 0; a < n; ++a)
    base[a] = int(std::floor((X[a] - o[a]) / h - 0.5));
  int kmax = n == 3 ? 1 : 0;
  for (int di = 0; di <= 1; ++di)
    for (int dj = 0; dj <= 1; ++dj)
      for (int dk = 0; dk <= kmax; ++dk)
        if (g.at(base[0] + di, base[1] + dj, base[2] + dk) >= 0) return true;
  return false;
}

// Quadratic (3-point) extrapolation to the wall of samples of the field along
// the inward normal at layers t, 2t, 3t.
double extrapolate_to_wall(const InteriorGrid& g, const std::vector<double>& field,
                           const Point& bp, const Point& inward, double t) {
  double v[3];
  for (int k = 1; k <= 3; ++k) {
    Point X = canonical(g.domain(), bp + (k * t) * inward);
    if (!stencil_present(g, X))
      throw std::runtime_error(
          "trace: insufficient interior layers near a boundary sample "
          "(resolution)");
    v[k - 1] = g.interp(field, X);
  }
  return 3.0 * v[0] - 3.0 * v[1] + v[2];
}

}  // namespace

BoundaryFunction trace(const GridFunction& U, int comp, const TraceOptions& opt) {
  const InteriorGrid& g = U.grid();
  const Domain& dom = g.domain();
  BoundaryFunction out(dom);
  double t = opt.layer * g.h();
  const std::vector<Point>& bp = dom.boundary_points();
  const std::vector<Point>& nu = dom.boundary_normals();
  for (size_t i = 0; i < bp.size(); ++i) {
    Point inward = -1.0 * nu[i];
    out.set(i, 0, extrapolate_to_wall(g, U.values(comp), bp[i], inward, t));
  }
  return out;
}

WhitneyArray higher_trace(const GridFunction& U, int m, const TraceOptions& opt) {
  if (U.max_order() < m - 1)
    throw std::domain_error("higher_trace: field lacks derivatives to order m-1");
  const InteriorGrid& g = U.grid();
  const Domain& dom = g.domain();
  WhitneyArray out(dom, m);
  double t = opt.layer * g.h();
  const std::vector<Point>& bp = dom.boundary_points();
  const std::vector<Point>& nu = dom.boundary_normals();
  for (const MultiIndex& alpha : out.indices()) {
    const std::vector<double>& field = U.derivative(alpha, 0);
    BoundaryFunction& target = out.component(alpha);
    for (size_t i = 0; i < bp.size(); ++i) {
      Point inward = -1.0 * nu[i];
      target.set(i, 0, extrapolate_to_wall(g, field, bp[i], inward, t));
    }
  }
  return out;
}

}  // namespace lipkit
