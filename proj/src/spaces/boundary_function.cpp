#include "lipkit/spaces/boundary_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lipkit/common/parallel.hpp"
#include "lipkit/geometry/graph_domain.hpp"

namespace lipkit {

BoundaryFunction::BoundaryFunction(const Domain& dom, int components)
    : dom_(&dom), l_(components) {
  if (l_ < 1) throw std::invalid_argument("BoundaryFunction: components >= 1");
  vals_.assign(size_t(l_), std::vector<double>(dom.boundary_points().size(), 0.0));
}

BoundaryFunction BoundaryFunction::from_function(
    const Domain& dom, const std::function<double(const Point&)>& f) {
  BoundaryFunction g(dom, 1);
  const auto& pts = dom.boundary_points();
  for (size_t i = 0; i < pts.size(); ++i) g.vals_[0][i] = f(pts[i]);
  return g;
}

double BoundaryFunction::lp_norm(double p) const {
  const auto& w = dom_->boundary_weights();
  std::vector<double> terms(size());
  for (size_t i = 0; i < size(); ++i) {
    double m2 = 0.0;
    for (int c = 0; c < l_; ++c) m2 += value(i, c) * value(i, c);
    terms[i] = w[i] * std::pow(m2, 0.5 * p);
  }
  return std::pow(pairwise_sum(terms), 1.0 / p);
}

double BoundaryFunction::interp_param(double u, int c) const {
  const auto* g = dynamic_cast<const LipschitzGraphDomain*>(dom_);
  if (!g || g->dim() != 2)
    throw std::domain_error("interp_param: needs a 2-D graph domain");
  int N = g->samples_per_axis();
  double h = g->window() / N;
  // Boundary samples sit at u_i = (i + 0.5) h; periodic linear interpolation.
  double t = u / h - 0.5;
  double fl = std::floor(t);
  double frac = t - fl;
  long i0 = long(fl);
  auto wrap = [N](long i) { return size_t(((i % N) + N) % N); };
  const auto& v = vals_[size_t(c)];
  return (1.0 - frac) * v[wrap(i0)] + frac * v[wrap(i0 + 1)];
}

ScanField BoundaryFunction::to_scan_field(int c, bool periodic) const {
  const auto& w = dom_->boundary_weights();
  ScanField f;
  f.d = 1;
  f.pos.resize(size());
  f.val = vals_[size_t(c)];
  f.w = w;
  double s = 0.0, wmin = w.empty() ? 0.0 : w[0];
  for (size_t i = 0; i < size(); ++i) {
    f.pos[i] = Point(s + 0.5 * w[i], 0.0);
    s += w[i];
    wmin = std::min(wmin, w[i]);
  }
  f.h = wmin;
  if (periodic) f.period = {s, 0.0, 0.0};
  return f;
}

double boundary_resolution(const Domain& dom) {
  const auto& w = dom.boundary_weights();
  double m = w.empty() ? 0.0 : w[0];
  for (double x : w) m = std::min(m, x);
  return m;
}

double boundary_diameter(const Domain& dom) {
  const auto& pts = dom.boundary_points();
  Point lo = pts[0], hi = pts[0];
  for (const auto& p : pts)
    for (int d = 0; d < dom.dim(); ++d) {
      lo[d] = std::min(lo[d], p[d]);
      hi[d] = std::max(hi[d], p[d]);
    }
  return norm(hi - lo);
}

WhitneyArray::WhitneyArray(const Domain& dom, int m, int components)
    : dom_(&dom), m_(m) {
  if (m < 1) throw std::invalid_argument("WhitneyArray: m must be >= 1");
  idx_ = multi_indices_upto(dom.dim(), m - 1);
  comp_.reserve(idx_.size());
  for (size_t i = 0; i < idx_.size(); ++i) comp_.emplace_back(dom, components);
}

WhitneyArray WhitneyArray::from_global(
    const Domain& dom, int m,
    const std::function<double(const MultiIndex&, const Point&)>& dval) {
  WhitneyArray f(dom, m, 1);
  const auto& pts = dom.boundary_points();
  for (size_t a = 0; a < f.idx_.size(); ++a)
    for (size_t i = 0; i < pts.size(); ++i)
      f.comp_[a].set(i, 0, dval(f.idx_[a], pts[i]));
  return f;
}

size_t WhitneyArray::find(const MultiIndex& alpha) const {
  for (size_t i = 0; i < idx_.size(); ++i)
    if (idx_[i] == alpha) return i;
  throw std::out_of_range("WhitneyArray: index " + alpha.str() +
                          " outside {|alpha| <= m-1}");
}

BoundaryFunction& WhitneyArray::component(const MultiIndex& alpha) {
  return comp_[find(alpha)];
}

const BoundaryFunction& WhitneyArray::component(const MultiIndex& alpha) const {
  return comp_[find(alpha)];
}

}  // namespace lipkit
