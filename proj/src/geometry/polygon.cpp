#include "lipkit/geometry/polygon.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lipkit/geometry/geom_util.hpp"

namespace lipkit {

PolygonalDomain2D::PolygonalDomain2D(std::vector<Point> vertices, double boundary_h)
    : verts_(std::move(vertices)) {
  size_t n = verts_.size();
  if (n < 3) throw std::invalid_argument("polygon needs at least 3 vertices");

  double area2 = 0.0;
  for (size_t i = 0; i < n; ++i) area2 += cross2(edge_a(i), edge_b(i));
  if (area2 <= 0.0)
    throw std::invalid_argument("polygon vertices must be counterclockwise");

  // Simplicity: non-adjacent edges must not meet.
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      if (segments_intersect(edge_a(i), edge_b(i), edge_a(j), edge_b(j)))
        throw std::invalid_argument("polygon is self-intersecting");
    }

  double lo0 = verts_[0][0], hi0 = lo0, lo1 = verts_[0][1], hi1 = lo1;
  for (const Point& v : verts_) {
    lo0 = std::min(lo0, v[0]);
    hi0 = std::max(hi0, v[0]);
    lo1 = std::min(lo1, v[1]);
    hi1 = std::max(hi1, v[1]);
  }
  root_lo_ = Point(lo0, lo1);
  root_side_ = std::max(hi0 - lo0, hi1 - lo1);

  if (boundary_h <= 0) throw std::invalid_argument("boundary spacing must be > 0");
  for (size_t e = 0; e < n; ++e) {
    Point a = edge_a(e), b = edge_b(e);
    double len = norm(b - a);
    perimeter_ += len;
    int cells = std::max(1, int(std::ceil(len / boundary_h)));
    Point t = (1.0 / len) * (b - a);
    Point nu(t[1], -t[0]);  // outward for counterclockwise order
    for (int i = 0; i < cells; ++i) {
      double s = (i + 0.5) / cells;
      bpts_.push_back(a + (s * len) * t);
      bw_.push_back(len / cells);
      bnu_.push_back(nu);
    }
  }
}

bool PolygonalDomain2D::inside(const Point& x) const {
  // Crossing number; points on the boundary count as outside.
  size_t n = verts_.size();
  bool in = false;
  for (size_t e = 0; e < n; ++e) {
    Point a = edge_a(e), b = edge_b(e);
    if (point_segment_dist(x, a, b) == 0.0) return false;
    bool below_a = a[1] <= x[1], below_b = b[1] <= x[1];
    if (below_a != below_b) {
      double t = (x[1] - a[1]) / (b[1] - a[1]);
      double cx = a[0] + t * (b[0] - a[0]);
      if (cx > x[0]) in = !in;
    }
  }
  return in;
}

double PolygonalDomain2D::rho(const Point& x) const {
  double d = point_segment_dist(x, edge_a(0), edge_b(0));
  for (size_t e = 1; e < verts_.size(); ++e)
    d = std::min(d, point_segment_dist(x, edge_a(e), edge_b(e)));
  return inside(x) ? d : -d;
}

double PolygonalDomain2D::cube_rho_min(const Point& c, double s) const {
  Point lo(c[0] - s / 2, c[1] - s / 2), hi(c[0] + s / 2, c[1] + s / 2);
  double d = segment_box_dist2(edge_a(0), edge_b(0), lo, hi);
  for (size_t e = 1; e < verts_.size() && d > 0; ++e)
    d = std::min(d, segment_box_dist2(edge_a(e), edge_b(e), lo, hi));
  if (d == 0.0) return 0.0;
  return inside(c) ? d : -d;
}

bool PolygonalDomain2D::cube_outside(const Point& c, double s) const {
  return cube_rho_min(c, s) < 0.0;
}

Point PolygonalDomain2D::normal_at(const Point& bp, double tol) const {
  size_t best = 0;
  double bd = point_segment_dist(bp, edge_a(0), edge_b(0));
  for (size_t e = 1; e < verts_.size(); ++e) {
    double d = point_segment_dist(bp, edge_a(e), edge_b(e));
    if (d < bd) {
      bd = d;
      best = e;
    }
  }
  if (bd > tol) throw std::domain_error("point is not on the polygon boundary");
  Point a = edge_a(best), b = edge_b(best);
  Point t = (1.0 / norm(b - a)) * (b - a);
  return Point(t[1], -t[0]);
}

}  // namespace lipkit
