#include "lipkit/geometry/geom_util.hpp"

#include <algorithm>
#include <cmath>

namespace lipkit {

double point_segment_dist(const Point& p, const Point& a, const Point& b) {
  Point ab = b - a;
  double len2 = dot(ab, ab);
  double t = len2 > 0 ? dot(p - a, ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return norm(p - (a + t * ab));
}

namespace {
int orient(const Point& a, const Point& b, const Point& c) {
  double v = cross2(b - a, c - a);
  if (v > 0) return 1;
  if (v < 0) return -1;
  return 0;
}
bool on_segment(const Point& a, const Point& b, const Point& p) {
  return std::min(a[0], b[0]) <= p[0] && p[0] <= std::max(a[0], b[0]) &&
         std::min(a[1], b[1]) <= p[1] && p[1] <= std::max(a[1], b[1]);
}
}  // namespace

bool segments_intersect(const Point& a, const Point& b, const Point& c,
                        const Point& d) {
  int o1 = orient(a, b, c), o2 = orient(a, b, d);
  int o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

double segment_segment_dist(const Point& a, const Point& b, const Point& c,
                            const Point& d) {
  if (segments_intersect(a, b, c, d)) return 0.0;
  // Non-crossing planar segments attain their distance at an endpoint.
  return std::min(std::min(point_segment_dist(a, c, d), point_segment_dist(b, c, d)),
                  std::min(point_segment_dist(c, a, b), point_segment_dist(d, a, b)));
}

bool segment_intersects_box2(const Point& a, const Point& b, const Point& lo,
                             const Point& hi) {
  auto in_box = [&](const Point& p) {
    return lo[0] <= p[0] && p[0] <= hi[0] && lo[1] <= p[1] && p[1] <= hi[1];
  };
  if (in_box(a) || in_box(b)) return true;
  Point c0 = lo, c1(hi[0], lo[1]), c2 = hi, c3(lo[0], hi[1]);
  return segments_intersect(a, b, c0, c1) || segments_intersect(a, b, c1, c2) ||
         segments_intersect(a, b, c2, c3) || segments_intersect(a, b, c3, c0);
}

double segment_box_dist2(const Point& a, const Point& b, const Point& lo,
                         const Point& hi) {
  if (segment_intersects_box2(a, b, lo, hi)) return 0.0;
  Point c0 = lo, c1(hi[0], lo[1]), c2 = hi, c3(lo[0], hi[1]);
  double d = segment_segment_dist(a, b, c0, c1);
  d = std::min(d, segment_segment_dist(a, b, c1, c2));
  d = std::min(d, segment_segment_dist(a, b, c2, c3));
  d = std::min(d, segment_segment_dist(a, b, c3, c0));
  return d;
}

double point_box_dist(const Point& p, const Point& lo, const Point& hi, int d) {
  double s2 = 0.0;
  for (int i = 0; i < d; ++i) {
    double g = std::max({lo[i] - p[i], 0.0, p[i] - hi[i]});
    s2 += g * g;
  }
  return std::sqrt(s2);
}

}  // namespace lipkit
