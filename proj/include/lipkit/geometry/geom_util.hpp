#pragma once
#include "lipkit/common/point.hpp"

namespace lipkit {

// Planar helpers on the first two coordinates.
inline double cross2(const Point& a, const Point& b) {
  return a[0] * b[1] - a[1] * b[0];
}

double point_segment_dist(const Point& p, const Point& a, const Point& b);
bool segments_intersect(const Point& a, const Point& b, const Point& c, const Point& d);
double segment_segment_dist(const Point& a, const Point& b, const Point& c,
                            const Point& d);

// Axis-aligned box [lo, hi] in the plane.
bool segment_intersects_box2(const Point& a, const Point& b, const Point& lo,
                             const Point& hi);
double segment_box_dist2(const Point& a, const Point& b, const Point& lo,
                         const Point& hi);
double point_box_dist(const Point& p, const Point& lo, const Point& hi, int d);

}  // namespace lipkit
