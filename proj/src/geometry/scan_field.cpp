#include "lipkit/geometry/scan_field.hpp"

#include <algorithm>
#include <cmath>

namespace lipkit {

double ScanField::dist(const Point& a, const Point& b) const {
  double s2 = 0.0;
  for (int i = 0; i < d; ++i) {
    double di = std::abs(a[i] - b[i]);
    if (period[size_t(i)] > 0.0)
      di = std::min(di, period[size_t(i)] - di);
    s2 += di * di;
  }
  return std::sqrt(s2);
}

double ScanField::extent() const {
  if (pos.empty()) return 0.0;
  double s2 = 0.0;
  for (int i = 0; i < d; ++i) {
    double lo = pos[0][i], hi = lo;
    for (const Point& p : pos) {
      lo = std::min(lo, p[i]);
      hi = std::max(hi, p[i]);
    }
    double e = hi - lo;
    if (period[size_t(i)] > 0.0) e = std::min(e, period[size_t(i)] / 2);
    s2 += e * e;
  }
  return std::sqrt(s2);
}

bool ScanField::uniform_1d() const {
  return d == 1 && grid_dims[0] > 0 && period[0] == 0.0;
}

ScanField sample_interval(double a, double b, int n,
                          const std::function<double(double)>& f) {
  ScanField s;
  s.d = 1;
  s.h = (b - a) / n;
  s.grid_dims = {n, 0, 0};
  s.grid_origin = Point(a, 0.0);
  s.pos.reserve(size_t(n));
  s.val.reserve(size_t(n));
  s.w.assign(size_t(n), s.h);
  for (int i = 0; i < n; ++i) {
    double x = a + (i + 0.5) * s.h;
    s.pos.push_back(Point(x, 0.0));
    s.val.push_back(f(x));
  }
  return s;
}

ScanField sample_square(double a, double b, int n,
                        const std::function<double(double, double)>& f) {
  ScanField s;
  s.d = 2;
  s.h = (b - a) / n;
  s.grid_dims = {n, n, 0};
  s.grid_origin = Point(a, a);
  s.pos.reserve(size_t(n) * size_t(n));
  s.val.reserve(size_t(n) * size_t(n));
  s.w.assign(size_t(n) * size_t(n), s.h * s.h);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      double x = a + (i + 0.5) * s.h, y = a + (j + 0.5) * s.h;
      s.pos.push_back(Point(x, y));
      s.val.push_back(f(x, y));
    }
  return s;
}

}  // namespace lipkit
