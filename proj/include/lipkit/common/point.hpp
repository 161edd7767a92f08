#pragma once
#include <array>
#include <cmath>

namespace lipkit {

// Point in R^n, n <= 3. Unused trailing coordinates stay zero so norms and
// dots are dimension-agnostic.
struct Point {
  std::array<double, 3> v{0.0, 0.0, 0.0};

  Point() = default;
  Point(double x, double y) : v{x, y, 0.0} {}
  Point(double x, double y, double z) : v{x, y, z} {}

  double& operator[](int i) { return v[size_t(i)]; }
  double operator[](int i) const { return v[size_t(i)]; }

  Point& operator+=(const Point& o) {
    for (int i = 0; i < 3; ++i) v[i] += o.v[i];
    return *this;
  }
  Point& operator-=(const Point& o) {
    for (int i = 0; i < 3; ++i) v[i] -= o.v[i];
    return *this;
  }
  Point& operator*=(double c) {
    for (int i = 0; i < 3; ++i) v[i] *= c;
    return *this;
  }
};

inline Point operator+(Point a, const Point& b) { return a += b; }
inline Point operator-(Point a, const Point& b) { return a -= b; }
inline Point operator*(double c, Point a) { return a *= c; }
inline Point operator*(Point a, double c) { return a *= c; }

inline double dot(const Point& a, const Point& b) {
  return a.v[0] * b.v[0] + a.v[1] * b.v[1] + a.v[2] * b.v[2];
}
inline double norm2(const Point& a) { return dot(a, a); }
inline double norm(const Point& a) { return std::sqrt(norm2(a)); }

}  // namespace lipkit
