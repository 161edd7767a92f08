#pragma once
#include <array>
#include <functional>
#include <vector>

#include "lipkit/common/point.hpp"

namespace lipkit {

// Sampled scalar field with quadrature weights: the common currency of the
// oscillation scans. Positions live in R^d; period[i] > 0 wraps axis i with
// min-image distances. When the samples form a row-major lattice, grid_dims
// and grid_origin enable windowed ball gathers.
struct ScanField {
  int d = 1;
  std::vector<Point> pos;
  std::vector<double> val;
  std::vector<double> w;
  double h = 0.0;  // finest sample spacing; sets the ball-radius ladder
  std::array<double, 3> period{0.0, 0.0, 0.0};
  std::array<int, 3> grid_dims{0, 0, 0};
  Point grid_origin;

  double dist(const Point& a, const Point& b) const;
  double extent() const;  // diameter bound of the sample cloud
  bool uniform_1d() const;
};

// Midpoint samples of f on [a, b], n cells.
ScanField sample_interval(double a, double b, int n,
                          const std::function<double(double)>& f);
// Midpoint samples on an axis-aligned square [a,b]^2, n cells per axis.
ScanField sample_square(double a, double b, int n,
                        const std::function<double(double, double)>& f);

}  // namespace lipkit
