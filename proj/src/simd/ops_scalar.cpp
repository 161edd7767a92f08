#include <cmath>

#include "lipkit/simd/ops.hpp"

namespace lipkit::simd {
namespace {

double dot_s(const double* a, const double* b, size_t n) {
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

double sum_s(const double* v, size_t n) {
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += v[i];
  return s;
}

double abs_dev_sum_s(const double* v, size_t n, double mu) {
  double s = 0.0;
  for (size_t i = 0; i < n; ++i) s += std::fabs(v[i] - mu);
  return s;
}

void axpy_s(double a, const double* x, double* y, size_t n) {
  for (size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

double refl_row_n2_s(double x0, double x1, const double* y0, const double* y1,
                     const double* f, size_t m) {
  double s = 0.0;
  for (size_t j = 0; j < m; ++j) {
    double dx = x0 - y0[j];
    double sy = x1 + y1[j];
    s += f[j] / (dx * dx + sy * sy);
  }
  return s;
}

double refl_row_n3_s(double x0, double x1, double x2, const double* y0,
                     const double* y1, const double* y2, const double* f, size_t m) {
  double s = 0.0;
  for (size_t j = 0; j < m; ++j) {
    double d0 = x0 - y0[j];
    double d1 = x1 - y1[j];
    double s2 = x2 + y2[j];
    double r2 = d0 * d0 + d1 * d1 + s2 * s2;
    s += f[j] / (r2 * std::sqrt(r2));
  }
  return s;
}

double tb_row_n2_s(double x0, double x1, double bx, const double* y0,
                   const double* y1, const double* b, const double* f, size_t m) {
  double s = 0.0;
  for (size_t j = 0; j < m; ++j) {
    double dx = x0 - y0[j];
    double sy = x1 + y1[j];
    s += std::fabs(bx - b[j]) * f[j] / (dx * dx + sy * sy);
  }
  return s;
}

}  // namespace

const Ops& scalar_ops() {
  static const Ops table{dot_s,         sum_s,         abs_dev_sum_s, axpy_s,
                         refl_row_n2_s, refl_row_n3_s, tb_row_n2_s};
  return table;
}

}  // namespace lipkit::simd
