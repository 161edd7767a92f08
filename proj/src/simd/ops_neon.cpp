#include <arm_neon.h>

#include <cmath>

#include "lipkit/simd/ops.hpp"

// aarch64 build only. Mirrors the scalar reference two lanes at a time; kept
// deliberately plain since this path cannot be exercised on the primary CI
// hardware.

namespace lipkit::simd {
namespace {

inline double hsum(float64x2_t v) { return vgetq_lane_f64(v, 0) + vgetq_lane_f64(v, 1); }

double dot_v(const double* a, const double* b, size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vfmaq_f64(acc, vld1q_f64(a + i), vld1q_f64(b + i));
  double s = hsum(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double sum_v(const double* v, size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vaddq_f64(acc, vld1q_f64(v + i));
  double s = hsum(acc);
  for (; i < n; ++i) s += v[i];
  return s;
}

double abs_dev_sum_v(const double* v, size_t n, double mu) {
  const float64x2_t m = vdupq_n_f64(mu);
  float64x2_t acc = vdupq_n_f64(0.0);
  size_t i = 0;
  for (; i + 2 <= n; i += 2)
    acc = vaddq_f64(acc, vabsq_f64(vsubq_f64(vld1q_f64(v + i), m)));
  double s = hsum(acc);
  for (; i < n; ++i) s += std::fabs(v[i] - mu);
  return s;
}

void axpy_v(double a, const double* x, double* y, size_t n) {
  const float64x2_t av = vdupq_n_f64(a);
  size_t i = 0;
  for (; i + 2 <= n; i += 2)
    vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), av, vld1q_f64(x + i)));
  for (; i < n; ++i) y[i] += a * x[i];
}

double refl_row_n2_v(double x0, double x1, const double* y0, const double* y1,
                     const double* f, size_t m) {
  const float64x2_t vx0 = vdupq_n_f64(x0);
  const float64x2_t vx1 = vdupq_n_f64(x1);
  float64x2_t acc = vdupq_n_f64(0.0);
  size_t j = 0;
  for (; j + 2 <= m; j += 2) {
    float64x2_t dx = vsubq_f64(vx0, vld1q_f64(y0 + j));
    float64x2_t sy = vaddq_f64(vx1, vld1q_f64(y1 + j));
    float64x2_t den = vfmaq_f64(vmulq_f64(sy, sy), dx, dx);
    acc = vaddq_f64(acc, vdivq_f64(vld1q_f64(f + j), den));
  }
  double s = hsum(acc);
  for (; j < m; ++j) {
    double dx = x0 - y0[j];
    double sy = x1 + y1[j];
    s += f[j] / (dx * dx + sy * sy);
  }
  return s;
}

double refl_row_n3_v(double x0, double x1, double x2, const double* y0,
                     const double* y1, const double* y2, const double* f, size_t m) {
  const float64x2_t vx0 = vdupq_n_f64(x0);
  const float64x2_t vx1 = vdupq_n_f64(x1);
  const float64x2_t vx2 = vdupq_n_f64(x2);
  float64x2_t acc = vdupq_n_f64(0.0);
  size_t j = 0;
  for (; j + 2 <= m; j += 2) {
    float64x2_t d0 = vsubq_f64(vx0, vld1q_f64(y0 + j));
    float64x2_t d1 = vsubq_f64(vx1, vld1q_f64(y1 + j));
    float64x2_t s2 = vaddq_f64(vx2, vld1q_f64(y2 + j));
    float64x2_t r2 = vfmaq_f64(vfmaq_f64(vmulq_f64(s2, s2), d1, d1), d0, d0);
    float64x2_t den = vmulq_f64(r2, vsqrtq_f64(r2));
    acc = vaddq_f64(acc, vdivq_f64(vld1q_f64(f + j), den));
  }
  double s = hsum(acc);
  for (; j < m; ++j) {
    double d0 = x0 - y0[j];
    double d1 = x1 - y1[j];
    double s2 = x2 + y2[j];
    double r2 = d0 * d0 + d1 * d1 + s2 * s2;
    s += f[j] / (r2 * std::sqrt(r2));
  }
  return s;
}

double tb_row_n2_v(double x0, double x1, double bx, const double* y0,
                   const double* y1, const double* b, const double* f, size_t m) {
  const float64x2_t vx0 = vdupq_n_f64(x0);
  const float64x2_t vx1 = vdupq_n_f64(x1);
  const float64x2_t vbx = vdupq_n_f64(bx);
  float64x2_t acc = vdupq_n_f64(0.0);
  size_t j = 0;
  for (; j + 2 <= m; j += 2) {
    float64x2_t dx = vsubq_f64(vx0, vld1q_f64(y0 + j));
    float64x2_t sy = vaddq_f64(vx1, vld1q_f64(y1 + j));
    float64x2_t den = vfmaq_f64(vmulq_f64(sy, sy), dx, dx);
    float64x2_t db = vabsq_f64(vsubq_f64(vbx, vld1q_f64(b + j)));
    acc = vaddq_f64(acc, vdivq_f64(vmulq_f64(db, vld1q_f64(f + j)), den));
  }
  double s = hsum(acc);
  for (; j < m; ++j) {
    double dx = x0 - y0[j];
    double sy = x1 + y1[j];
    s += std::fabs(bx - b[j]) * f[j] / (dx * dx + sy * sy);
  }
  return s;
}

}  // namespace

const Ops* neon_ops_impl() {
  static const Ops table{dot_v,         sum_v,         abs_dev_sum_v, axpy_v,
                         refl_row_n2_v, refl_row_n3_v, tb_row_n2_v};
  return &table;
}  // consumed by dispatch.cpp

}  // namespace lipkit::simd
