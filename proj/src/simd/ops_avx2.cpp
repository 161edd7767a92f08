#include <immintrin.h>

#include <cmath>

#include "lipkit/simd/ops.hpp"

// Compiled with -mavx2 -mfma; selected at runtime only when the CPU reports
// AVX2 support.

namespace lipkit::simd {
namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

double dot_v(const double* a, const double* b, size_t n) {
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4)
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
  double s = hsum(acc);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

double sum_v(const double* v, size_t n) {
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(v + i));
  double s = hsum(acc);
  for (; i < n; ++i) s += v[i];
  return s;
}

double abs_dev_sum_v(const double* v, size_t n, double mu) {
  const __m256d m = _mm256_set1_pd(mu);
  const __m256d signmask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d d = _mm256_sub_pd(_mm256_loadu_pd(v + i), m);
    acc = _mm256_add_pd(acc, _mm256_andnot_pd(signmask, d));
  }
  double s = hsum(acc);
  for (; i < n; ++i) s += std::fabs(v[i] - mu);
  return s;
}

void axpy_v(double a, const double* x, double* y, size_t n) {
  const __m256d av = _mm256_set1_pd(a);
  size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d yv = _mm256_loadu_pd(y + i);
    yv = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), yv);
    _mm256_storeu_pd(y + i, yv);
  }
  for (; i < n; ++i) y[i] += a * x[i];
}

double refl_row_n2_v(double x0, double x1, const double* y0, const double* y1,
                     const double* f, size_t m) {
  const __m256d vx0 = _mm256_set1_pd(x0);
  const __m256d vx1 = _mm256_set1_pd(x1);
  __m256d acc = _mm256_setzero_pd();
  size_t j = 0;
  for (; j + 4 <= m; j += 4) {
    __m256d dx = _mm256_sub_pd(vx0, _mm256_loadu_pd(y0 + j));
    __m256d sy = _mm256_add_pd(vx1, _mm256_loadu_pd(y1 + j));
    __m256d den = _mm256_fmadd_pd(dx, dx, _mm256_mul_pd(sy, sy));
    acc = _mm256_add_pd(acc, _mm256_div_pd(_mm256_loadu_pd(f + j), den));
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
  const __m256d vx0 = _mm256_set1_pd(x0);
  const __m256d vx1 = _mm256_set1_pd(x1);
  const __m256d vx2 = _mm256_set1_pd(x2);
  __m256d acc = _mm256_setzero_pd();
  size_t j = 0;
  for (; j + 4 <= m; j += 4) {
    __m256d d0 = _mm256_sub_pd(vx0, _mm256_loadu_pd(y0 + j));
    __m256d d1 = _mm256_sub_pd(vx1, _mm256_loadu_pd(y1 + j));
    __m256d s2 = _mm256_add_pd(vx2, _mm256_loadu_pd(y2 + j));
    __m256d r2 = _mm256_fmadd_pd(d0, d0, _mm256_fmadd_pd(d1, d1, _mm256_mul_pd(s2, s2)));
    __m256d den = _mm256_mul_pd(r2, _mm256_sqrt_pd(r2));
    acc = _mm256_add_pd(acc, _mm256_div_pd(_mm256_loadu_pd(f + j), den));
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
  const __m256d vx0 = _mm256_set1_pd(x0);
  const __m256d vx1 = _mm256_set1_pd(x1);
  const __m256d vbx = _mm256_set1_pd(bx);
  const __m256d signmask = _mm256_set1_pd(-0.0);
  __m256d acc = _mm256_setzero_pd();
  size_t j = 0;
  for (; j + 4 <= m; j += 4) {
    __m256d dx = _mm256_sub_pd(vx0, _mm256_loadu_pd(y0 + j));
    __m256d sy = _mm256_add_pd(vx1, _mm256_loadu_pd(y1 + j));
    __m256d den = _mm256_fmadd_pd(dx, dx, _mm256_mul_pd(sy, sy));
    __m256d db = _mm256_andnot_pd(signmask, _mm256_sub_pd(vbx, _mm256_loadu_pd(b + j)));
    __m256d num = _mm256_mul_pd(db, _mm256_loadu_pd(f + j));
    acc = _mm256_add_pd(acc, _mm256_div_pd(num, den));
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

const Ops* avx2_ops_impl() {
  static const Ops table{dot_v,         sum_v,         abs_dev_sum_v, axpy_v,
                         refl_row_n2_v, refl_row_n3_v, tb_row_n2_v};
  return &table;
}

}  // namespace lipkit::simd
