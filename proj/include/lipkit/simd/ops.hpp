#pragma once
#include <cstddef>

namespace lipkit::simd {

enum class Isa { scalar, avx2, neon };
const char* isa_name(Isa isa);

// Vector kernels used by the hot loops: reflection-kernel matvec rows for
// empirical operator norms, oscillation scans, and the usual reductions.
// Every entry has a scalar reference implementation; wide variants must agree
// with it to tight relative tolerance (equivalence-tested, not bit-exact
// because of FMA/reassociation).
struct Ops {
  double (*dot)(const double* a, const double* b, size_t n);
  double (*sum)(const double* v, size_t n);
  // sum of |v_i - mu|
  double (*abs_dev_sum)(const double* v, size_t n, double mu);
  // y += a*x
  void (*axpy)(double a, const double* x, double* y, size_t n);
  // sum_j f_j / ((x0-y0_j)^2 + (x1+y1_j)^2)            [n = 2 reflection kernel]
  double (*refl_row_n2)(double x0, double x1, const double* y0, const double* y1,
                        const double* f, size_t m);
  // sum_j f_j / r_j^3, r_j^2 = (x0-y0_j)^2 + (x1-y1_j)^2 + (x2+y2_j)^2  [n = 3]
  double (*refl_row_n3)(double x0, double x1, double x2, const double* y0,
                        const double* y1, const double* y2, const double* f, size_t m);
  // sum_j |bx - b_j| f_j / ((x0-y0_j)^2 + (x1+y1_j)^2)  [commutator row, n = 2]
  double (*tb_row_n2)(double x0, double x1, double bx, const double* y0,
                      const double* y1, const double* b, const double* f, size_t m);
};

const Ops& scalar_ops();
// Null when the instruction set is not compiled in or the CPU lacks it.
const Ops* avx2_ops();
const Ops* neon_ops();

// Active table: widest available unless overridden by env LIPKIT_ISA
// (values: scalar, avx2, neon).
const Ops& ops();
Isa active_isa();

}  // namespace lipkit::simd
