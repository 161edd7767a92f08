#include <cmath>
#include <vector>

#include "doctest.h"
#include "lipkit/common/rng.hpp"
#include "lipkit/simd/ops.hpp"

using namespace lipkit;
using namespace lipkit::simd;

namespace {

struct Data {
  std::vector<double> a, b, c, f;
  explicit Data(size_t n, uint64_t seed) : a(n), b(n), c(n), f(n) {
    Rng r(seed);
    for (size_t i = 0; i < n; ++i) {
      a[i] = r.uniform(-2.0, 2.0);
      b[i] = r.uniform(-2.0, 2.0);
      c[i] = r.uniform(0.1, 2.0);  // positive: reflection depth coordinate
      f[i] = r.uniform(-1.0, 1.0);
    }
  }
};

// Independent long-double reference accumulations.
long double ref_dot(const double* a, const double* b, size_t n) {
  long double s = 0;
  for (size_t i = 0; i < n; ++i) s += (long double)a[i] * b[i];
  return s;
}
long double ref_refl2(double x0, double x1, const Data& d) {
  long double s = 0;
  for (size_t j = 0; j < d.a.size(); ++j) {
    long double dx = x0 - d.a[j], sy = x1 + d.c[j];
    s += (long double)d.f[j] / (dx * dx + sy * sy);
  }
  return s;
}
long double ref_refl3(double x0, double x1, double x2, const Data& d) {
  long double s = 0;
  for (size_t j = 0; j < d.a.size(); ++j) {
    long double d0 = x0 - d.a[j], d1 = x1 - d.b[j], s2 = x2 + d.c[j];
    long double r2 = d0 * d0 + d1 * d1 + s2 * s2;
    s += (long double)d.f[j] / (r2 * sqrtl(r2));
  }
  return s;
}
long double ref_tb2(double x0, double x1, double bx, const Data& d) {
  long double s = 0;
  for (size_t j = 0; j < d.a.size(); ++j) {
    long double dx = x0 - d.a[j], sy = x1 + d.c[j];
    s += fabsl(bx - d.b[j]) * (long double)d.f[j] / (dx * dx + sy * sy);
  }
  return s;
}

void check_table(const Ops& t, const Data& d, double tol) {
  size_t n = d.a.size();
  CHECK(t.dot(d.a.data(), d.b.data(), n) ==
        doctest::Approx(double(ref_dot(d.a.data(), d.b.data(), n))).epsilon(tol));

  long double rs = 0;
  for (double x : d.a) rs += x;
  CHECK(t.sum(d.a.data(), n) == doctest::Approx(double(rs)).epsilon(tol));

  long double rd = 0;
  for (double x : d.a) rd += fabsl(x - 0.25L);
  CHECK(t.abs_dev_sum(d.a.data(), n, 0.25) == doctest::Approx(double(rd)).epsilon(tol));

  std::vector<double> y = d.b;
  t.axpy(0.75, d.a.data(), y.data(), n);
  for (size_t i = 0; i < n; ++i)
    CHECK(y[i] == doctest::Approx(d.b[i] + 0.75 * d.a[i]).epsilon(1e-15));

  CHECK(t.refl_row_n2(0.3, 0.2, d.a.data(), d.c.data(), d.f.data(), n) ==
        doctest::Approx(double(ref_refl2(0.3, 0.2, d))).epsilon(tol));
  CHECK(t.refl_row_n3(0.3, -0.1, 0.2, d.a.data(), d.b.data(), d.c.data(), d.f.data(),
                      n) == doctest::Approx(double(ref_refl3(0.3, -0.1, 0.2, d))).epsilon(tol));
  CHECK(t.tb_row_n2(0.3, 0.2, 0.6, d.a.data(), d.c.data(), d.b.data(), d.f.data(),
                    n) == doctest::Approx(double(ref_tb2(0.3, 0.2, 0.6, d))).epsilon(tol));
}

}  // namespace

TEST_CASE("scalar table matches long-double reference") {
  for (size_t n : {size_t(1), size_t(7), size_t(64), size_t(1001)})
    check_table(scalar_ops(), Data(n, 11 + n), 1e-12);
}

TEST_CASE("wide tables agree with scalar") {
  const Ops* wide[] = {avx2_ops(), neon_ops()};
  for (const Ops* t : wide) {
    if (t == nullptr) continue;
    // FMA reassociates, so compare to the independent reference, not bitwise.
    for (size_t n : {size_t(1), size_t(2), size_t(3), size_t(5), size_t(8),
                     size_t(33), size_t(4096), size_t(4099)})
      check_table(*t, Data(n, 101 + n), 1e-12);
  }
}

TEST_CASE("active table is one of the registered tables") {
  const Ops& t = ops();
  Isa isa = active_isa();
  if (isa == Isa::scalar) CHECK(&t == &scalar_ops());
  if (isa == Isa::avx2) CHECK(&t == avx2_ops());
  if (isa == Isa::neon) CHECK(&t == neon_ops());
  CHECK(std::string(isa_name(isa)).size() > 0);
}
