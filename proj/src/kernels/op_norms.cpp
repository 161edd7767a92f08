#include "lipkit/kernels/op_norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "lipkit/common/parallel.hpp"
#include "lipkit/common/quadrature.hpp"
#include "lipkit/simd/ops.hpp"

namespace lipkit {
namespace {
constexpr double kPi = 3.14159265358979323846;
}

// ---- HalfSpaceGrid ---------------------------------------------------------

void HalfSpaceGrid::validate() const {
  if (n != 2 && n != 3)
    throw std::invalid_argument("half-space grid: n must be 2 or 3");
  if (!(window > 0.0) || columns < 1 || levels < 1)
    throw std::invalid_argument("half-space grid: empty cell layout");
  if (!(y_lo > 0.0) || !(y_hi > y_lo))
    throw std::invalid_argument("half-space grid: needs 0 < y_lo < y_hi");
}

long HalfSpaceGrid::horizontal_cells() const {
  long m = columns;
  return n == 3 ? m * m : m;
}

double HalfSpaceGrid::level_edge(int l) const {
  if (l < 0 || l > levels)
    throw std::invalid_argument("half-space grid: level edge out of range");
  return y_lo * std::pow(y_hi / y_lo, double(l) / double(levels));
}

double HalfSpaceGrid::level_center(int l) const {
  return 0.5 * (level_edge(l) + level_edge(l + 1));
}

double HalfSpaceGrid::level_height(int l) const {
  return level_edge(l + 1) - level_edge(l);
}

double HalfSpaceGrid::cell_measure(int l) const {
  return level_height(l) * std::pow(hx(), n - 1);
}

Point HalfSpaceGrid::cell_point(long i) const {
  long H = horizontal_cells();
  int l = int(i / H);
  long r = i % H;
  double h = hx();
  if (n == 2) return Point((double(r) + 0.5) * h, level_center(l));
  long ix = r / columns, iy = r % columns;
  return Point((double(ix) + 0.5) * h, (double(iy) + 0.5) * h, level_center(l));
}

double HalfSpaceGrid::cell_measure_at(long i) const {
  return cell_measure(int(i / horizontal_cells()));
}

// ---- profiles and pointwise kernel values ----------------------------------

std::function<double(const Point&)> default_dilation_profile(int n) {
  return [n](const Point& z) {
    double r2 = norm2(z);
    return std::log(std::sqrt(r2) + 2.0) / std::pow(1.0 + r2, 0.5 * n);
  };
}

std::function<double(const Point&)> reflected_inverse_profile(int n) {
  return [n](const Point& z) {
    double zn = z[n - 1];
    double h2 = norm2(z) - zn * zn;
    return std::pow(h2 + (2.0 + zn) * (2.0 + zn), -0.5 * n);
  };
}

std::function<double(const Point&)> reflected_log_profile(int n) {
  return [n](const Point& z) {
    double zn = z[n - 1];
    double h2 = norm2(z) - zn * zn;
    return std::log(norm(z) + 2.0) *
           std::pow(h2 + (2.0 + zn) * (2.0 + zn), -0.5 * n);
  };
}

double halfspace_kernel_value(int n, const HalfSpaceKernelSpec& spec,
                              const Point& x, const Point& y) {
  double xn = x[n - 1], yn = y[n - 1];
  if (!(xn > 0.0) || !(yn > 0.0))
    throw std::domain_error("half-space kernel: points must lie above the wall");
  Point d = x - y;
  double h2 = norm2(d) - d[n - 1] * d[n - 1];  // horizontal part |x'-y'|^2
  double rbar2 = h2 + (xn + yn) * (xn + yn);
  switch (spec.kind) {
    case HalfSpaceKernelKind::reflected_inverse:
      return std::pow(rbar2, -0.5 * n);
    case HalfSpaceKernelKind::reflected_log:
      return std::log(norm(d) / xn + 2.0) * std::pow(rbar2, -0.5 * n);
    case HalfSpaceKernelKind::dilation: {
      Point z = (1.0 / xn) * (y - x);
      double q = spec.profile ? spec.profile(z) : default_dilation_profile(n)(z);
      return std::pow(xn, -double(n)) * q;
    }
    case HalfSpaceKernelKind::oscillation: {
      if (!spec.vertical_b)
        throw std::invalid_argument(
            "oscillation kernel: needs a vertical profile b");
      return std::fabs(spec.vertical_b(xn) - spec.vertical_b(yn)) *
             std::pow(rbar2, -0.5 * n);
    }
  }
  return 0.0;
}

// ---- structured (block-Toeplitz) kernel matrix -----------------------------

StructuredKernelMatrix::StructuredKernelMatrix(const HalfSpaceGrid& grid,
                                               const HalfSpaceKernelSpec& spec)
    : grid_(grid) {
  grid_.validate();
  if (grid_.cells() > 40000)
    throw std::invalid_argument(
        "structured kernel matrix: cell budget is capped at 4*10^4");
  L_ = grid_.levels;
  M_ = grid_.columns;
  int n = grid_.n;
  long W = 2L * M_ - 1;
  long row_len = (n == 2) ? W : W * W;
  long pairs = long(L_) * L_;

  HalfSpaceKernelSpec sp = spec;
  if (sp.kind == HalfSpaceKernelKind::dilation && !sp.profile)
    sp.profile = default_dilation_profile(n);
  if (sp.kind == HalfSpaceKernelKind::oscillation && !sp.vertical_b)
    throw std::invalid_argument("oscillation kernel: needs a vertical profile b");

  fwd_.assign(size_t(pairs), {});
  rev_.assign(size_t(pairs), {});
  double h = grid_.hx();
  parallel_chunks(size_t(pairs), 8, [&](size_t, size_t begin, size_t end) {
    for (size_t pr = begin; pr < end; ++pr) {
      int l = int(pr / size_t(L_)), k = int(pr % size_t(L_));
      double xl = grid_.level_center(l), yk = grid_.level_center(k);
      auto& row = fwd_[pr];
      row.resize(size_t(row_len));
      if (n == 2) {
        Point x(0.5 * h, xl);
        for (long o = -(M_ - 1); o <= M_ - 1; ++o)
          row[size_t(o + M_ - 1)] =
              halfspace_kernel_value(2, sp, x, Point(0.5 * h + double(o) * h, yk));
      } else {
        Point x(0.5 * h, 0.5 * h, xl);
        for (long dx = -(M_ - 1); dx <= M_ - 1; ++dx)
          for (long dy = -(M_ - 1); dy <= M_ - 1; ++dy)
            row[size_t((dx + M_ - 1) * W + (dy + M_ - 1))] = halfspace_kernel_value(
                3, sp, x,
                Point(0.5 * h + double(dx) * h, 0.5 * h + double(dy) * h, yk));
      }
      auto& rv = rev_[pr];
      rv.resize(size_t(row_len));
      if (n == 2) {
        for (long q = 0; q < W; ++q) rv[size_t(q)] = row[size_t(W - 1 - q)];
      } else {
        for (long a2 = 0; a2 < W; ++a2)
          for (long b2 = 0; b2 < W; ++b2)
            rv[size_t(a2 * W + b2)] =
                row[size_t((W - 1 - a2) * W + (W - 1 - b2))];
      }
    }
  });

  zero_ = true;
  for (const auto& row : fwd_)
    for (double v : row)
      if (v != 0.0) {
        zero_ = false;
        break;
      }

  mu_.resize(size_t(grid_.cells()));
  for (long i = 0; i < grid_.cells(); ++i)
    mu_[size_t(i)] = grid_.cell_measure_at(i);
}

double StructuredKernelMatrix::entry(long i, long j) const {
  long H = grid_.horizontal_cells();
  long l = i / H, k = j / H, ri = i % H, rj = j % H;
  const auto& row = fwd_[size_t(l * L_ + k)];
  if (grid_.n == 2) return row[size_t(rj - ri + M_ - 1)];
  long W = 2L * M_ - 1;
  long ix = ri / M_, iy = ri % M_, jx = rj / M_, jy = rj % M_;
  return row[size_t((jx - ix + M_ - 1) * W + (jy - iy + M_ - 1))];
}

void StructuredKernelMatrix::apply_raw(const double* f, double* g) const {
  const auto& S = simd::ops();
  long H = grid_.horizontal_cells();
  std::fill(g, g + grid_.cells(), 0.0);
  long W = 2L * M_ - 1;
  for (int l = 0; l < L_; ++l)
    for (int k = 0; k < L_; ++k) {
      const double* row = fwd_[size_t(long(l) * L_ + k)].data();
      const double* fk = f + long(k) * H;
      double* gl = g + long(l) * H;
      if (grid_.n == 2) {
        for (long i = 0; i < M_; ++i)
          gl[i] += S.dot(row + (M_ - 1 - i), fk, size_t(M_));
      } else {
        for (long ix = 0; ix < M_; ++ix)
          for (long iy = 0; iy < M_; ++iy) {
            double acc = 0.0;
            for (long jx = 0; jx < M_; ++jx)
              acc += S.dot(row + (jx - ix + M_ - 1) * W + (M_ - 1 - iy),
                           fk + jx * M_, size_t(M_));
            gl[ix * M_ + iy] += acc;
          }
      }
    }
}

void StructuredKernelMatrix::apply_raw_transpose(const double* f, double* g) const {
  const auto& S = simd::ops();
  long H = grid_.horizontal_cells();
  std::fill(g, g + grid_.cells(), 0.0);
  long W = 2L * M_ - 1;
  for (int l = 0; l < L_; ++l)
    for (int k = 0; k < L_; ++k) {
      const double* rv = rev_[size_t(long(l) * L_ + k)].data();
      const double* fl = f + long(l) * H;
      double* gk = g + long(k) * H;
      if (grid_.n == 2) {
        for (long j = 0; j < M_; ++j)
          gk[j] += S.dot(rv + (M_ - 1 - j), fl, size_t(M_));
      } else {
        for (long jx = 0; jx < M_; ++jx)
          for (long jy = 0; jy < M_; ++jy) {
            double acc = 0.0;
            for (long ix = 0; ix < M_; ++ix)
              acc += S.dot(rv + (ix - jx + M_ - 1) * W + (M_ - 1 - jy),
                           fl + ix * M_, size_t(M_));
            gk[jx * M_ + jy] += acc;
          }
      }
    }
}

std::vector<double> StructuredKernelMatrix::apply(const std::vector<double>& f) const {
  if (long(f.size()) != grid_.cells())
    throw std::invalid_argument("structured kernel matrix: size mismatch");
  std::vector<double> t(f.size()), g(f.size());
  for (size_t i = 0; i < f.size(); ++i) t[i] = mu_[i] * f[i];
  apply_raw(t.data(), g.data());
  return g;
}

// ---- weighted operator-norm estimation --------------------------------------

namespace {

double lp_norm(const std::vector<double>& v, double p) {
  double s = 0.0;
  for (double x : v) s += std::pow(std::fabs(x), p);
  return std::pow(s, 1.0 / p);
}

}  // namespace

NormEstimate weighted_norm_estimate(const StructuredKernelMatrix& K,
                                    const NormEstimateOptions& opt) {
  const HalfSpaceGrid& grid = K.grid();
  long N = K.cells();
  NormEstimate est;
  est.p = opt.p;
  est.a = opt.a;
  est.s = 1.0 - opt.a - 1.0 / opt.p;
  est.cells = N;
  if (K.zero_kernel()) return est;  // the discrete operator is exactly zero

  double p = opt.p, pm1 = p - 1.0;
  // Similarity transform to an unweighted l_p problem: with w_i = x_n^{ap}
  // and cell measures mu_i, B = D1 K D2 has the same norm as the quadrature
  // operator on L_p(w dx), where d1 = (w mu)^{1/p} and d2 = mu (w mu)^{-1/p}.
  std::vector<double> d1(size_t(N)), d2(size_t(N));
  for (long i = 0; i < N; ++i) {
    double mu = grid.cell_measure_at(i);
    double w = std::pow(grid.cell_point(i)[grid.n - 1], opt.a * p);
    double wm = w * mu;
    d1[size_t(i)] = std::pow(wm, 1.0 / p);
    d2[size_t(i)] = mu * std::pow(wm, -1.0 / p);
  }
  std::vector<double> f(size_t(N), 1.0), g(size_t(N)), u(size_t(N)),
      tmp(size_t(N));
  auto applyB = [&](const std::vector<double>& in, std::vector<double>& out) {
    for (long i = 0; i < N; ++i) tmp[size_t(i)] = d2[size_t(i)] * in[size_t(i)];
    K.apply_raw(tmp.data(), out.data());
    for (long i = 0; i < N; ++i) out[size_t(i)] *= d1[size_t(i)];
  };
  auto applyBt = [&](const std::vector<double>& in, std::vector<double>& out) {
    for (long i = 0; i < N; ++i) tmp[size_t(i)] = d1[size_t(i)] * in[size_t(i)];
    K.apply_raw_transpose(tmp.data(), out.data());
    for (long i = 0; i < N; ++i) out[size_t(i)] *= d2[size_t(i)];
  };

  // Fixed-point iteration for the l_p -> l_p norm of the nonnegative matrix
  // B: the iterate value is nondecreasing and converges to the norm.
  double nf = lp_norm(f, p);
  for (auto& x : f) x /= nf;
  double lambda = 0.0;
  int used = 0;
  for (int it = 1; it <= opt.power_iters; ++it) {
    used = it;
    applyB(f, g);
    double l = lp_norm(g, p);
    if (l == 0.0) break;
    bool stalled = it > 1 && std::fabs(l - lambda) <= opt.tol * l;
    lambda = std::max(lambda, l);
    if (stalled) break;
    for (long i = 0; i < N; ++i)
      u[size_t(i)] = std::pow(g[size_t(i)] / l, pm1);
    applyBt(u, f);
    for (long i = 0; i < N; ++i) f[size_t(i)] = std::pow(f[size_t(i)], 1.0 / pm1);
    nf = lp_norm(f, p);
    if (nf == 0.0) break;
    for (auto& x : f) x /= nf;
  }
  est.power_value = lambda;
  est.iterations = used;

  Rng rng(opt.seed);
  double probe = 0.0;
  for (int k = 0; k < opt.probes; ++k) {
    for (auto& x : f) x = rng.unit();
    double denom = lp_norm(f, p);
    if (denom == 0.0) continue;
    applyB(f, g);
    probe = std::max(probe, lp_norm(g, p) / denom);
  }
  est.probe_value = probe;
  est.norm = std::max(est.power_value, est.probe_value);
  return est;
}

// ---- analytic dilation bound -------------------------------------------------

double dilation_bound_integral(int n,
                               const std::function<double(const Point&)>& q,
                               double p, double a) {
  if (n != 2 && n != 3)
    throw std::invalid_argument("dilation bound: n must be 2 or 3");
  if (!q) throw std::invalid_argument("dilation bound: missing profile");
  double s = 1.0 - a - 1.0 / p;
  if (!(s > 0.0) || !(s < 1.0))
    throw std::invalid_argument(
        "dilation bound: the profile integral diverges unless 0 < 1 - a - 1/p "
        "< 1");
  const GaussLegendre gl = gauss_legendre(10);
  const GaussLegendre gla = gauss_legendre(8);

  // Horizontal integral W(eta) = int q(z', eta - 1) dz' over dyadic panels
  // anchored at the larger of the two intrinsic scales (1 and eta).
  auto horizontal = [&](double eta) -> double {
    double zn = eta - 1.0;
    double c = std::max(1.0, eta);
    double e0 = c * std::pow(2.0, -16);
    double sum = 0.0;
    if (n == 2) {
      for (size_t i = 0; i < gl.x.size(); ++i) {
        double z = -e0 + 2.0 * e0 * gl.x[i];
        sum += gl.w[i] * 2.0 * e0 * q(Point(z, zn));
      }
      double lo = e0;
      for (int k = -15; k <= 20; ++k) {
        double hi = c * std::pow(2.0, k), width = hi - lo;
        for (size_t i = 0; i < gl.x.size(); ++i) {
          double z = lo + width * gl.x[i];
          sum += gl.w[i] * width * (q(Point(z, zn)) + q(Point(-z, zn)));
        }
        lo = hi;
      }
    } else {
      auto ring = [&](double rho) {
        double acc = 0.0;
        for (size_t j = 0; j < gla.x.size(); ++j) {
          double phi = 2.0 * kPi * gla.x[j];
          acc += gla.w[j] * q(Point(rho * std::cos(phi), rho * std::sin(phi), zn));
        }
        return 2.0 * kPi * acc;  // angular average times circumference/rho
      };
      double lo = 0.0;
      for (int k = -16; k <= 20; ++k) {
        double hi = c * std::pow(2.0, k), width = hi - lo;
        for (size_t i = 0; i < gl.x.size(); ++i) {
          double rho = lo + width * gl.x[i];
          sum += gl.w[i] * width * rho * ring(rho);
        }
        lo = hi;
      }
    }
    return sum;
  };

  // Vertical integral of W(eta) eta^{s - 1}: analytic head below 2^{-30}
  // (W is continuous at 0, the weight integrates to h^s / s), then octave
  // panels far enough out that the truncated tail is negligible for
  // integrable log-tailed profiles.
  double h0 = std::pow(2.0, -30);
  double total = horizontal(0.5 * h0) * std::pow(h0, s) / s;
  double lo = h0;
  for (int k = -30; k <= 120; ++k) {
    double hi = 2.0 * lo, width = lo;
    for (size_t i = 0; i < gl.x.size(); ++i) {
      double eta = lo + width * gl.x[i];
      total += gl.w[i] * width * std::pow(eta, s - 1.0) * horizontal(eta);
    }
    lo = hi;
  }
  return total;
}

// ---- sweep -------------------------------------------------------------------

std::vector<OpNormRow> operator_norm_sweep(const StructuredKernelMatrix& K,
                                           const HalfSpaceKernelSpec& spec,
                                           const std::vector<double>& p_list,
                                           const std::vector<double>& s_list,
                                           const NormEstimateOptions& base,
                                           double statistic_normalizer) {
  int n = K.grid().n;
  std::function<double(const Point&)> q;
  switch (spec.kind) {
    case HalfSpaceKernelKind::dilation:
      q = spec.profile ? spec.profile : default_dilation_profile(n);
      break;
    case HalfSpaceKernelKind::reflected_inverse:
      q = reflected_inverse_profile(n);
      break;
    case HalfSpaceKernelKind::reflected_log:
      q = reflected_log_profile(n);
      break;
    case HalfSpaceKernelKind::oscillation:
      break;  // no dilation form, no analytic bound
  }
  std::vector<OpNormRow> rows;
  rows.reserve(p_list.size() * s_list.size());
  for (double p : p_list)
    for (double s : s_list) {
      NormEstimateOptions opt = base;
      opt.p = p;
      opt.a = 1.0 - s - 1.0 / p;
      NormEstimate est = weighted_norm_estimate(K, opt);
      OpNormRow row;
      row.p = p;
      row.a = opt.a;
      row.s = s;
      row.statistic = est.norm * s * (1.0 - s) / statistic_normalizer;
      if (q) {
        row.bound = dilation_bound_integral(n, q, p, opt.a);
        row.ratio = est.norm / row.bound;
      } else {
        row.bound = std::numeric_limits<double>::quiet_NaN();
        row.ratio = std::numeric_limits<double>::quiet_NaN();
      }
      rows.push_back(row);
    }
  return rows;
}

// ---- direct applies on interior grids ----------------------------------------

namespace {

GridFunction apply_rows(const GridFunction& f, const HalfSpaceKernelSpec& sp,
                        const std::vector<double>* bv) {
  auto grid = f.grid_ptr();
  int n = grid->dim();
  const auto& pts = grid->points();
  size_t N = pts.size();
  double mu = grid->cell_measure();
  std::vector<double> c0(N), c1(N), c2, fv(N);
  for (size_t j = 0; j < N; ++j) {
    c0[j] = pts[j][0];
    c1[j] = pts[j][1];
    fv[j] = f.value(long(j));
  }
  if (n == 3) {
    c2.resize(N);
    for (size_t j = 0; j < N; ++j) c2[j] = pts[j][2];
  }
  GridFunction out(grid, 1, 0);
  const auto& S = simd::ops();
  parallel_chunks(N, 128, [&](size_t, size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      const Point& x = pts[i];
      double acc = 0.0;
      switch (sp.kind) {
        case HalfSpaceKernelKind::reflected_inverse:
          acc = (n == 2)
                    ? S.refl_row_n2(x[0], x[1], c0.data(), c1.data(), fv.data(), N)
                    : S.refl_row_n3(x[0], x[1], x[2], c0.data(), c1.data(),
                                    c2.data(), fv.data(), N);
          break;
        case HalfSpaceKernelKind::oscillation:
          if (n == 2) {
            acc = S.tb_row_n2(x[0], x[1], (*bv)[i], c0.data(), c1.data(),
                              bv->data(), fv.data(), N);
          } else {
            for (size_t j = 0; j < N; ++j) {
              double dx = x[0] - c0[j], dy = x[1] - c1[j], dz = x[2] + c2[j];
              double r2 = dx * dx + dy * dy + dz * dz;
              acc += std::fabs((*bv)[i] - (*bv)[j]) * fv[j] /
                     (r2 * std::sqrt(r2));
            }
          }
          break;
        case HalfSpaceKernelKind::reflected_log:
        case HalfSpaceKernelKind::dilation:
          for (size_t j = 0; j < N; ++j)
            acc += halfspace_kernel_value(n, sp, x, pts[j]) * fv[j];
          break;
      }
      out.set(long(i), 0, acc * mu);
    }
  });
  return out;
}

}  // namespace

GridFunction apply_halfspace_operator(const HalfSpaceKernelSpec& spec,
                                      const GridFunction& f) {
  if (f.components() != 1)
    throw std::invalid_argument("half-space operator: single-component input");
  HalfSpaceKernelSpec sp = spec;
  int n = f.grid().dim();
  if (sp.kind == HalfSpaceKernelKind::dilation && !sp.profile)
    sp.profile = default_dilation_profile(n);
  std::vector<double> bv;
  if (sp.kind == HalfSpaceKernelKind::oscillation) {
    if (!sp.vertical_b)
      throw std::invalid_argument("oscillation kernel: needs a vertical profile b");
    const auto& pts = f.grid().points();
    bv.resize(pts.size());
    for (size_t j = 0; j < pts.size(); ++j) bv[j] = sp.vertical_b(pts[j][n - 1]);
  }
  return apply_rows(f, sp, bv.empty() ? nullptr : &bv);
}

GridFunction apply_oscillation_commutator(const GridFunction& b,
                                          const GridFunction& f) {
  if (b.grid_ptr() != f.grid_ptr())
    throw std::invalid_argument(
        "oscillation commutator: the symbol and the input must share a grid");
  if (b.components() != 1 || f.components() != 1)
    throw std::invalid_argument("oscillation commutator: single-component data");
  size_t N = f.grid().size();
  std::vector<double> bv(N);
  for (size_t j = 0; j < N; ++j) bv[j] = b.value(long(j));
  HalfSpaceKernelSpec sp;
  sp.kind = HalfSpaceKernelKind::oscillation;
  sp.vertical_b = [](double) { return 0.0; };  // unused: values come from bv
  return apply_rows(f, sp, &bv);
}

// ---- layer-split diagnostic ---------------------------------------------------

namespace {

// Integers j with 2^{j/2} < t <= 2^{1 + j/2}; every height lies in exactly
// two of the dyadic-in-height layers.
std::vector<int> height_layers(double t) {
  double qv = 2.0 * std::log2(t);
  int anchor = int(std::ceil(qv)) - 2;
  std::vector<int> js;
  for (int j = anchor - 2; j <= anchor + 3; ++j)
    if (std::exp2(0.5 * j) < t && t <= std::exp2(1.0 + 0.5 * j)) js.push_back(j);
  return js;
}

}  // namespace

LayerSplitReport layer_split_diagnostic(long samples, Rng& rng) {
  LayerSplitReport rep;
  rep.partition_min = std::numeric_limits<int>::max();
  rep.partition_max = 0;
  for (long sidx = 0; sidx < samples; ++sidx) {
    double xn = rng.log_uniform(1e-3, 1e3);
    double yn = rng.log_uniform(1e-3, 1e3);
    double sep = rng.log_uniform(1e-4, 1e4) * (rng.unit() < 0.5 ? -1.0 : 1.0);
    auto jx = height_layers(xn), jy = height_layers(yn);
    rep.partition_min = std::min<int>(rep.partition_min,
                                      std::min(jx.size(), jy.size()));
    rep.partition_max = std::max<int>(rep.partition_max,
                                      std::max(jx.size(), jy.size()));
    int cnt = 0;
    for (int j : jx)
      for (int k : jy)
        if (std::abs(j - k) <= 3) ++cnt;
    double w = 0.25 * double(cnt);  // layer pairs carry weight 1/4 each

    // Riesz-type convolution kernel k(u) = u_1 / |u|^3 in the half-plane.
    double u1 = -sep, u2 = xn - yn;
    double r2 = u1 * u1 + u2 * u2;
    double kval = u1 / (r2 * std::sqrt(r2));
    double rbar2 = sep * sep + (xn + yn) * (xn + yn);
    double nearv = w * kval, farv = (1.0 - w) * kval;
    rep.split_max_gap = std::max(
        rep.split_max_gap, std::fabs(nearv + farv - kval) / std::fabs(kval));
    if (w == 0.0) {
      ++rep.far_pairs;
      rep.far_ratio_sup = std::max(rep.far_ratio_sup, std::fabs(kval) * rbar2);
    } else if (w < 1.0) {
      rep.mixed_ratio_sup =
          std::max(rep.mixed_ratio_sup, std::fabs(farv) * rbar2);
    }
  }
  return rep;
}

}  // namespace lipkit
