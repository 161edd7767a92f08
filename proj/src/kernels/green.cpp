#include "lipkit/kernels/half_space_green.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace lipkit {
namespace {

constexpr double kPi = 3.14159265358979323846;

// ---- primitive derivative tables ------------------------------------------
// Closed-form partial derivatives of log|v| (orders 0..4) and |v|^{-1}
// (orders 0..2), with idx the list of differentiated components.  These are
// the only transcendental building blocks of the Green residuals; the mixed
// x/y derivatives below are exact binomial expansions over them.

double log_norm_deriv(const Point& v, const int* idx, int k) {
  double r2 = norm2(v);
  switch (k) {
    case 0:
      return 0.5 * std::log(r2);
    case 1:
      return v[idx[0]] / r2;
    case 2: {
      double d = idx[0] == idx[1] ? 1.0 : 0.0;
      return d / r2 - 2.0 * v[idx[0]] * v[idx[1]] / (r2 * r2);
    }
    case 3: {
      int i = idx[0], j = idx[1], k2 = idx[2];
      double r4 = r2 * r2, r6 = r4 * r2;
      double dv = (i == j ? v[k2] : 0.0) + (i == k2 ? v[j] : 0.0) +
                  (j == k2 ? v[i] : 0.0);
      return -2.0 * dv / r4 + 8.0 * v[i] * v[j] * v[k2] / r6;
    }
    case 4: {
      int i = idx[0], j = idx[1], k2 = idx[2], l = idx[3];
      double r4 = r2 * r2, r6 = r4 * r2, r8 = r4 * r4;
      double dd = double((i == j && k2 == l) ? 1 : 0) +
                  double((i == k2 && j == l) ? 1 : 0) +
                  double((i == l && j == k2) ? 1 : 0);
      double dvv = (i == j ? v[k2] * v[l] : 0.0) + (i == k2 ? v[j] * v[l] : 0.0) +
                   (i == l ? v[j] * v[k2] : 0.0) + (j == k2 ? v[i] * v[l] : 0.0) +
                   (j == l ? v[i] * v[k2] : 0.0) + (k2 == l ? v[i] * v[j] : 0.0);
      return -2.0 * dd / r4 + 8.0 * dvv / r6 -
             48.0 * v[i] * v[j] * v[k2] * v[l] / r8;
    }
    default:
      throw std::invalid_argument("green residual derivative: order beyond table");
  }
}

double inv_norm_deriv(const Point& v, const int* idx, int k) {
  double r2 = norm2(v), r = std::sqrt(r2);
  switch (k) {
    case 0:
      return 1.0 / r;
    case 1:
      return -v[idx[0]] / (r2 * r);
    case 2: {
      double d = idx[0] == idx[1] ? 1.0 : 0.0;
      double r5 = r2 * r2 * r;
      return (3.0 * v[idx[0]] * v[idx[1]] - d * r2) / r5;
    }
    default:
      throw std::invalid_argument("green residual derivative: order beyond table");
  }
}

// d^(p0,p1) |u|^2 over the first two components.
double usq_deriv(const Point& u, int p0, int p1) {
  int t = p0 + p1;
  if (t == 0) return u[0] * u[0] + u[1] * u[1];
  if (t == 1) return 2.0 * (p0 ? u[0] : u[1]);
  if (t == 2) return (p0 == 2 || p1 == 2) ? 2.0 : 0.0;
  return 0.0;
}

// d^(q0,q1) (|v|^2 / 2) over the first two components.
double vsq_half_deriv(const Point& v, int q0, int q1) {
  int t = q0 + q1;
  if (t == 0) return 0.5 * (v[0] * v[0] + v[1] * v[1]);
  if (t == 1) return q0 ? v[0] : v[1];
  if (t == 2) return (q0 == 2 || q1 == 2) ? 1.0 : 0.0;
  return 0.0;
}

double log_deriv_mi(const Point& v, int q0, int q1) {
  int idx[4], k = 0;
  for (int r = 0; r < q0; ++r) idx[k++] = 0;
  for (int r = 0; r < q1; ++r) idx[k++] = 1;
  return log_norm_deriv(v, idx, k);
}

// Mixed derivative of the 2-D biharmonic residual
//   8 pi R = |u|^2 (log|v| + 1/2) - |v|^2 / 2,  u = x - y,  v = x - ybar.
// Each d/dx_i turns into d/du_i + d/dv_i; each d/dy_j into
// -d/du_j + sigma_j d/dv_j with sigma = (-1, +1).  The expansion is exact.
double bilaplace_residual_deriv(const MultiIndex& alpha, const MultiIndex& beta,
                                const Point& u, const Point& v) {
  double total = 0.0;
  for (int g0 = 0; g0 <= alpha[0]; ++g0)
    for (int g1 = 0; g1 <= alpha[1]; ++g1)
      for (int d0 = 0; d0 <= beta[0]; ++d0)
        for (int d1 = 0; d1 <= beta[1]; ++d1) {
          int p0 = (alpha[0] - g0) + (beta[0] - d0);
          int p1 = (alpha[1] - g1) + (beta[1] - d1);
          if (p0 + p1 > 2) continue;  // |u|^2 kills higher u-orders
          int q0 = g0 + d0, q1 = g1 + d1;
          double coef = binomial(alpha[0], g0) * binomial(alpha[1], g1) *
                        binomial(beta[0], d0) * binomial(beta[1], d1);
          if (((beta[0] - d0) + (beta[1] - d1)) & 1) coef = -coef;  // -d/du_j
          if (d0 & 1) coef = -coef;  // sigma along the wall is -1
          double ufac = usq_deriv(u, p0, p1);
          if (ufac != 0.0) {
            double afac = (q0 + q1 == 0)
                              ? 0.5 * std::log(norm2(v)) + 0.5
                              : log_deriv_mi(v, q0, q1);
            total += coef * ufac * afac;
          }
          if (p0 == 0 && p1 == 0) total -= coef * vsq_half_deriv(v, q0, q1);
        }
  return total / (8.0 * kPi);
}

void check_index_pair(const ModelOperator& op, const MultiIndex& alpha,
                      const MultiIndex& beta) {
  int n = op.dim(), m = op.half_order();
  if (alpha.dim() != n || beta.dim() != n)
    throw std::invalid_argument("green residual derivative: index dimension mismatch");
  for (int i = 0; i < 3; ++i)
    if (alpha[i] < 0 || beta[i] < 0)
      throw std::invalid_argument("green residual derivative: negative index");
  if (alpha.order() > m || beta.order() > m)
    throw std::invalid_argument(
        "green residual derivative: only orders up to m per side are tabulated");
}

}  // namespace

Point wall_reflection(int n, Point y) {
  y[n - 1] = -y[n - 1];
  return y;
}

double fundamental_solution(const ModelOperator& op, const Point& x) {
  double r2 = norm2(x);
  if (r2 == 0.0)
    throw std::domain_error("fundamental solution: singular at x = 0");
  switch (op.kind) {
    case ModelKind::laplace_2d:
      return -0.25 * std::log(r2) / kPi;
    case ModelKind::laplace_3d:
      return 1.0 / (4.0 * kPi * std::sqrt(r2));
    case ModelKind::bilaplace_2d:
      return r2 * 0.5 * std::log(r2) / (16.0 * kPi);
  }
  return 0.0;
}

namespace {

double stencil_once(const ModelOperator& op, const Point& x, double h) {
  auto F = [&](double dx, double dy, double dz = 0.0) {
    return fundamental_solution(op, {x[0] + dx, x[1] + dy, x[2] + dz});
  };
  switch (op.kind) {
    case ModelKind::laplace_2d:
      return (F(h, 0) + F(-h, 0) + F(0, h) + F(0, -h) - 4.0 * F(0, 0)) / (h * h);
    case ModelKind::laplace_3d:
      return (F(h, 0, 0) + F(-h, 0, 0) + F(0, h, 0) + F(0, -h, 0) + F(0, 0, h) +
              F(0, 0, -h) - 6.0 * F(0, 0, 0)) /
             (h * h);
    case ModelKind::bilaplace_2d: {
      double s = 20.0 * F(0, 0);
      s -= 8.0 * (F(h, 0) + F(-h, 0) + F(0, h) + F(0, -h));
      s += 2.0 * (F(h, h) + F(h, -h) + F(-h, h) + F(-h, -h));
      s += F(2 * h, 0) + F(-2 * h, 0) + F(0, 2 * h) + F(0, -2 * h);
      return s / (h * h * h * h);
    }
  }
  return 0.0;
}

}  // namespace

double fundamental_stencil_residual(const ModelOperator& op, const Point& x,
                                    double h_rel) {
  double h = h_rel * norm(x);
  if (h <= 0.0)
    throw std::domain_error("stencil residual: needs x != 0 and h_rel > 0");
  // Both stencils have O(h^2) leading error; one Richardson step removes it.
  double coarse = stencil_once(op, x, h);
  double fine = stencil_once(op, x, 0.5 * h);
  return std::fabs((4.0 * fine - coarse) / 3.0);
}

double half_space_green(const ModelOperator& op, const Point& x, const Point& y) {
  int n = op.dim();
  Point u = x - y;
  Point v = x - wall_reflection(n, y);
  double r2 = norm2(u), rb2 = norm2(v);
  if (r2 == 0.0)
    throw std::domain_error("half-space Green function: singular at x = y");
  switch (op.kind) {
    case ModelKind::laplace_2d:
      return -0.25 * std::log(r2 / rb2) / kPi;
    case ModelKind::laplace_3d:
      return 1.0 / (4.0 * kPi * std::sqrt(r2)) - 1.0 / (4.0 * kPi * std::sqrt(rb2));
    case ModelKind::bilaplace_2d:
      // Boggio's form: 8 pi G = (rb^2 - r^2)/2 + (r^2/2) log(r^2/rb^2).
      return (0.5 * (rb2 - r2) + 0.5 * r2 * std::log(r2 / rb2)) / (8.0 * kPi);
  }
  return 0.0;
}

double green_residual(const ModelOperator& op, const Point& x, const Point& y) {
  int n = op.dim();
  Point u = x - y;
  Point v = x - wall_reflection(n, y);
  double rb2 = norm2(v);
  if (rb2 == 0.0)
    throw std::domain_error("green residual: singular at x = ybar");
  switch (op.kind) {
    case ModelKind::laplace_2d:
      return -0.25 * std::log(rb2) / kPi;
    case ModelKind::laplace_3d:
      return 1.0 / (4.0 * kPi * std::sqrt(rb2));
    case ModelKind::bilaplace_2d:
      return (norm2(u) * (0.5 * std::log(rb2) + 0.5) - 0.5 * rb2) /
             (8.0 * kPi);
  }
  return 0.0;
}

double green_residual_derivative(const ModelOperator& op, const MultiIndex& alpha,
                                 const MultiIndex& beta, const Point& x,
                                 const Point& y) {
  check_index_pair(op, alpha, beta);
  int n = op.dim();
  Point u = x - y;
  Point v = x - wall_reflection(n, y);
  if (norm2(v) == 0.0)
    throw std::domain_error("green residual derivative: singular at x = ybar");
  if (op.kind == ModelKind::bilaplace_2d)
    return bilaplace_residual_deriv(alpha, beta, u, v);

  // Laplace residuals depend on v alone, so d/dx_i = d/dv_i and
  // d/dy_j = sigma_j d/dv_j with sigma = -1 tangentially, +1 normally.
  double sign = 1.0;
  for (int j = 0; j + 1 < n; ++j)
    if (beta[j] & 1) sign = -sign;
  int idx[2], k = 0;
  for (int i = 0; i < n; ++i) {
    int reps = alpha[i] + beta[i];
    for (int r = 0; r < reps; ++r) {
      if (k >= 2)
        throw std::invalid_argument(
            "green residual derivative: order beyond table");
      idx[k++] = i;
    }
  }
  if (op.kind == ModelKind::laplace_2d)
    return sign * (-0.5 / kPi) * log_norm_deriv(v, idx, k);
  return sign * (0.25 / kPi) * inv_norm_deriv(v, idx, k);
}

double poisson_kernel(const ModelOperator& op, int j, const Point& x,
                      const Point& y_wall) {
  int n = op.dim();
  if (y_wall[n - 1] != 0.0)
    throw std::invalid_argument(
        "poisson kernel: boundary point must have zero normal coordinate");
  Point d = x - y_wall;
  double rho2 = norm2(d);
  if (rho2 == 0.0)
    throw std::domain_error("poisson kernel: singular at x = (y', 0)");
  double xn = x[n - 1];
  switch (op.kind) {
    case ModelKind::laplace_2d:
      if (j == 0) return xn / (kPi * rho2);
      break;
    case ModelKind::laplace_3d:
      if (j == 0) return xn / (2.0 * kPi * rho2 * std::sqrt(rho2));
      break;
    case ModelKind::bilaplace_2d:
      if (j == 1) return xn * xn / (kPi * rho2);
      if (j == 0) return 2.0 * xn * xn * xn / (kPi * rho2 * rho2);
      break;
  }
  throw std::domain_error("poisson kernel: no closed form for (" + op.name() +
                          ", j = " + std::to_string(j) + ")");
}

namespace {

ResidualDecayReport decay_check_impl(
    const ModelOperator& op,
    const std::vector<std::pair<MultiIndex, MultiIndex>>& combos, long pairs,
    Rng& rng) {
  int n = op.dim();
  ResidualDecayReport rep;
  long accepted = 0;
  while (accepted < pairs) {
    double xn = rng.log_uniform(1e-2, 1e2);
    double yn = rng.log_uniform(1e-2, 1e2);
    double sep = rng.log_uniform(1e-2, 1e2);
    Point x, y;
    if (n == 2) {
      x = Point(0.0, xn);
      y = Point(rng.unit() < 0.5 ? -sep : sep, yn);
    } else {
      double phi = rng.uniform(0.0, 2.0 * kPi);
      x = Point(0.0, 0.0, xn);
      y = Point(sep * std::cos(phi), sep * std::sin(phi), yn);
    }
    double vb = std::sqrt(sep * sep + (xn + yn) * (xn + yn));
    if (vb < 1e-2 || vb > 1e2) continue;
    ++accepted;
    int decade = std::min(3, int(std::floor(std::log10(vb) + 2.0)));
    double stat = 0.0;
    for (const auto& [al, be] : combos)
      stat = std::max(stat,
                      std::fabs(green_residual_derivative(op, al, be, x, y)));
    stat *= std::pow(vb, double(n));
    rep.decade_sup[size_t(decade)] =
        std::max(rep.decade_sup[size_t(decade)], stat);
    ++rep.decade_count[size_t(decade)];
    rep.overall_sup = std::max(rep.overall_sup, stat);
  }
  double lo = rep.overall_sup, hi = 0.0;
  for (int d = 0; d < 4; ++d) {
    if (rep.decade_count[size_t(d)] == 0) continue;
    lo = std::min(lo, rep.decade_sup[size_t(d)]);
    hi = std::max(hi, rep.decade_sup[size_t(d)]);
  }
  rep.drift = lo > 0.0 ? hi / lo : 0.0;
  return rep;
}

}  // namespace

ResidualDecayReport residual_decay_check(const ModelOperator& op,
                                         const MultiIndex& alpha,
                                         const MultiIndex& beta, long pairs,
                                         Rng& rng) {
  check_index_pair(op, alpha, beta);
  return decay_check_impl(op, {{alpha, beta}}, pairs, rng);
}

ResidualDecayReport residual_decay_check_all(const ModelOperator& op, long pairs,
                                             Rng& rng) {
  int n = op.dim(), m = op.half_order();
  std::vector<std::pair<MultiIndex, MultiIndex>> combos;
  auto top = multi_indices_exact(n, m);
  for (const auto& a : top)
    for (const auto& b : top) combos.emplace_back(a, b);
  return decay_check_impl(op, combos, pairs, rng);
}

}  // namespace lipkit
