#include "lipkit/spaces/besov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lipkit/common/parallel.hpp"
#include "lipkit/geometry/graph_domain.hpp"
#include "lipkit/geometry/polygon.hpp"

namespace lipkit {

namespace {

double pair_diff_p(const BoundaryFunction& g, size_t i, size_t j, double p) {
  double m2 = 0.0;
  for (int c = 0; c < g.components(); ++c) {
    double d = g.value(i, c) - g.value(j, c);
    m2 += d * d;
  }
  return std::pow(m2, 0.5 * p);
}

}  // namespace

BesovBreakdown besov_norm_parts(const BoundaryFunction& g, double p, double s) {
  if (!(p > 1.0) || !(s > 0.0 && s < 1.0))
    throw std::invalid_argument("besov_norm: need p in (1,inf), s in (0,1)");
  const Domain& dom = g.domain();
  const auto& pts = dom.boundary_points();
  const auto& w = dom.boundary_weights();
  const double cut = boundary_resolution(dom);
  const double expo = (dom.dim() - 1) + s * p;
  const size_t N = pts.size();
  std::vector<double> rows(N, 0.0);
  for (size_t i = 0; i < N; ++i) {
    double acc = 0.0;
    for (size_t j = i + 1; j < N; ++j) {
      double d = norm(pts[i] - pts[j]);
      if (d < cut) continue;
      acc += w[i] * w[j] * pair_diff_p(g, i, j, p) / std::pow(d, expo);
    }
    rows[i] = 2.0 * acc;  // both orderings of the pair
  }
  BesovBreakdown out;
  out.lp = g.lp_norm(p);
  out.seminorm = std::pow(pairwise_sum(rows), 1.0 / p);
  out.total = out.lp + out.seminorm;
  return out;
}

double besov_norm(const BoundaryFunction& g, double p, double s) {
  return besov_norm_parts(g, p, s).total;
}

double besov_seminorm(const BoundaryFunction& g, double p, double s) {
  return besov_norm_parts(g, p, s).seminorm;
}

double lp_modulus(const BoundaryFunction& g, double p, double t) {
  const Domain& dom = g.domain();
  const double h = boundary_resolution(dom);
  if (t < h)
    throw std::domain_error("lp_modulus: t below the boundary resolution");
  const auto& pts = dom.boundary_points();
  const auto& w = dom.boundary_weights();
  const size_t N = pts.size();
  std::vector<double> rows(N, 0.0);
  for (size_t i = 0; i < N; ++i) {
    double acc = 0.0;
    for (size_t j = i + 1; j < N; ++j) {
      double d = norm(pts[i] - pts[j]);
      if (d >= t) continue;
      acc += w[i] * w[j] * pair_diff_p(g, i, j, p);
    }
    rows[i] = 2.0 * acc;
  }
  return std::pow(pairwise_sum(rows), 1.0 / p);
}

HigherBesovResult higher_besov_norm(const WhitneyArray& fdot, double p, double s) {
  if (!(p > 1.0) || !(s > 0.0 && s < 1.0))
    throw std::invalid_argument("higher_besov_norm: need p in (1,inf), s in (0,1)");
  const Domain& dom = fdot.domain();
  const int n = dom.dim();
  const int m = fdot.order();
  const int l = fdot.components();
  const auto& pts = dom.boundary_points();
  const auto& w = dom.boundary_weights();
  const size_t N = pts.size();
  const double h = boundary_resolution(dom);
  const double diam = boundary_diameter(dom);

  // Dyadic t-ladder covering the resolved pair distances.
  std::vector<double> rung{h};
  while (rung.back() < 2.0 * diam) rung.push_back(2.0 * rung.back());
  const size_t K = rung.size();

  HigherBesovResult out;
  out.lp_sum = 0.0;
  out.semi_sum = 0.0;
  out.per_alpha_semi.assign(fdot.indices().size(), 0.0);

  for (size_t ai = 0; ai < fdot.indices().size(); ++ai) {
    const MultiIndex& alpha = fdot.indices()[ai];
    out.lp_sum += fdot.component(alpha).lp_norm(p);

    // Precompute the Taylor tail for this alpha.
    auto betas = multi_indices_upto(n, m - 1 - alpha.order());
    std::vector<const BoundaryFunction*> fab(betas.size());
    std::vector<double> invfact(betas.size());
    for (size_t b = 0; b < betas.size(); ++b) {
      fab[b] = &fdot.component(alpha + betas[b]);
      invfact[b] = 1.0 / betas[b].factorial();
    }
    const BoundaryFunction& fa = fdot.component(alpha);

    // Bucket |R_alpha|^p w w by the first ladder rung exceeding the distance.
    std::vector<double> bucket(K, 0.0);
    for (size_t i = 0; i < N; ++i) {
      for (size_t j = i + 1; j < N; ++j) {
        double d = norm(pts[i] - pts[j]);
        size_t k = size_t(std::upper_bound(rung.begin(), rung.end(), d) -
                          rung.begin());
        if (k >= K) continue;  // beyond the ladder (cannot happen for d <= diam)
        double rij2 = 0.0, rji2 = 0.0;
        for (int c = 0; c < l; ++c) {
          double pij = 0.0, pji = 0.0;
          Point dij = pts[i] - pts[j];
          Point dji = pts[j] - pts[i];
          for (size_t b = 0; b < betas.size(); ++b) {
            pij += fab[b]->value(j, c) * betas[b].monomial(dij) * invfact[b];
            pji += fab[b]->value(i, c) * betas[b].monomial(dji) * invfact[b];
          }
          double rij = fa.value(i, c) - pij;
          double rji = fa.value(j, c) - pji;
          rij2 += rij * rij;
          rji2 += rji * rji;
        }
        bucket[k] += w[i] * w[j] *
                     (std::pow(rij2, 0.5 * p) + std::pow(rji2, 0.5 * p));
      }
    }

    // r_alpha(t_k)^p by prefix sums; then the log-midpoint t-integral.
    const double q = p * (m - 1 + s - alpha.order()) + (n - 1);
    double rp = 0.0, integral = 0.0;
    for (size_t k = 0; k < K; ++k) {
      rp += bucket[k];
      integral += rp * std::pow(rung[k], 1.0 - q) * std::log(2.0);
    }
    out.per_alpha_semi[ai] = std::pow(integral, 1.0 / p);
    out.semi_sum += out.per_alpha_semi[ai];
  }
  out.total = out.lp_sum + out.semi_sum;
  return out;
}

namespace {

// Tangential finite differences for the compatibility residuals on a 2-D
// boundary curve: chord differences between the two neighbours along the
// sampling order, which runs in the direction of the tangent (-nu_2, nu_1)
// for both domain types.
void compat_curve(const WhitneyArray& fdot, CompatibilityReport& rep,
                  double* acc, size_t* count) {
  const Domain& dom = fdot.domain();
  const auto& pts = dom.boundary_points();
  const auto& nu = dom.boundary_normals();
  const size_t N = pts.size();
  const auto* graph = dynamic_cast<const LipschitzGraphDomain*>(&dom);
  const MultiIndex e1 = MultiIndex::unit(2, 0), e2 = MultiIndex::unit(2, 1);
  for (const auto& alpha : fdot.indices()) {
    if (alpha.order() > fdot.order() - 2) continue;
    const auto& fa = fdot.component(alpha);
    const auto& f1 = fdot.component(alpha + e1);
    const auto& f2 = fdot.component(alpha + e2);
    for (size_t i = 0; i < N; ++i) {
      // Graph windows carry no periodicity assumption on the data, so the
      // samples at the window ends have no usable neighbor pair.
      if (graph && (i == 0 || i + 1 == N)) continue;
      size_t ip = (i + 1) % N, im = (i + N - 1) % N;
      if (norm(nu[ip] - nu[im]) > 1e-12 && !graph) continue;  // corner: skip
      double dx = pts[ip][0] - pts[im][0];
      double dy = pts[ip][1] - pts[im][1];
      double chord = std::hypot(dx, dy);
      if (chord <= 0.0) continue;
      for (int c = 0; c < fdot.components(); ++c) {
        double dtau = (fa.value(ip, c) - fa.value(im, c)) / chord;
        double rhs = nu[i][0] * f2.value(i, c) - nu[i][1] * f1.value(i, c);
        double r = std::abs(dtau - rhs);
        rep.max_residual = std::max(rep.max_residual, r);
        *acc += r;
        ++*count;
      }
    }
  }
}

// 3-D graph boundary: express each tangential operator nu_j d_k - nu_k d_j
// in the two parameter directions and difference along the sample grid.
void compat_graph3(const WhitneyArray& fdot, CompatibilityReport& rep,
                   double* acc, size_t* count) {
  const auto& g = dynamic_cast<const LipschitzGraphDomain&>(fdot.domain());
  const int N = g.samples_per_axis();
  const double h = g.window() / N;
  const auto& nu = g.boundary_normals();
  auto idx = [N](int i, int j) {
    auto wrap = [N](int x) { return ((x % N) + N) % N; };
    return size_t(wrap(i) * N + wrap(j));
  };
  const std::array<std::pair<int, int>, 3> jk{{{0, 1}, {0, 2}, {1, 2}}};
  for (const auto& alpha : fdot.indices()) {
    if (alpha.order() > fdot.order() - 2) continue;
    const auto& fa = fdot.component(alpha);
    // Interior samples only: the window edges have no usable neighbors
    // because the data carries no periodicity assumption.
    for (int i = 1; i + 1 < N; ++i)
      for (int j = 1; j + 1 < N; ++j) {
        size_t me = idx(i, j);
        double u = (i + 0.5) * h, v = (j + 0.5) * h;
        Point gp = g.grad_phi(u, v);
        double pu = gp[0], pv = gp[1];
        // Gram matrix of the tangent basis T_u = (1,0,pu), T_v = (0,1,pv).
        double g11 = 1.0 + pu * pu, g12 = pu * pv, g22 = 1.0 + pv * pv;
        double det = g11 * g22 - g12 * g12;
        for (auto [ja, ka] : jk) {
          // Tangent vector of the operator: w = nu_j e_k - nu_k e_j.
          Point wv;
          wv[ka] += nu[me][ja];
          wv[ja] -= nu[me][ka];
          double bu = wv[0] + wv[2] * pu;  // T_u . w
          double bv = wv[1] + wv[2] * pv;  // T_v . w
          double cu = (g22 * bu - g12 * bv) / det;
          double cv = (g11 * bv - g12 * bu) / det;
          const auto& fk = fdot.component(alpha + MultiIndex::unit(3, ka));
          const auto& fj = fdot.component(alpha + MultiIndex::unit(3, ja));
          for (int c = 0; c < fdot.components(); ++c) {
            double du = (fa.value(idx(i + 1, j), c) - fa.value(idx(i - 1, j), c)) /
                        (2.0 * h);
            double dv = (fa.value(idx(i, j + 1), c) - fa.value(idx(i, j - 1), c)) /
                        (2.0 * h);
            double lhs = cu * du + cv * dv;
            double rhs = nu[me][ja] * fk.value(me, c) - nu[me][ka] * fj.value(me, c);
            double r = std::abs(lhs - rhs);
            rep.max_residual = std::max(rep.max_residual, r);
            *acc += r;
            ++*count;
          }
        }
      }
  }
}

}  // namespace

CompatibilityReport compatibility_check(const WhitneyArray& fdot) {
  CompatibilityReport rep;
  if (fdot.order() == 1) {
    rep.vacuous = true;
    return rep;
  }
  double acc = 0.0;
  size_t count = 0;
  if (fdot.domain().dim() == 2)
    compat_curve(fdot, rep, &acc, &count);
  else
    compat_graph3(fdot, rep, &acc, &count);
  rep.mean_residual = count ? acc / double(count) : 0.0;
  return rep;
}

}  // namespace lipkit
