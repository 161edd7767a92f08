#include "lipkit/extenders/gagliardo.hpp"

#include <cmath>
#include <stdexcept>

#include "lipkit/common/quadrature.hpp"
#include "lipkit/geometry/graph_domain.hpp"
#include "lipkit/geometry/oscillation.hpp"

namespace lipkit {

namespace {

double wrap(double u, double w) {
  u = std::fmod(u, w);
  return u < 0.0 ? u + w : u;
}

const LipschitzGraphDomain* graph_of(const BoundaryFunction& phi) {
  const auto* g = dynamic_cast<const LipschitzGraphDomain*>(&phi.domain());
  if (!g)
    throw std::domain_error("gagliardo: boundary data must live on a graph domain");
  return g;
}

std::function<double(double, double)> interp_fn(const BoundaryFunction& phi) {
  return [&phi](double u, double v) { return boundary_param_interp(phi, u, v); };
}

// Finite-difference slope samples of periodic boundary data, as a scan field
// for the BMO seminorm.
ScanField slope_field(const BoundaryFunction& phi) {
  const auto* g = graph_of(phi);
  if (g->dim() != 2)
    throw std::domain_error("gagliardo: slope field is planar-only");
  int N = g->samples_per_axis();
  double h = g->grid_h();
  ScanField f;
  f.d = 1;
  f.h = h;
  f.period = {g->window(), 0.0, 0.0};
  for (int i = 0; i < N; ++i) {
    size_t ip = size_t((i + 1) % N), im = size_t((i + N - 1) % N);
    f.pos.push_back(Point((i + 0.5) * h, 0.0));
    f.val.push_back((phi.value(ip) - phi.value(im)) / (2.0 * h));
    f.w.push_back(h);
  }
  return f;
}

}  // namespace

double boundary_param_interp(const BoundaryFunction& phi, double u, double v) {
  const LipschitzGraphDomain* g = graph_of(phi);
  if (g->dim() == 2) return phi.interp_param(u);
  int N = g->samples_per_axis();
  double h = g->grid_h(), w = g->window();
  double ru = wrap(u, w) / h - 0.5, rv = wrap(v, w) / h - 0.5;
  int i0 = int(std::floor(ru)), j0 = int(std::floor(rv));
  double tu = ru - i0, tv = rv - j0;
  auto at = [&](int i, int j) {
    i = (i % N + N) % N;
    j = (j % N + N) % N;
    return phi.value(size_t(i) * size_t(N) + size_t(j));
  };
  return at(i0, j0) * (1 - tu) * (1 - tv) + at(i0 + 1, j0) * tu * (1 - tv) +
         at(i0, j0 + 1) * (1 - tu) * tv + at(i0 + 1, j0 + 1) * tu * tv;
}

double gagliardo_value(const std::function<double(double, double)>& phi, int n,
                       const SmoothingKernel& ker, const Point& x) {
  if (ker.ambient_dim() != n)
    throw std::invalid_argument("gagliardo: kernel dimension mismatch");
  double xn = x[n - 1];
  if (!(xn > 0.0))
    throw std::domain_error("gagliardo: evaluation requires x_n > 0");
  double s = 0.0;
  for (const SmoothingKernel::Node& nd : ker.nodes()) {
    if (n == 2)
      s += nd.w * phi(x[0] + xn * nd.t[0], 0.0);
    else
      s += nd.w * phi(x[0] + xn * nd.t[0], x[1] + xn * nd.t[1]);
  }
  return s;
}

double gagliardo_value(const BoundaryFunction& phi, const SmoothingKernel& ker,
                       const Point& x) {
  return gagliardo_value(interp_fn(phi), phi.domain().dim(), ker, x);
}

GridFunction gagliardo_extend(const std::function<double(double, double)>& phi,
                              const SmoothingKernel& ker,
                              std::shared_ptr<const InteriorGrid> grid,
                              int max_order) {
  int n = grid->dim();
  GridFunction out(grid, 1, max_order);
  for (size_t i = 0; i < grid->size(); ++i)
    out.set(i, 0, gagliardo_value(phi, n, ker, grid->points()[i]));
  return out;
}

GridFunction gagliardo_extend(const BoundaryFunction& phi, const SmoothingKernel& ker,
                              std::shared_ptr<const InteriorGrid> grid,
                              int max_order) {
  return gagliardo_extend(interp_fn(phi), ker, std::move(grid), max_order);
}

double gagliardo_derivative(const std::function<double(double)>& phi,
                            const SmoothingKernel& ker, const MultiIndex& alpha,
                            const Point& x, int gl_points) {
  if (ker.ambient_dim() != 2 || alpha.dim() != 2)
    throw std::domain_error("gagliardo: derivative path is planar-only");
  int a = alpha[0], b = alpha[1];
  if (a < 0 || b < 0 || a + b > 3)
    throw std::invalid_argument("gagliardo: derivative order must satisfy |alpha| <= 3");
  double xn = x[1];
  if (!(xn > 0.0))
    throw std::domain_error("gagliardo: evaluation requires x_n > 0");

  // Every derivative of (T phi)(x) = int x_n^{-1} zeta((y-x')/x_n) phi(y) dy
  // lands on the kernel. Representing D^{(a,b)}[x_n^{-1} zeta(tau)] as
  // x_n^{-(1+a+b)} sum_{i,j} c[i][j] tau^i zeta^(j)(tau), the two first-order
  // rules are (q = current power of 1/x_n)
  //   d/dx_n:  c[i][j] -> -(q+i) c[i][j]  and  -c[i][j] into (i+1, j+1),
  //   d/dx' :  c[i][j] -> -i c[i][j] into (i-1, j)  and  -c[i][j] into (i, j+1).
  double c[5][5] = {};
  c[0][0] = 1.0;
  int top = 0;
  for (int step = 0; step < b; ++step) {
    double nc[5][5] = {};
    int q = 1 + step;
    for (int i = 0; i <= top; ++i)
      for (int j = 0; j <= top; ++j) {
        if (c[i][j] == 0.0) continue;
        nc[i][j] -= (q + i) * c[i][j];
        nc[i + 1][j + 1] -= c[i][j];
      }
    ++top;
    for (int i = 0; i <= top; ++i)
      for (int j = 0; j <= top; ++j) c[i][j] = nc[i][j];
  }
  for (int step = 0; step < a; ++step) {
    double nc[5][5] = {};
    for (int i = 0; i <= top; ++i)
      for (int j = 0; j <= top; ++j) {
        if (c[i][j] == 0.0) continue;
        if (i >= 1) nc[i - 1][j] -= i * c[i][j];
        nc[i][j + 1] -= c[i][j];
      }
    ++top;
    for (int i = 0; i <= top; ++i)
      for (int j = 0; j <= top; ++j) c[i][j] = nc[i][j];
  }

  // Composite Gauss-Legendre over the support (tau = 2u - 1, u in [0,1]).
  // High profile derivatives are large inside the support and the result is
  // scaled by x_n^{-|alpha|}, so budgets beyond one rule's maximum order are
  // spent on additional full-order panels.
  const int panel_pts = std::min(std::max(gl_points, 4), 64);
  int panels = std::max(1, (gl_points + 63) / 64);
  const GaussLegendre& gl = gauss_legendre(panel_pts);
  double zd[4];
  double sum = 0.0;
  for (int pnl = 0; pnl < panels; ++pnl) {
    double u0 = double(pnl) / panels, du = 1.0 / panels;
    for (size_t k = 0; k < gl.x.size(); ++k) {
      double tau = 2.0 * (u0 + du * gl.x[k]) - 1.0;
      ker.profile_derivs(tau, a + b, zd);
      double kval = 0.0, tp = 1.0;
      for (int i = 0; i <= top; ++i) {
        for (int j = 0; j <= a + b; ++j)
          if (c[i][j] != 0.0) kval += c[i][j] * tp * zd[j];
        tp *= tau;
      }
      sum += du * gl.w[k] * kval * phi(x[0] + xn * tau);
    }
  }
  return 2.0 * std::pow(xn, -double(a + b)) * sum;
}

double gagliardo_derivative(const BoundaryFunction& phi, const SmoothingKernel& ker,
                            const MultiIndex& alpha, const Point& x, int gl_points) {
  const LipschitzGraphDomain* g = graph_of(phi);
  if (g->dim() != 2)
    throw std::domain_error("gagliardo: derivative path is planar-only");
  auto fn = [&phi](double u) { return phi.interp_param(u); };
  return gagliardo_derivative(fn, ker, alpha, x, gl_points);
}

GagliardoDerivativeReport gagliardo_derivative_bounds(
    const BoundaryFunction& phi, const SmoothingKernel& ker, const MultiIndex& alpha,
    const GagliardoBoundsOptions& opt) {
  const LipschitzGraphDomain* g = graph_of(phi);
  if (g->dim() != 2)
    throw std::domain_error("gagliardo: bounds report is planar-only");
  if (alpha.order() < 2)
    throw std::invalid_argument("gagliardo: pointwise bound needs |alpha| >= 2");
  double window = g->window();

  GagliardoDerivativeReport rep;
  rep.grad_phi_bmo = bmo_seminorm(slope_field(phi)).sup;

  double scale = 0.0;
  for (size_t i = 0; i < phi.size(); ++i) scale = std::max(scale, std::abs(phi.value(i)));
  if (rep.grad_phi_bmo <= 1e-12 * (scale + 1.0)) {
    rep.exact = true;
    rep.note = "exact: derivative vanishes";
    return rep;
  }

  double lr = std::log(opt.z_hi / opt.z_lo);
  for (int iz = 0; iz < opt.nz; ++iz) {
    double xn = opt.z_lo * std::exp(lr * (iz + 0.5) / opt.nz);
    for (int ix = 0; ix < opt.nx; ++ix) {
      Point x((ix + 0.5) * window / opt.nx, xn);
      double d = gagliardo_derivative(phi, ker, alpha, x, opt.gl_points);
      rep.max_scaled = std::max(
          rep.max_scaled, std::abs(d) * std::pow(xn, alpha.order() - 1) / rep.grad_phi_bmo);
    }
  }

  // Half-plane oscillation of grad(T phi) over one window-sized square.
  ScanField du = sample_square(0.0, window, opt.bmo_n, [&](double u, double xn) {
    return gagliardo_derivative(phi, ker, MultiIndex::unit(2, 0), Point(u, xn),
                                opt.gl_points);
  });
  ScanField dn = sample_square(0.0, window, opt.bmo_n, [&](double u, double xn) {
    return gagliardo_derivative(phi, ker, MultiIndex::unit(2, 1), Point(u, xn),
                                opt.gl_points);
  });
  rep.bmo_ratio = vector_bmo({&du, &dn}).sup / rep.grad_phi_bmo;
  return rep;
}

}  // namespace lipkit
