#pragma once
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <utility>
#include <vector>

#include "lipkit/common/multi_index.hpp"
#include "lipkit/common/point.hpp"
#include "lipkit/geometry/domain.hpp"

namespace lipkit {

// Uniform cell-centered lattice over the domain's root box, masked to the
// cell centers that lie strictly inside the domain (distance above rho_cut).
// Cell-centered points double as midpoint quadrature nodes, so sums over the
// grid approximate integrals over the domain with cell weight h^n.
class InteriorGrid {
 public:
  InteriorGrid(const Domain& dom, double h, double rho_cut = 0.0);

  const Domain& domain() const { return *dom_; }
  int dim() const { return n_; }
  double h() const { return h_; }
  const std::array<int, 3>& dims() const { return dims_; }
  double cell_measure() const;  // h^n

  size_t size() const { return pts_.size(); }
  const std::vector<Point>& points() const { return pts_; }
  const std::vector<double>& rho() const { return rho_; }
  const std::array<int, 3>& coords(size_t i) const { return ijk_[i]; }

  // Compact index of lattice cell (i,j,k); -1 if outside the lattice or masked.
  int at(int i, int j, int k = 0) const;
  Point cell_center(int i, int j, int k = 0) const;

  // Bilinear (trilinear) interpolation of a compact-indexed field at X.
  // Missing stencil corners are dropped and the weights renormalized; returns
  // 0 when no corner of the enclosing dual cell is present.
  double interp(const std::vector<double>& field, const Point& X) const;

 private:
  const Domain* dom_;
  int n_;
  double h_;
  Point origin_;
  std::array<int, 3> dims_{1, 1, 1};
  std::vector<int32_t> map_;
  std::vector<Point> pts_;
  std::vector<double> rho_;
  std::vector<std::array<int, 3>> ijk_;
};

// Sampled function on an interior grid with finite-difference derivatives.
// Derivative fields D^alpha (per component) are computed on demand and
// cached; stencils are centered where both neighbors exist and fall back to
// one-sided differences at the mask edge (zero where no stencil fits).
// Requests beyond the declared max_order throw std::domain_error.
class GridFunction {
 public:
  GridFunction(std::shared_ptr<const InteriorGrid> grid, int components = 1,
               int max_order = 2);
  static GridFunction from_function(std::shared_ptr<const InteriorGrid> grid,
                                    const std::function<double(const Point&)>& f,
                                    int max_order = 2);

  const InteriorGrid& grid() const { return *g_; }
  std::shared_ptr<const InteriorGrid> grid_ptr() const { return g_; }
  int components() const { return l_; }
  int max_order() const { return max_order_; }
  size_t size() const { return g_->size(); }

  double value(size_t i, int c = 0) const { return vals_[size_t(c)][i]; }
  void set(size_t i, int c, double v);
  const std::vector<double>& values(int c = 0) const { return vals_[size_t(c)]; }

  const std::vector<double>& derivative(const MultiIndex& alpha, int c = 0) const;

  GridFunction& operator*=(double c);

 private:
  std::shared_ptr<const InteriorGrid> g_;
  int l_;
  int max_order_;
  std::vector<std::vector<double>> vals_;
  mutable std::map<std::pair<uint32_t, int>, std::vector<double>> dcache_;

  std::vector<double> axis_derivative(const std::vector<double>& in, int axis,
                                      int order) const;
};

// Smooth plateau bump centered at c: identically 1 inside radius r0/2,
// C-infinity decay to exact 0 at radius r0. Support must stay inside the
// domain for compact-support arguments to apply.
GridFunction plateau_bump(std::shared_ptr<const InteriorGrid> grid, const Point& c,
                          double r0, int max_order = 2);

// Boundary-anchored bump with a power-law inner profile: the plateau cap of
// radius delta around the anchor, multiplied by (rho/delta)^lambda. For
// lambda slightly above s this is a near-extremal test function for the
// weighted Hardy inequality, whose constant grows like 1/s; single-scale
// plateau bumps cannot exhibit that growth.
GridFunction hardy_bump(std::shared_ptr<const InteriorGrid> grid, const Point& anchor,
                        double delta, double lambda, int max_order = 1);

// Boundary-collar profile oscillating in logarithmic distance to the wall:
//   u = (rho/delta)^{s_exp} * sin(omega * ln(delta/rho))   for rho < delta,
// and 0 elsewhere. The log-coordinate shape makes the weighted quotients of
// the Hardy inequality computable in closed form (see collar_frequency), so
// the family can be tuned to probe the 1/s growth of the Hardy constant at
// realistic grid resolutions, which single-scale bumps cannot reach.
GridFunction collar_bump(std::shared_ptr<const InteriorGrid> grid, double delta,
                         double s_exp, double omega, int max_order = 1);

}  // namespace lipkit
