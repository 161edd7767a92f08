#pragma once
#include <functional>
#include <vector>

#include "lipkit/geometry/domain.hpp"

namespace lipkit {

// Domain above the graph of a Lipschitz function: {X : X_n > phi(X')}, with
// phi sampled on a uniform periodic grid over [0, window)^{n-1} and evaluated
// by piecewise-(bi)linear interpolation, so the Lipschitz constant M of the
// interpolant equals the max discrete gradient norm over grid cells.
class LipschitzGraphDomain : public Domain {
 public:
  // n = 2: samples[i] = phi(i*h), i = 0..N-1, h = window/N, periodic.
  static LipschitzGraphDomain from_samples(double window,
                                           std::vector<double> samples);
  // n = 3: samples[i*N+j] = phi(i*h, j*h), row-major, periodic both axes.
  static LipschitzGraphDomain from_samples_2d(double window, int N,
                                              std::vector<double> samples);
  static LipschitzGraphDomain from_function(int n, double window, int N,
                                            const std::function<double(double, double)>& phi);

  int dim() const override { return n_; }
  double window() const { return window_; }
  double grid_h() const { return h_; }
  int samples_per_axis() const { return N_; }
  double lip_constant() const { return M_; }

  double phi(double u, double v = 0.0) const;       // periodic PL interpolant
  Point grad_phi(double u, double v = 0.0) const;   // interpolant gradient
  Point normal_from_param(double u, double v = 0.0) const;

  bool inside(const Point& x) const override;
  double rho(const Point& x) const override;  // vertical gap x_n - phi(x')
  double rho_lipschitz() const override { return rho_lip_; }
  double cube_rho_min(const Point& c, double s) const override;
  bool cube_outside(const Point& c, double s) const override;

  Point root_origin() const override;
  double root_side() const override { return window_; }

  const std::vector<Point>& boundary_points() const override { return bpts_; }
  const std::vector<double>& boundary_weights() const override { return bw_; }
  const std::vector<Point>& boundary_normals() const override { return bnu_; }
  Point normal_at(const Point& bp, double tol = 1e-9) const override;

  // Range bounds of the interpolant over [u0,u1] (x [v0,v1] for n = 3).
  double phi_max_on(double u0, double u1, double v0 = 0.0, double v1 = 0.0) const;
  double phi_min_on(double u0, double u1, double v0 = 0.0, double v1 = 0.0) const;

  double phi_min() const { return phi_min_; }
  double phi_max() const { return phi_max_; }

 private:
  LipschitzGraphDomain() = default;
  void finish();
  double node(int i, int j = 0) const;  // periodic sample lookup

  int n_ = 2;
  double window_ = 1.0;
  int N_ = 0;
  double h_ = 0.0;
  std::vector<double> samples_;
  double M_ = 0.0, rho_lip_ = 1.0;
  double phi_min_ = 0.0, phi_max_ = 0.0;
  std::vector<Point> bpts_, bnu_;
  std::vector<double> bw_;
};

// Sawtooth family from the oscillation examples: phi(x) = x sin(eps log(1/x))
// on (0, 1], extended by phi(0) = 0; its derivative on (0, 1).
double sawtooth(double eps, double x);
double sawtooth_deriv(double eps, double x);

}  // namespace lipkit
