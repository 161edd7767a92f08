#pragma once
#include <vector>

#include "lipkit/geometry/domain.hpp"

namespace lipkit {

// Simple polygon, vertices counterclockwise. rho is the true distance to the
// boundary polyline.
class PolygonalDomain2D : public Domain {
 public:
  PolygonalDomain2D(std::vector<Point> vertices, double boundary_h);

  static PolygonalDomain2D unit_square(double boundary_h) {
    return PolygonalDomain2D(
        {Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)}, boundary_h);
  }

  int dim() const override { return 2; }
  bool inside(const Point& x) const override;
  double rho(const Point& x) const override;
  double rho_lipschitz() const override { return 1.0; }
  double cube_rho_min(const Point& c, double s) const override;
  bool cube_outside(const Point& c, double s) const override;

  Point root_origin() const override { return root_lo_; }
  double root_side() const override { return root_side_; }

  const std::vector<Point>& boundary_points() const override { return bpts_; }
  const std::vector<double>& boundary_weights() const override { return bw_; }
  const std::vector<Point>& boundary_normals() const override { return bnu_; }
  Point normal_at(const Point& bp, double tol = 1e-9) const override;

  size_t edge_count() const { return verts_.size(); }
  const std::vector<Point>& vertices() const { return verts_; }
  double perimeter() const { return perimeter_; }

 private:
  std::vector<Point> verts_;
  std::vector<Point> bpts_, bnu_;
  std::vector<double> bw_;
  Point root_lo_;
  double root_side_ = 0.0;
  double perimeter_ = 0.0;

  Point edge_a(size_t e) const { return verts_[e]; }
  Point edge_b(size_t e) const { return verts_[(e + 1) % verts_.size()]; }
};

}  // namespace lipkit
