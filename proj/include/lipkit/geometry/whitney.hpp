#pragma once
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "lipkit/geometry/domain.hpp"

namespace lipkit {

struct WhitneyCube {
  Point center;
  double side;
  int level;                 // side = root_side * 2^-level
  std::array<int, 3> index;  // dyadic index within the root at this level
};

// Dyadic subdivision of the domain's root cell. A cube is accepted as soon as
// its exact rho-distance to the boundary is at least its diameter; rejected
// cubes split until the side would drop below min_side. Accepted cubes have
// disjoint interiors and rho-dist/diam in [1, 2 + 2*rho_lipschitz()); their
// union covers {X : rho(X) >= 4 * min_side} inside the root cell.
class WhitneyDecomposition {
 public:
  WhitneyDecomposition(const Domain& dom, double min_side);

  const std::vector<WhitneyCube>& cubes() const { return cubes_; }
  const Domain& domain() const { return *dom_; }
  double min_side() const { return finest_side_; }
  int max_level() const { return max_level_; }

  // Index of the accepted cube whose closure contains X, or -1.
  int find(const Point& X) const;
  // Accepted cube with this dyadic address, or -1.
  int cube_at(int level, const std::array<int, 3>& idx) const;
  const std::vector<int>& levels() const { return levels_present_; }
  Point origin() const { return origin_; }
  double root_side() const { return root_side_; }
  double side_at(int level) const;
  // Number of accepted cubes whose kappa-dilate contains X.
  int dilate_overlap_count(const Point& X, double kappa) const;
  // Accepted cubes within Euclidean distance <= margin of X.
  std::vector<int> near(const Point& X, double margin) const;

 private:
  void subdivide(int level, std::array<int, 3> idx);
  Point cube_center(int level, const std::array<int, 3>& idx) const;
  static uint64_t key(int level, const std::array<int, 3>& idx);

  const Domain* dom_;
  int n_;
  Point origin_;
  double root_side_;
  int max_level_ = 0;
  double finest_side_ = 0.0;
  std::vector<WhitneyCube> cubes_;
  std::unordered_map<uint64_t, int> by_index_;
  std::vector<int> levels_present_;
};

}  // namespace lipkit
