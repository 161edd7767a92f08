#include "lipkit/geometry/whitney.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lipkit {

WhitneyDecomposition::WhitneyDecomposition(const Domain& dom, double min_side)
    : dom_(&dom), n_(dom.dim()), origin_(dom.root_origin()),
      root_side_(dom.root_side()) {
  if (min_side <= 0 || min_side > root_side_)
    throw std::invalid_argument("whitney: min_side out of range");
  max_level_ = int(std::ceil(std::log2(root_side_ / min_side)));
  if (max_level_ > 18) throw std::invalid_argument("whitney: min_side too small");
  finest_side_ = root_side_ * std::pow(0.5, max_level_);
  subdivide(0, {0, 0, 0});
  std::vector<bool> seen(size_t(max_level_) + 1, false);
  for (const WhitneyCube& q : cubes_) seen[size_t(q.level)] = true;
  for (int l = 0; l <= max_level_; ++l)
    if (seen[size_t(l)]) levels_present_.push_back(l);
}

Point WhitneyDecomposition::cube_center(int level,
                                        const std::array<int, 3>& idx) const {
  double s = root_side_ * std::pow(0.5, level);
  Point c = origin_;
  for (int i = 0; i < n_; ++i) c[i] += (idx[size_t(i)] + 0.5) * s;
  return c;
}

uint64_t WhitneyDecomposition::key(int level, const std::array<int, 3>& idx) {
  return (uint64_t(level) << 57) | (uint64_t(idx[0]) << 38) |
         (uint64_t(idx[1]) << 19) | uint64_t(idx[2]);
}

void WhitneyDecomposition::subdivide(int level, std::array<int, 3> idx) {
  double s = root_side_ * std::pow(0.5, level);
  Point c = cube_center(level, idx);
  if (dom_->cube_outside(c, s)) return;
  double d = dom_->cube_rho_min(c, s);
  double diam = s * std::sqrt(double(n_));
  if (d >= diam) {
    by_index_[key(level, idx)] = int(cubes_.size());
    cubes_.push_back({c, s, level, idx});
    return;
  }
  if (level == max_level_) return;
  int kmax = n_ == 3 ? 2 : 1;
  for (int di = 0; di < 2; ++di)
    for (int dj = 0; dj < 2; ++dj)
      for (int dk = 0; dk < kmax; ++dk)
        subdivide(level + 1, {2 * idx[0] + di, 2 * idx[1] + dj, 2 * idx[2] + dk});
}

int WhitneyDecomposition::cube_at(int level, const std::array<int, 3>& idx) const {
  for (int i = 0; i < n_; ++i)
    if (idx[size_t(i)] < 0 || idx[size_t(i)] >= (1 << level)) return -1;
  auto it = by_index_.find(key(level, idx));
  return it == by_index_.end() ? -1 : it->second;
}

double WhitneyDecomposition::side_at(int level) const {
  return root_side_ * std::pow(0.5, level);
}

int WhitneyDecomposition::find(const Point& X) const {
  for (int l : levels_present_) {
    double s = root_side_ * std::pow(0.5, l);
    std::array<int, 3> idx{0, 0, 0};
    bool ok = true;
    for (int i = 0; i < n_; ++i) {
      double t = (X[i] - origin_[i]) / s;
      int k = int(std::floor(t));
      if (k < 0 || k >= (1 << l)) ok = false;
      idx[size_t(i)] = k;
    }
    if (!ok) continue;
    auto it = by_index_.find(key(l, idx));
    if (it != by_index_.end()) return it->second;
    // Closed-cube membership: a point on a face may belong to a neighbor.
    for (int i = 0; i < n_; ++i) {
      double t = (X[i] - origin_[i]) / s;
      if (t == std::floor(t) && idx[size_t(i)] > 0) {
        auto nb = idx;
        nb[size_t(i)] -= 1;
        auto jt = by_index_.find(key(l, nb));
        if (jt != by_index_.end()) return jt->second;
      }
    }
  }
  return -1;
}

int WhitneyDecomposition::dilate_overlap_count(const Point& X, double kappa) const {
  int count = 0;
  for (const WhitneyCube& q : cubes_) {
    double r = kappa * q.side / 2;
    bool in = true;
    for (int i = 0; i < n_ && in; ++i)
      in = std::abs(X[i] - q.center[i]) <= r;
    count += in;
  }
  return count;
}

std::vector<int> WhitneyDecomposition::near(const Point& X, double margin) const {
  std::vector<int> out;
  for (size_t k = 0; k < cubes_.size(); ++k) {
    const WhitneyCube& q = cubes_[k];
    double m2 = 0.0;
    for (int i = 0; i < n_; ++i) {
      double g = std::max(std::abs(X[i] - q.center[i]) - q.side / 2, 0.0);
      m2 += g * g;
    }
    if (m2 <= margin * margin) out.push_back(int(k));
  }
  return out;
}

}  // namespace lipkit
