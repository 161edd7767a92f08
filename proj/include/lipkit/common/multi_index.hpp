#pragma once
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "lipkit/common/point.hpp"

namespace lipkit {

// Multi-index over n <= 3 variables. Enumeration order everywhere in the
// project is graded lexicographic: ascending total order, ties broken by
// lexicographically descending tuples ((2,0) before (1,1) before (0,2)).
// That order is part of the file-format contract for array outputs.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(int n, std::array<int, 3> a) : n_(n), a_(a) {}
  static MultiIndex zero(int n) { return MultiIndex(n, {0, 0, 0}); }
  static MultiIndex unit(int n, int axis);

  int dim() const { return n_; }
  int operator[](int i) const { return a_[size_t(i)]; }
  int order() const { return a_[0] + a_[1] + a_[2]; }

  // alpha! as a double; exact for order() <= 8.
  double factorial() const;

  MultiIndex operator+(const MultiIndex& o) const;
  // Component-wise difference; valid only when *this >= o component-wise.
  MultiIndex operator-(const MultiIndex& o) const;
  bool operator==(const MultiIndex& o) const { return n_ == o.n_ && a_ == o.a_; }
  bool operator!=(const MultiIndex& o) const { return !(*this == o); }
  bool contains(const MultiIndex& o) const;  // o <= *this component-wise

  // x^alpha
  double monomial(const Point& x) const;

  std::string str() const;  // e.g. "(2,0)"

  // Graded-lex key usable for sorting / map keys.
  uint32_t key() const {
    return uint32_t(order()) << 24 | uint32_t(a_[0]) << 16 | uint32_t(a_[1]) << 8 |
           uint32_t(a_[2]);
  }
  bool operator<(const MultiIndex& o) const {
    if (order() != o.order()) return order() < o.order();
    if (a_[0] != o.a_[0]) return a_[0] > o.a_[0];
    if (a_[1] != o.a_[1]) return a_[1] > o.a_[1];
    return a_[2] > o.a_[2];
  }

 private:
  int n_ = 2;
  std::array<int, 3> a_{0, 0, 0};
};

// All multi-indices with order() <= max_order, graded-lex.
std::vector<MultiIndex> multi_indices_upto(int n, int max_order);
// All multi-indices with order() == order, graded-lex.
std::vector<MultiIndex> multi_indices_exact(int n, int order);

double factorial(int k);
double binomial(int n, int k);

}  // namespace lipkit
