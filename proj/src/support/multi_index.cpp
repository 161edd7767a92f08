#include "lipkit/common/multi_index.hpp"

#include <cmath>
#include <stdexcept>

namespace lipkit {

double factorial(int k) {
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

double binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

MultiIndex MultiIndex::unit(int n, int axis) {
  std::array<int, 3> a{0, 0, 0};
  a[size_t(axis)] = 1;
  return MultiIndex(n, a);
}

double MultiIndex::factorial() const {
  return lipkit::factorial(a_[0]) * lipkit::factorial(a_[1]) * lipkit::factorial(a_[2]);
}

MultiIndex MultiIndex::operator+(const MultiIndex& o) const {
  return MultiIndex(n_, {a_[0] + o.a_[0], a_[1] + o.a_[1], a_[2] + o.a_[2]});
}

MultiIndex MultiIndex::operator-(const MultiIndex& o) const {
  std::array<int, 3> r{a_[0] - o.a_[0], a_[1] - o.a_[1], a_[2] - o.a_[2]};
  for (int c : r)
    if (c < 0) throw std::invalid_argument("multi-index difference went negative");
  return MultiIndex(n_, r);
}

bool MultiIndex::contains(const MultiIndex& o) const {
  return a_[0] >= o.a_[0] && a_[1] >= o.a_[1] && a_[2] >= o.a_[2];
}

double MultiIndex::monomial(const Point& x) const {
  double r = 1.0;
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < a_[size_t(i)]; ++k) r *= x[i];
  return r;
}

std::string MultiIndex::str() const {
  std::string s = "(";
  for (int i = 0; i < n_; ++i) {
    if (i) s += ",";
    s += std::to_string(a_[size_t(i)]);
  }
  return s + ")";
}

static void emit_exact(int n, int order, std::vector<MultiIndex>& out) {
  if (n == 1) {
    out.emplace_back(1, std::array<int, 3>{order, 0, 0});
    return;
  }
  if (n == 2) {
    for (int i = order; i >= 0; --i)
      out.emplace_back(2, std::array<int, 3>{i, order - i, 0});
    return;
  }
  for (int i = order; i >= 0; --i)
    for (int j = order - i; j >= 0; --j)
      out.emplace_back(3, std::array<int, 3>{i, j, order - i - j});
}

std::vector<MultiIndex> multi_indices_exact(int n, int order) {
  std::vector<MultiIndex> out;
  emit_exact(n, order, out);
  return out;
}

std::vector<MultiIndex> multi_indices_upto(int n, int max_order) {
  std::vector<MultiIndex> out;
  for (int d = 0; d <= max_order; ++d) emit_exact(n, d, out);
  return out;
}

}  // namespace lipkit
