#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

namespace dwexp {

/// Multi-index over up to 3 axes. Comparison is graded lexicographic
/// (by |alpha| first), which fixes the deterministic traversal order of
/// moment sets.
struct MultiIndex {
  int dim = 1;
  std::array<int, 3> a{0, 0, 0};

  int order() const { return a[0] + a[1] + a[2]; }

  /// Componentwise partial order (beta <= alpha).
  bool leq(const MultiIndex& other) const {
    for (int d = 0; d < 3; ++d)
      if (a[d] > other.a[d]) return false;
    return true;
  }

  double factorial() const {
    double f = 1.0;
    for (int d = 0; d < dim; ++d)
      for (int i = 2; i <= a[d]; ++i) f *= i;
    return f;
  }

  std::string str() const {
    std::string s = "(";
    for (int d = 0; d < dim; ++d) s += (d ? "," : "") + std::to_string(a[d]);
    return s + ")";
  }

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend std::strong_ordering operator<=>(const MultiIndex& x, const MultiIndex& y) {
    if (auto c = x.order() <=> y.order(); c != 0) return c;
    return x.a <=> y.a;
  }
};

/// All multi-indices with |alpha| <= max_order, graded lexicographic order.
inline std::vector<MultiIndex> enumerate_multi_indices(int dim, int max_order) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("enumerate_multi_indices: bad dim");
  if (max_order < 0) throw std::invalid_argument("enumerate_multi_indices: negative order");
  std::vector<MultiIndex> out;
  for (int total = 0; total <= max_order; ++total) {
    if (dim == 1) {
      out.push_back({dim, {total, 0, 0}});
    } else if (dim == 2) {
      for (int i = 0; i <= total; ++i) out.push_back({dim, {i, total - i, 0}});
    } else {
      for (int i = 0; i <= total; ++i)
        for (int j = 0; i + j <= total; ++j) out.push_back({dim, {i, j, total - i - j}});
    }
  }
  return out;
}

}  // namespace dwexp
