#include "dwexp/hermite.hpp"

#include <stdexcept>

namespace dwexp {

HermiteTable::HermiteTable(int max_degree) {
  if (max_degree < 0 || max_degree > 20)
    throw std::invalid_argument("HermiteTable: degree must be in [0, 20]");
  c_.resize(max_degree + 1);
  c_[0] = {1};
  if (max_degree >= 1) c_[1] = {0, 2};
  // H_{k+1}(y) = 2 y H_k(y) - 2 k H_{k-1}(y)
  for (int k = 1; k < max_degree; ++k) {
    std::vector<long long> next(k + 2, 0);
    for (int j = 0; j <= k; ++j) next[j + 1] += 2 * c_[k][j];
    for (int j = 0; j < k; ++j) next[j] -= 2LL * k * c_[k - 1][j];
    c_[k + 1] = std::move(next);
  }
}

double HermiteTable::eval(int k, double y) const {
  if (k < 0 || k > max_degree()) throw std::invalid_argument("HermiteTable: degree out of range");
  const auto& p = c_[k];
  double acc = 0.0;
  for (int j = k; j >= 0; --j) acc = acc * y + static_cast<double>(p[j]);
  return acc;
}

long long HermiteTable::coefficient(int k, int j) const {
  if (k < 0 || k > max_degree() || j < 0 || j > k)
    throw std::invalid_argument("HermiteTable: coefficient index out of range");
  return c_[k][j];
}

const HermiteTable& hermite_table() {
  static const HermiteTable table(20);
  return table;
}

}  // namespace dwexp
