#pragma once

#include <vector>

namespace dwexp {

/// Physicists' Hermite polynomials H_k, giving the closed form
/// d^k/dx^k e^{-x^2/(4s)} = (-1)^k (4s)^{-k/2} H_k(x / sqrt(4s)) e^{-x^2/(4s)}.
/// Coefficients are exact in int64 up to the supported maximum degree.
class HermiteTable {
 public:
  /// max_degree <= 20 (int64-exact range with ample slack for order-4
  /// expansions, which need degree <= 12 per axis).
  explicit HermiteTable(int max_degree);

  int max_degree() const { return static_cast<int>(c_.size()) - 1; }
  double eval(int k, double y) const;

  /// Coefficient of y^j in H_k.
  long long coefficient(int k, int j) const;

 private:
  std::vector<std::vector<long long>> c_;
};

/// Shared read-only table (degree 20), built once.
const HermiteTable& hermite_table();

}  // namespace dwexp
