#pragma once

#include "dwexp/rational.hpp"

#include <vector>

namespace dwexp {

/// Truncated formal power series with exact rational coefficients.
/// coeff[i] is the coefficient of r^i; truncation_order() == coeff.size()-1.
/// Products truncate to the smaller truncation order of the operands, so a
/// chain of operations never pretends to more orders than its inputs carry.
class FormalSeries {
 public:
  FormalSeries() : c_(1, Rational(0)) {}
  explicit FormalSeries(std::vector<Rational> coeffs);

  static FormalSeries constant(const Rational& value, int order);

  int truncation_order() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  FormalSeries truncated(int order) const;

 private:
  std::vector<Rational> c_;
};

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b);
FormalSeries operator-(const FormalSeries& a, const FormalSeries& b);
FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
FormalSeries pow(const FormalSeries& a, int exponent);

/// Series whose r^n coefficient is the n-th Catalan number, built from the
/// convolution recurrence c_{n+1} = sum_i c_i c_{n-i}. This is the power
/// series of (1 - sqrt(1-4r)) / (2r).
FormalSeries catalan_series(int order);

}  // namespace dwexp
