#include "dwexp/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace dwexp {

FormalSeries::FormalSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) throw std::invalid_argument("FormalSeries: empty coefficient list");
}

FormalSeries FormalSeries::constant(const Rational& value, int order) {
  if (order < 0) throw std::invalid_argument("FormalSeries: negative truncation order");
  std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
  c[0] = value;
  return FormalSeries(std::move(c));
}

const Rational& FormalSeries::coeff(int i) const {
  if (i < 0 || i > truncation_order())
    throw std::invalid_argument("FormalSeries: coefficient index outside truncation order");
  return c_[static_cast<size_t>(i)];
}

FormalSeries FormalSeries::truncated(int order) const {
  if (order < 0) throw std::invalid_argument("FormalSeries: negative truncation order");
  std::vector<Rational> c(c_.begin(), c_.begin() + std::min<size_t>(c_.size(), order + 1));
  c.resize(static_cast<size_t>(order) + 1, Rational(0));
  return FormalSeries(std::move(c));
}

namespace {

FormalSeries combine(const FormalSeries& a, const FormalSeries& b, int sign) {
  const int order = std::min(a.truncation_order(), b.truncation_order());
  std::vector<Rational> c(static_cast<size_t>(order) + 1);
  for (int i = 0; i <= order; ++i) c[i] = a.coeff(i) + sign * b.coeff(i);
  return FormalSeries(std::move(c));
}

}  // namespace

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) { return combine(a, b, +1); }
FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) { return combine(a, b, -1); }

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  const int order = std::min(a.truncation_order(), b.truncation_order());
  std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
  for (int i = 0; i <= order; ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; i + j <= order; ++j) c[i + j] += a.coeff(i) * b.coeff(j);
  }
  return FormalSeries(std::move(c));
}

FormalSeries pow(const FormalSeries& a, int exponent) {
  if (exponent < 0) throw std::invalid_argument("pow(FormalSeries): negative exponent");
  FormalSeries result = FormalSeries::constant(Rational(1), a.truncation_order());
  FormalSeries base = a;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    base = base * base;
    exponent >>= 1;
  }
  return result;
}

FormalSeries catalan_series(int order) {
  if (order < 0) throw std::invalid_argument("catalan_series: negative order");
  std::vector<Rational> c(static_cast<size_t>(order) + 1, Rational(0));
  c[0] = 1;
  for (int n = 0; n + 1 <= order; ++n) {
    Rational s(0);
    for (int i = 0; i <= n; ++i) s += c[i] * c[n - i];
    c[n + 1] = s;
  }
  return FormalSeries(std::move(c));
}

}  // namespace dwexp
