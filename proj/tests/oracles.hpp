#pragma once

// Test-side oracles, kept independent of the library code paths they check.

#include "dwexp/rational.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <vector>

namespace oracles {

// n-th Catalan number by the direct binomial formula C(2n,n)/(n+1).
inline dwexp::Rational catalan_binomial(int n) {
  boost::multiprecision::cpp_int num = 1, den = 1;
  for (int i = 1; i <= n; ++i) {
    num *= (n + i);
    den *= i;
  }
  return dwexp::Rational(num, den * (n + 1));
}

// Coefficients of (1+z)^p as a formal series with rational exponent p,
// via the generalized binomial coefficients.
inline std::vector<dwexp::Rational> binomial_series(const dwexp::Rational& p, int order) {
  std::vector<dwexp::Rational> c(order + 1);
  c[0] = 1;
  for (int k = 1; k <= order; ++k) c[k] = c[k - 1] * (p - (k - 1)) / k;
  return c;
}

// Catalan numbers recovered from (1 - sqrt(1-4r)) / (2r): the r^n coefficient
// equals -(1/2) * [r^{n+1}] sqrt(1-4r).
inline dwexp::Rational catalan_sqrt_route(int n) {
  const auto root = binomial_series(dwexp::Rational(1, 2), n + 1);
  dwexp::Rational c = root[n + 1];
  // substitute z = -4r
  dwexp::Rational pw = 1;
  for (int i = 0; i <= n; ++i) pw *= -4;
  return c * pw / dwexp::Rational(-2);
}

// Taylor coefficients of (1-4r)^{-1/2}: expected 1, 2, 6, 20, 70, ...
inline dwexp::Rational psi_series_coeff(int n) {
  const auto c = binomial_series(dwexp::Rational(-1, 2), n);
  dwexp::Rational pw = 1;
  for (int i = 0; i < n; ++i) pw *= -4;
  return c[n] * pw;
}

// Composite Simpson rule; panels must be even.
inline double simpson(const std::function<double(double)>& f, double a, double b, int panels) {
  if (panels % 2 != 0) throw std::invalid_argument("simpson: panels must be even");
  const double h = (b - a) / panels;
  double acc = f(a) + f(b);
  for (int i = 1; i < panels; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return acc * h / 3.0;
}

inline double gauss_density(double x, double s) {
  return std::exp(-x * x / (4.0 * s)) / std::sqrt(4.0 * M_PI * s);
}

// Modified Bessel I_nu through its integral representation
// (1/pi) int_0^pi e^{x cos theta} cos(nu theta) d theta, by the trapezoid
// rule on the full period. The integrand is analytic and periodic, so the
// rule converges spectrally; 16384 points put the truncated Fourier tail
// far below double rounding even at x = 500.
inline double bessel_i_integral(int nu, double x) {
  const int n = 16384;
  double acc = 0.5 * (std::exp(x) + std::exp(-x) * std::cos(nu * M_PI));
  for (int i = 1; i < n; ++i) {
    const double theta = M_PI * i / n;
    acc += std::exp(x * std::cos(theta)) * std::cos(nu * theta);
  }
  return acc / n;
}

// Exact cross moments integral x^a g_b(x, t) dx for the 1-D Gaussian family,
// a, b <= 2, s = 1 + t. Derived from the Gaussian moment formulas
// E X^2 = 2s, E X^4 = 12 s^2.
inline double cross_moment_1d(int a, int b, double t) {
  const double s = 1.0 + t;
  if (b == 0) {
    if (a == 0) return 1.0;
    if (a == 1) return 0.0;
    if (a == 2) return 2.0 * s;
  } else if (b == 1) {
    if (a == 0) return 0.0;
    if (a == 1) return 1.0;
    if (a == 2) return 0.0;
  } else if (b == 2) {
    if (a == 0) return 0.0;
    if (a == 1) return 0.0;
    if (a == 2) return 1.0;
  }
  throw std::invalid_argument("cross_moment_1d: only a, b <= 2 tabulated");
}

}  // namespace oracles
