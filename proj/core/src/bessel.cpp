#include "dwexp/bessel.hpp"

#include <cmath>
#include <stdexcept>

namespace dwexp {

namespace {

constexpr double kSeriesLimit = 30.0;

double series_i(int nu, double x) {
  // I_nu(x) = sum_m (x/2)^{2m+nu} / (m! (m+nu)!).
  const double q = 0.25 * x * x;
  double term = nu == 0 ? 1.0 : 0.5 * x;
  double sum = term;
  for (int m = 1; m <= 200; ++m) {
    term *= q / (static_cast<double>(m) * (m + nu));
    sum += term;
    if (term <= sum * 1e-17) break;
  }
  return sum;
}

double asymptotic_i(int nu, double x) {
  // e^x/sqrt(2 pi x) sum_k (-1)^k u_k with
  // u_k = prod_{j<=k} (mu - (2j-1)^2) / (k! (8x)^k), mu = 4 nu^2.
  // The series is divergent; stop at the smallest term.
  const double mu = 4.0 * nu * nu;
  double term = 1.0, sum = 1.0;
  for (int k = 1; k <= 40; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * (-(mu - odd * odd) / (8.0 * k * x));
    if (std::abs(next) >= std::abs(term)) break;
    term = next;
    sum += term;
    if (std::abs(term) <= std::abs(sum) * 1e-17) break;
  }
  return std::exp(x) / std::sqrt(2.0 * M_PI * x) * sum;
}

}  // namespace

double bessel_i(int nu, double x) {
  if (nu != 0 && nu != 1) throw std::invalid_argument("bessel_i: order must be 0 or 1");
  if (!(x >= 0.0)) throw std::invalid_argument("bessel_i: requires x >= 0");
  return x <= kSeriesLimit ? series_i(nu, x) : asymptotic_i(nu, x);
}

}  // namespace dwexp
