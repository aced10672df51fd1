#include "dwexp/symbols.hpp"

#include <cmath>
#include <stdexcept>

namespace dwexp {

namespace {

// Window in z = t^2 (rho^2 - 1/4) inside which the Taylor series is used.
// Eight alternating terms leave a remainder below z^8/16! ~ 5e-30 at the
// window edge, so both series are exact to rounding there.
constexpr double kTaylorWindow = 1e-2;

// cos(sqrt(z)) continued across z = 0: sum_{k} (-z)^k / (2k)!.
double cos_sqrt_series(double z) {
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 8; ++k) {
    term *= -z / ((2 * k - 1) * (2 * k));
    sum += term;
  }
  return sum;
}

// sin(sqrt(z))/sqrt(z) continued across z = 0: sum_{k} (-z)^k / (2k+1)!.
double sinc_sqrt_series(double z) {
  double term = 1.0, sum = 1.0;
  for (int k = 1; k < 8; ++k) {
    term *= -z / ((2 * k) * (2 * k + 1));
    sum += term;
  }
  return sum;
}

void check_args(double rho_sq, double t, const char* who) {
  if (!(rho_sq >= 0.0)) throw std::invalid_argument(std::string(who) + ": requires rho_sq >= 0");
  if (!(t >= 0.0)) throw std::invalid_argument(std::string(who) + ": requires t >= 0");
}

}  // namespace

double sigma0(double rho_sq, double t) {
  check_args(rho_sq, t, "sigma0");
  const double s = rho_sq - 0.25;
  const double z = t * t * s;
  if (std::abs(z) <= kTaylorWindow) return std::exp(-0.5 * t) * cos_sqrt_series(z);
  if (z > 0.0) return std::exp(-0.5 * t) * std::cos(std::sqrt(z));
  // Low modes: e^{-t/2} cosh(w) with w = t sqrt(-s) <= t/2, folded so both
  // exponents are nonpositive. At rho = 0 this is (1 + e^{-t})/2 exactly.
  const double w = std::sqrt(-z);
  return 0.5 * (std::exp(w - 0.5 * t) + std::exp(-w - 0.5 * t));
}

double sigma1(double rho_sq, double t) {
  check_args(rho_sq, t, "sigma1");
  const double s = rho_sq - 0.25;
  const double z = t * t * s;
  if (std::abs(z) <= kTaylorWindow) return t * std::exp(-0.5 * t) * sinc_sqrt_series(z);
  if (z > 0.0) {
    const double w = std::sqrt(z);
    return t * std::exp(-0.5 * t) * (std::sin(w) / w);
  }
  // t e^{-t/2} sinh(w)/w, same folding. At rho = 0: 1 - e^{-t} exactly.
  const double w = std::sqrt(-z);
  return t * (std::exp(w - 0.5 * t) - std::exp(-w - 0.5 * t)) / (2.0 * w);
}

double sigma0_dt(double rho_sq, double t) {
  return -0.5 * sigma0(rho_sq, t) - (rho_sq - 0.25) * sigma1(rho_sq, t);
}

double sigma1_dt(double rho_sq, double t) {
  return sigma0(rho_sq, t) - 0.5 * sigma1(rho_sq, t);
}

PropagatorEntries mode_propagator(double rho_sq, double t) {
  const double s0 = sigma0(rho_sq, t);
  const double s1 = sigma1(rho_sq, t);
  return PropagatorEntries{s0 + 0.5 * s1, s1, -rho_sq * s1, s0 - 0.5 * s1};
}

}  // namespace dwexp
