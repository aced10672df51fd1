#include "dwexp/nonlinearity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace dwexp {

namespace {

void require_dim(int dim, const char* who) {
  if (dim < 1 || dim > 3)
    throw std::invalid_argument(std::string(who) + ": dim must be 1, 2, or 3, got " +
                                std::to_string(dim));
}

}  // namespace

void require_valid(const Nonlinearity& nl) {
  if (!std::isfinite(nl.p) || nl.p <= 1.0)
    throw std::invalid_argument("Nonlinearity: p must be finite and > 1, got " +
                                std::to_string(nl.p));
  if (nl.sign != 1 && nl.sign != -1)
    throw std::invalid_argument("Nonlinearity: sign must be +1 or -1, got " +
                                std::to_string(nl.sign));
}

double nonlinearity_eval(double xi, const Nonlinearity& nl) {
  if (xi == 0.0) return 0.0;
  const double mag = std::pow(std::abs(xi), nl.p);
  const double shaped = nl.form == NonlinearForm::signed_power ? std::copysign(mag, xi) : mag;
  return nl.sign * shaped;
}

double critical_exponent(int dim) {
  require_dim(dim, "critical_exponent");
  return 1.0 + 2.0 / dim;
}

double decay_index(const Nonlinearity& nl, int dim) {
  require_dim(dim, "decay_index");
  require_valid(nl);
  return 0.5 * dim * (nl.p - 1.0) - 1.0;
}

bool admissible_for_expansion(const Nonlinearity& nl, int dim) {
  require_dim(dim, "admissible_for_expansion");
  require_valid(nl);
  if (dim == 3) return nl.p >= 2.0;
  return nl.p > critical_exponent(dim);
}

}  // namespace dwexp
