#pragma once

namespace dwexp {

/// The two power shapes: signed_power is odd in xi (|xi|^{p-1} xi), and
/// unsigned_power takes the modulus (|xi|^p). Both vanish at xi = 0 and
/// satisfy |F(xi)| = |xi|^p exactly.
enum class NonlinearForm { signed_power, unsigned_power };

struct Nonlinearity {
  double p = 2.0;
  NonlinearForm form = NonlinearForm::signed_power;
  int sign = +1;  // +1 focusing, -1 defocusing
};

/// Throws unless p > 1 (finite) and sign is +1 or -1.
void require_valid(const Nonlinearity& nl);

/// Pointwise F(xi). No validation on this hot path; every entry point that
/// accepts a Nonlinearity from outside runs require_valid first.
double nonlinearity_eval(double xi, const Nonlinearity& nl);

/// 1 + 2/dim, the exponent at which the power nonlinearity and the
/// dissipative decay exactly balance; admissibility is strict for dim 1, 2.
double critical_exponent(int dim);

/// A = dim (p - 1) / 2 - 1: the extra decay each level of the nonlinear
/// approximation sequence gains, relative to the heat scale.
double decay_index(const Nonlinearity& nl, int dim);

/// Whether (p, dim) sits where the expansion machinery applies:
/// p > critical_exponent(dim) for dim 1, 2 and p >= 2 for dim 3. Solves
/// outside this region are still allowed (the blow-up guard handles them);
/// rate verification is not.
bool admissible_for_expansion(const Nonlinearity& nl, int dim);

}  // namespace dwexp
