#pragma once

namespace dwexp {

/// Modified Bessel function I_nu for nu in {0, 1} and x >= 0. Ascending
/// series up to x = 30 (every term positive, so no cancellation), then the
/// large-argument asymptotic e^x/sqrt(2 pi x) times a correction series
/// truncated at its smallest term. Relative error stays below 1e-10 over
/// [0, 500]; at the switch point the optimal-truncation remainder is of
/// order e^{-2x}, far under rounding.
double bessel_i(int nu, double x);

}  // namespace dwexp
