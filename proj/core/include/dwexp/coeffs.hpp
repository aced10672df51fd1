#pragma once

#include "dwexp/rational.hpp"
#include "dwexp/series.hpp"

#include <string>
#include <vector>

namespace dwexp {

/// Coefficient Phi_{l,m} of the diffusion-limit operator expansion:
/// (1/l!) times the r^m coefficient of C(r)^{2l}, where C is the Catalan
/// generating function. Phi_{0,m} = delta_{m,0}, Phi_{1,1} = 2, Phi_{1,2} = 5.
Rational phi_coeff(int l, int m);

/// Coefficient Psi_n = (1/n!) d^n/dr^n (1-4r)^{-1/2} at r = 0, i.e. the
/// central binomial coefficient C(2n, n): 1, 2, 6, 20, 70, ...
Rational psi_coeff(int n);

double phi_coeff_d(int l, int m);
double psi_coeff_d(int n);

struct CoefficientRow {
  std::string name;  // "Phi" or "Psi"
  int l = 0;         // Phi only
  int m = 0;         // Phi: second index; Psi: the index n
  Rational value;
};

/// All Phi_{l,m} with l + m <= floor(K/2) and all Psi_n with n <= floor(K/2),
/// the index set an order-K expansion consumes. Deterministic order.
std::vector<CoefficientRow> coefficient_table(int K);

}  // namespace dwexp
