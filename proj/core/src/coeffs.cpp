#include "dwexp/coeffs.hpp"

#include <stdexcept>

namespace dwexp {

Rational phi_coeff(int l, int m) {
  if (l < 0 || m < 0) throw std::invalid_argument("phi_coeff: negative index");
  if (l == 0) return Rational(m == 0 ? 1 : 0);
  const FormalSeries c2l = pow(catalan_series(m), 2 * l);
  Rational lfact(1);
  for (int i = 2; i <= l; ++i) lfact *= i;
  return c2l.coeff(m) / lfact;
}

Rational psi_coeff(int n) {
  if (n < 0) throw std::invalid_argument("psi_coeff: negative index");
  Rational a(1);  // C(0,0)
  for (int k = 0; k < n; ++k) a = a * (4 * k + 2) / (k + 1);
  return a;
}

double phi_coeff_d(int l, int m) { return to_double(phi_coeff(l, m)); }
double psi_coeff_d(int n) { return to_double(psi_coeff(n)); }

std::vector<CoefficientRow> coefficient_table(int K) {
  if (K < 0) throw std::invalid_argument("coefficient_table: negative order");
  const int half = K / 2;
  std::vector<CoefficientRow> rows;
  for (int l = 0; l <= half; ++l)
    for (int m = 0; l + m <= half; ++m)
      rows.push_back({"Phi", l, m, phi_coeff(l, m)});
  for (int n = 0; n <= half; ++n) rows.push_back({"Psi", 0, n, psi_coeff(n)});
  return rows;
}

}  // namespace dwexp
