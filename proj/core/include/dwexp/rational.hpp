#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dwexp {

/// Exact rational coefficient. All series and coefficient arithmetic is
/// carried out in this type; conversion to double happens only at the point
/// where a coefficient enters a floating-point operator sum.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// "num/den" with positive denominator, e.g. "2/1", "-5/3".
inline std::string to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace dwexp
