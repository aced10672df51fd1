#pragma once

#include <span>

namespace dwexp {

/// Least-squares fit of log(value) against log(t): value ~ exp(intercept) * t^slope.
struct DecayFit {
  double slope = 0.0;
  double intercept = 0.0;
  double max_residual = 0.0;  // max |log v_i - (intercept + slope log t_i)|
};

/// Requires at least 4 samples, strictly increasing positive times, and
/// strictly positive values (the fit is in log-log coordinates).
DecayFit fit_decay_rate(std::span<const double> times, std::span<const double> values);

}  // namespace dwexp
