#include "dwexp/decay_fit.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace dwexp {

DecayFit fit_decay_rate(std::span<const double> times, std::span<const double> values) {
  if (times.size() != values.size())
    throw std::invalid_argument("fit_decay_rate: times/values size mismatch");
  if (times.size() < 4) throw std::invalid_argument("fit_decay_rate: need at least 4 samples");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] > 0.0)) throw std::invalid_argument("fit_decay_rate: times must be positive");
    if (i > 0 && !(times[i] > times[i - 1]))
      throw std::invalid_argument("fit_decay_rate: times must be strictly increasing");
    if (!(values[i] > 0.0))
      throw std::invalid_argument("fit_decay_rate: values must be positive for a log-log fit");
  }

  const std::size_t n = times.size();
  std::vector<double> lt(n), lv(n);
  double mt = 0.0, mv = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    lt[i] = std::log(times[i]);
    lv[i] = std::log(values[i]);
    mt += lt[i];
    mv += lv[i];
  }
  mt /= static_cast<double>(n);
  mv /= static_cast<double>(n);

  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (lt[i] - mt) * (lt[i] - mt);
    sxy += (lt[i] - mt) * (lv[i] - mv);
  }
  DecayFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = mv - fit.slope * mt;
  for (std::size_t i = 0; i < n; ++i)
    fit.max_residual = std::max(fit.max_residual,
                                std::abs(lv[i] - (fit.intercept + fit.slope * lt[i])));
  return fit;
}

}  // namespace dwexp
