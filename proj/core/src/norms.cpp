#include "dwexp/norms.hpp"

#include <cmath>
#include <stdexcept>

namespace dwexp {

std::string to_string(Lq q) {
  switch (q) {
    case Lq::one: return "1";
    case Lq::two: return "2";
    case Lq::inf: return "inf";
  }
  return "?";
}

namespace {

double accumulate_norm(const GridFunction& u, const WeightedNormSpec& spec, double band_fraction,
                       bool band_only) {
  if (spec.k < 0.0 || !std::isfinite(spec.k))
    throw std::invalid_argument("weighted_lq_norm: weight order k must be >= 0");
  const Grid& g = u.grid();
  const double hN = g.cell_volume();
  const double edge = band_fraction * g.half_width;
  double acc = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const auto x = g.point(i);
    if (band_only) {
      double m = 0.0;
      for (int d = 0; d < g.dim; ++d) m = std::max(m, std::abs(x[d]));
      if (m < edge) continue;
    }
    double w = 1.0;
    if (spec.k > 0.0) {
      double r2 = 0.0;
      for (int d = 0; d < g.dim; ++d) r2 += x[d] * x[d];
      w = std::pow(1.0 + std::sqrt(r2), spec.k);
    }
    const double a = std::abs(u[i]);
    switch (spec.q) {
      case Lq::one: acc += w * a * hN; break;
      case Lq::two: acc += w * a * a * hN; break;
      case Lq::inf: acc = std::max(acc, w * a); break;
    }
  }
  return spec.q == Lq::two ? std::sqrt(acc) : acc;
}

}  // namespace

double lq_norm(const GridFunction& u, Lq q) {
  return accumulate_norm(u, WeightedNormSpec{q, 0.0}, 1.0, false);
}

double weighted_lq_norm(const GridFunction& u, const WeightedNormSpec& spec) {
  return accumulate_norm(u, spec, 1.0, false);
}

double band_lq_measure(const GridFunction& u, const WeightedNormSpec& spec,
                       double inner_fraction) {
  if (!(inner_fraction > 0.0 && inner_fraction < 1.0))
    throw std::invalid_argument("band_lq_measure: inner_fraction must be in (0,1)");
  return accumulate_norm(u, spec, inner_fraction, true);
}

}  // namespace dwexp
