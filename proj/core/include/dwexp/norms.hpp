#pragma once

#include "dwexp/grid.hpp"

#include <string>

namespace dwexp {

enum class Lq { one, two, inf };

std::string to_string(Lq q);

/// Weighted norm parameters: L^q with weight (1+|x|)^k, |x| Euclidean.
struct WeightedNormSpec {
  Lq q = Lq::one;
  double k = 0.0;
};

/// Rectangle-rule L^q norm over the box (exact sup for q = inf). The
/// rectangle rule on the periodic box is spectrally accurate for smooth
/// decaying fields.
double lq_norm(const GridFunction& u, Lq q);

/// Norm of (1+|x|)^{k/q'} weighting: q = 1 gives sum (1+|x|)^k |u| h^N,
/// q = 2 gives (sum (1+|x|)^k u^2 h^N)^{1/2}, q = inf gives
/// max (1+|x|)^k |u|. Requires k >= 0. k = 0 coincides with lq_norm.
double weighted_lq_norm(const GridFunction& u, const WeightedNormSpec& spec);

/// Same measure restricted to the outer band of the box
/// (points with max_i |x_i| >= inner_fraction * half_width). Used for
/// quadrature-tail warnings and truncation ceilings.
double band_lq_measure(const GridFunction& u, const WeightedNormSpec& spec,
                       double inner_fraction = 0.9);

}  // namespace dwexp
