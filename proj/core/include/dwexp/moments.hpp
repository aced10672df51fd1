#pragma once

#include <utility>
#include <vector>

#include "dwexp/grid.hpp"
#include "dwexp/multi_index.hpp"

namespace dwexp {

/// Moment functionals of a field relative to the Gaussian-derivative family
/// g_alpha(., time). Holds exactly the indices |alpha| <= max_order in graded
/// lexicographic order.
struct MomentVector {
  int max_order = 0;
  double time = 0.0;
  std::vector<std::pair<MultiIndex, double>> entries;

  double value(const MultiIndex& alpha) const;
};

/// Rectangle-rule quadrature of x^alpha f(x). Logs a warning when the outer
/// 10% band of the box carries more than 1e-6 of the absolute integral: the
/// polynomial weight is then outrunning the decay of f and the value should
/// be treated as truncation limited. Repeated readings of the same index at
/// the same order of magnitude are logged once per process; the monitors
/// run per snapshot and would otherwise flood the log.
double raw_moment(const GridFunction& f, const MultiIndex& alpha);

/// The inductive moments: M_0 = integral of f, and for alpha != 0
///   M_alpha = int x^alpha f - sum_{beta <= alpha, beta != alpha} M_beta int x^alpha g_beta,
/// with beta <= alpha componentwise. This makes the map f -> {M_alpha}
/// biorthogonal to {g_alpha}: moment_alpha(g_gamma) is a unit vector.
MomentVector moment_alpha(const GridFunction& f, double t, int max_order);

/// f minus sum_{|alpha| <= max_order} M_alpha(f, t) g_alpha(., t); every
/// moment of the result up to max_order vanishes.
GridFunction project_pk(const GridFunction& f, double t, int max_order);

}  // namespace dwexp
