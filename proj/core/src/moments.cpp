#include "dwexp/moments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <set>
#include <stdexcept>
#include <utility>

#include "dwexp/heat.hpp"
#include "dwexp/log.hpp"

namespace dwexp {

namespace {

constexpr int kMaxMomentOrder = 8;
constexpr double kBandFraction = 0.9;
constexpr double kBandWarnRatio = 1e-6;

/// The rate monitors evaluate moments at every snapshot, so an edge-heavy
/// stretch of a run would repeat the same reading thousands of times.
/// One line per (index, order of magnitude) for the whole process is
/// enough to flag the instrument limit.
void warn_band_share(const MultiIndex& alpha, double share) {
  const int decade = static_cast<int>(std::floor(std::log10(share)));
  static std::mutex warn_mutex;
  static std::set<std::pair<std::string, int>> warned;
  {
    const std::lock_guard<std::mutex> lock(warn_mutex);
    if (!warned.insert({alpha.str(), decade}).second) return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.1e", share);
  log_message("raw_moment: outer band holds " + std::string(buf) +
              " of the absolute integral for alpha = " + alpha.str() +
              "; treat as truncation limited");
}

double monomial(const std::array<double, 3>& x, const MultiIndex& alpha) {
  double m = 1.0;
  for (int d = 0; d < alpha.dim; ++d)
    for (int i = 0; i < alpha.a[d]; ++i) m *= x[d];
  return m;
}

}  // namespace

double MomentVector::value(const MultiIndex& alpha) const {
  for (const auto& [index, v] : entries)
    if (index == alpha) return v;
  throw std::invalid_argument("MomentVector: no entry for " + alpha.str());
}

double raw_moment(const GridFunction& f, const MultiIndex& alpha) {
  const Grid& g = f.grid();
  if (alpha.dim != g.dim) throw std::invalid_argument("raw_moment: index/grid dim mismatch");
  if (alpha.order() > kMaxMomentOrder)
    throw std::invalid_argument("raw_moment: order beyond supported range");
  const double band_edge = kBandFraction * g.half_width;
  double sum = 0.0, abs_sum = 0.0, band_abs = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto x = g.point(i);
    const double term = monomial(x, alpha) * f[i];
    sum += term;
    abs_sum += std::abs(term);
    double max_coord = 0.0;
    for (int d = 0; d < g.dim; ++d) max_coord = std::max(max_coord, std::abs(x[d]));
    if (max_coord >= band_edge) band_abs += std::abs(term);
  }
  if (abs_sum > 0.0 && band_abs > kBandWarnRatio * abs_sum)
    warn_band_share(alpha, band_abs / abs_sum);
  return sum * g.cell_volume();
}

MomentVector moment_alpha(const GridFunction& f, double t, int max_order) {
  if (t < 0.0) throw std::invalid_argument("moment_alpha: t must be nonnegative");
  if (max_order < 0 || max_order > 4)
    throw std::invalid_argument("moment_alpha: order must be in [0, 4]");
  const Grid& g = f.grid();
  const auto indices = enumerate_multi_indices(g.dim, max_order);

  std::vector<GridFunction> basis;
  basis.reserve(indices.size());
  for (const auto& beta : indices) basis.push_back(g_alpha(g, t, beta));

  MomentVector mv{max_order, t, {}};
  mv.entries.reserve(indices.size());
  // Graded order guarantees every beta < alpha is already resolved.
  for (std::size_t ia = 0; ia < indices.size(); ++ia) {
    const MultiIndex& alpha = indices[ia];
    double m = raw_moment(f, alpha);
    for (std::size_t ib = 0; ib < ia; ++ib) {
      const MultiIndex& beta = indices[ib];
      if (!beta.leq(alpha)) continue;
      m -= mv.entries[ib].second * raw_moment(basis[ib], alpha);
    }
    mv.entries.emplace_back(alpha, m);
  }
  return mv;
}

GridFunction project_pk(const GridFunction& f, double t, int max_order) {
  const MomentVector mv = moment_alpha(f, t, max_order);
  GridFunction out = f;
  for (const auto& [alpha, m] : mv.entries) out = axpy(out, -m, g_alpha(f.grid(), t, alpha));
  return out;
}

}  // namespace dwexp
