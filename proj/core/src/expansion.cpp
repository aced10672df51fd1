#include "dwexp/expansion.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "dwexp/coeffs.hpp"
#include "dwexp/evolution.hpp"
#include "dwexp/heat.hpp"
#include "dwexp/log.hpp"
#include "dwexp/moments.hpp"
#include "dwexp/nonlinearity.hpp"

namespace dwexp {

namespace {

void require_order(double K) {
  if (!std::isfinite(K) || K < 0.0)
    throw std::invalid_argument("expansion: order must be finite and nonnegative");
}

double neg_t_pow(double t, int l) {
  double p = 1.0;
  for (int i = 0; i < l; ++i) p *= -t;
  return p;
}

// sum_{|alpha| <= kmax} M_alpha(f, s) g_alpha(., s): the moment part of f,
// exactly what project_pk(f, s, kmax) subtracts.
GridFunction moment_profile(const GridFunction& f, double s, int kmax) {
  const auto mom = moment_alpha(f, s, kmax);
  auto acc = GridFunction::zeros(f.grid());
  for (const auto& [alpha, value] : mom.entries)
    if (value != 0.0) acc = axpy(acc, value, g_alpha(f.grid(), s, alpha));
  return acc;
}

GridFunction assemble(const Grid& g, const std::vector<ExpansionTerm>& terms,
                      const MomentVector& m0, const MomentVector& m1, double t) {
  auto acc = GridFunction::zeros(g);
  for (const auto& term : terms) {
    const double scalar = term.source == TermSource::u0_moment
                              ? m0.value(term.alpha)
                              : 0.5 * m0.value(term.alpha) + m1.value(term.alpha);
    const double w = term.coefficient * scalar * neg_t_pow(t, term.l);
    if (w != 0.0) acc = axpy(acc, w, neg_laplacian_pow_g_alpha(g, t, term.alpha, term.lap_power));
  }
  return acc;
}

// U_j at the snapshot nodes 0..last, lockstep over levels. Level 0 pairs the
// profile assembly with one accumulator pass over the moment part of the
// forcing; each further level re-runs the pass on the projected forcing of
// the level below. Uniform node spacing is what the accumulator marches on,
// so it is checked, not assumed.
std::vector<GridFunction> levels_until(const Trajectory& traj, double K, int j,
                                       std::size_t last) {
  require_order(K);
  if (j < 0) throw std::invalid_argument("uj_approx: negative level");
  const auto& g = traj.grid;
  const double ds = traj.snap_spacing;
  for (std::size_t i = 0; i <= last; ++i)
    if (std::abs(traj.times[i] - static_cast<double>(i) * ds) > 1e-9 * (1.0 + traj.times[i]))
      throw std::invalid_argument("uj_approx: snapshot times are not uniformly spaced");

  const int kmax = static_cast<int>(std::floor(K));
  const auto terms = u_lin_terms(g.dim, K);
  const auto m0 = moment_alpha(traj.u.front(), 0.0, kmax);
  const auto m1 = moment_alpha(traj.du.front(), 0.0, kmax);

  const bool forced = traj.forcing.has_value();
  if (forced && (j + 1) * static_cast<long>(last + 1) > 200000)
    log_message("uj_approx: " + std::to_string(j + 1) + " levels over " +
                std::to_string(last + 1) + " nodes; expect a long evaluation");
  auto force = [&](const GridFunction& u) {
    const Nonlinearity& nl = *traj.forcing;
    return map(u, [&nl](double xi) { return nonlinearity_eval(xi, nl); });
  };

  std::vector<GridFunction> u0_at;
  u0_at.reserve(last + 1);
  {
    DuhamelAccumulator duh(g, ds);
    for (std::size_t i = 0; i <= last; ++i) {
      const double s = traj.times[i];
      if (forced) duh.push(moment_profile(force(traj.u[i]), s, kmax));
      auto lin = assemble(g, terms, m0, m1, s);
      u0_at.push_back(forced ? lin + duh.position() : std::move(lin));
    }
  }
  if (!forced || j == 0) return u0_at;

  std::vector<GridFunction> prev = u0_at;
  for (int level = 1; level <= j; ++level) {
    std::vector<GridFunction> curr;
    curr.reserve(last + 1);
    DuhamelAccumulator duh(g, ds);
    for (std::size_t i = 0; i <= last; ++i) {
      duh.push(project_pk(force(prev[i]), traj.times[i], kmax));
      curr.push_back(u0_at[i] + duh.position());
    }
    prev = std::move(curr);
  }
  return prev;
}

}  // namespace

std::vector<ExpansionTerm> u_lin_terms(int dim, double K) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("u_lin_terms: dim must be 1, 2, or 3");
  require_order(K);
  const int half = static_cast<int>(std::floor(K / 2.0));
  const int kmax = static_cast<int>(std::floor(K));
  std::vector<ExpansionTerm> out;
  for (int l = 0; l <= half; ++l) {
    for (int m = 0; l + m <= half; ++m) {
      const double phi = phi_coeff_d(l, m);
      if (phi == 0.0) continue;
      for (const auto& alpha : enumerate_multi_indices(dim, kmax - 2 * (l + m)))
        out.push_back({TermSource::u0_moment, l, m, 0, alpha, 0.5 * phi, 2 * l + m});
      for (int n = 0; l + m + n <= half; ++n) {
        const double c = phi * psi_coeff_d(n);
        for (const auto& alpha : enumerate_multi_indices(dim, kmax - 2 * (l + m + n)))
          out.push_back({TermSource::pair_moment, l, m, n, alpha, c, 2 * l + m + n});
      }
    }
  }
  return out;
}

GridFunction u_lin(const GridFunction& u0, const GridFunction& u1, double K, double t) {
  require_same_grid(u0, u1, "u_lin");
  require_order(K);
  if (!(t >= 0.0)) throw std::invalid_argument("u_lin: time must be nonnegative");
  const int kmax = static_cast<int>(std::floor(K));
  return assemble(u0.grid(), u_lin_terms(u0.grid().dim, K),
                  moment_alpha(u0, 0.0, kmax), moment_alpha(u1, 0.0, kmax), t);
}

GridFunction u0_approx(const Trajectory& traj, double K, double t) {
  return uj_approx(traj, K, 0, t);
}

GridFunction uj_approx(const Trajectory& traj, double K, int j, double t) {
  return levels_until(traj, K, j, snapshot_index(traj, t)).back();
}

std::vector<GridFunction> uj_sequence(const Trajectory& traj, double K, int j) {
  return levels_until(traj, K, j, traj.times.size() - 1);
}

}  // namespace dwexp
