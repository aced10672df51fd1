#pragma once

#include <vector>

#include "dwexp/grid.hpp"
#include "dwexp/multi_index.hpp"
#include "dwexp/trajectory.hpp"

namespace dwexp {

/// Which moment stream scales a profile term: the plain u0 moments, or the
/// combined stream M_alpha(u0,0)/2 + M_alpha(u1,0).
enum class TermSource { u0_moment, pair_moment };

/// One summand of the order-K linear profile,
///   coefficient * scalar * (-t)^l * (-Lap)^{lap_power} g_alpha(., t),
/// where scalar is read from the stream named by source. The coefficient
/// already carries the 1/2 of the u0 branch, so assembly is uniform.
struct ExpansionTerm {
  TermSource source = TermSource::u0_moment;
  int l = 0;
  int m = 0;
  int n = 0;  // stays 0 on the u0 branch
  MultiIndex alpha;
  double coefficient = 0.0;
  int lap_power = 0;  // 2l + m, plus n on the pair branch
};

/// The complete term list at order K (a nonnegative real; the index ranges
/// are l + m (+ n) <= floor(K/2) and |alpha| <= K - 2(l + m (+ n))).
/// Deterministic reading order: l, then m, the u0 branch before the n sweep.
/// Terms whose rational coefficient vanishes are omitted; at K = 0 exactly
/// two terms survive and the profile collapses to [M_0(u0)+M_0(u1)] g_0.
std::vector<ExpansionTerm> u_lin_terms(int dim, double K);

/// Order-K heat-kernel profile of the linear flow started from (u0, u1).
/// Every term is a closed-form Gaussian-derivative field scaled by the
/// t = 0 moments of the data, so no transforms are involved and the far
/// tail carries no periodic aliasing. Requires t >= 0.
GridFunction u_lin(const GridFunction& u0, const GridFunction& u1, double K, double t);

/// First corrected profile along a stored trajectory:
///   U_0(t) = u_lin(t) + int_0^t K1(t-s) sum_{|alpha|<=K} M_alpha(F(u(s)),s) g_alpha(.,s) ds,
/// integrated by composite trapezoid on the snapshot times (the integrand
/// is smooth and K1(0) = 0 closes the s -> t endpoint, so the rule is
/// second order in the snapshot spacing). t must be a stored snapshot
/// time. A trajectory without forcing returns u_lin(t) unchanged.
GridFunction u0_approx(const Trajectory& traj, double K, double t);

/// j-th member of the corrected sequence:
///   U_j(t) = U_0(t) + int_0^t K1(t-s) [P_K(s) F(U_{j-1}(s))] ds,
/// with P_K the moment projection (project_pk), so the correction carries
/// no moment mass up to order K. Level j-1 is materialized at every
/// snapshot node once and marched in lockstep with the Duhamel
/// accumulator: cost is linear in j and in the node count, not quadratic.
/// All state is call-local, so concurrent calls over a shared trajectory
/// are safe. j = 0 reduces to u0_approx.
GridFunction uj_approx(const Trajectory& traj, double K, int j, double t);

/// U_j at every stored snapshot time in one lockstep pass; the whole
/// sequence costs the same as the single evaluation at the final time.
std::vector<GridFunction> uj_sequence(const Trajectory& traj, double K, int j);

}  // namespace dwexp
