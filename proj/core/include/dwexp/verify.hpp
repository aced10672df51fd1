#pragma once

#include "dwexp/config.hpp"
#include "dwexp/report.hpp"
#include "dwexp/trajectory.hpp"

namespace dwexp {

/// Solve the configured problem and persist the trajectory at the output
/// path. Refuses to overwrite an existing file unless force is set (the
/// canonical runs take minutes; clobbering one by accident is worse than
/// one extra flag). Logs the data-size functionals, the worst blow-up
/// guard margin, and the box-tail mass share at each decade of time.
Trajectory run_experiment(const ExperimentConfig& config, bool force = false);

/// The trajectory for the config: reads the output file when present,
/// after checking grid, stepping, and forcing against the config (a stale
/// file from a different experiment must not silently color the rates);
/// otherwise solves fresh without persisting. Either way the result is
/// bit-identical to a fresh run of the same config.
Trajectory obtain_trajectory(const ExperimentConfig& config);

/// Rate suites for an unforced config, one RateCheck per quantity:
///   profile_gap_order<κ>: t^{dim/2 (1-1/q)} ||v(t) - closed profile of
///     order κ||_q for κ = 0..floor(K), q in {1, inf}; the prediction
///     -κ/2 is an upper envelope (one-sided).
///   solution_norm: (1+|x|)^k weighted norms of v(t) for k = 0, 1, 2
///     against the growth laws k/2 (L^1) and (k-dim)/2 (L^inf).
///   v0_gap_order<κ>, v1_gap_order<κ>: t^{dim/2} sup gap between the flow
///     kernels and their heat approximants of order κ in {0, 2}, upper
///     envelope -(floor(κ/2)+1), applied to the configured u0 profile.
/// Throws invalid_argument on a forced config.
DecayReport verify_linear(const ExperimentConfig& config);

/// Rate suites for a forced config (requires an expansion-admissible
/// power):
///   solution_norm: as above, on the forced solution.
///   uj_gap (level j = 0..j_max): t^{dim/2 (1-1/q)} ||u(t) - U_j(t)||_q
///     against max(-K/2, -(j+1)A), two-sided; the borderline
///     (j+1)A = K/2 is flagged log-corrected and widened to 0.25.
///   uj_band (level j): the same weight on ||U_j(t)||_q itself, which the
///     uniform bound pins to slope 0.
DecayReport verify_nonlinear(const ExperimentConfig& config);

/// Fast invariant suite for an installed build: coefficient spot values,
/// kernel mass identities, semigroup composition, norm homogeneity,
/// operator linearity, projection annihilation, the split-step order
/// ratio, and a trajectory roundtrip through a temporary file. One log
/// line per group; returns whether every group held.
bool selftest();

}  // namespace dwexp
