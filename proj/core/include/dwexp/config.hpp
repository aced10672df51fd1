#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dwexp/grid.hpp"
#include "dwexp/nonlinearity.hpp"

namespace dwexp {

/// Named initial-data shapes, all centered on axis 0.
///   gaussian:            amplitude * exp(-r^2 / (2 sigma^2))
///   gaussian-derivative: its partial derivative along axis 0
///   bump:                amplitude * exp(1 - 1/(1 - (r/sigma)^2)) inside
///                        r < sigma, identically zero outside
/// with r = |x - center e_0|. The bump is the compactly supported probe;
/// the Gaussian pair matches the kernel shapes the expansion is built from.
struct DataProfile {
  std::string shape = "gaussian";
  double amplitude = 0.0;
  double sigma = 1.0;
  double center = 0.0;
};

/// Fit ladder for rate estimation: `points` times geometric from `start`
/// to the horizon, snapped to the snapshot grid. A nonempty `times` list
/// overrides the rule; explicit times must already be snapshot times.
struct LadderSpec {
  double start = 20.0;
  int points = 12;
  std::vector<double> times;
};

struct ExperimentConfig {
  int dim = 1;
  double half_width = 64.0;
  int points_per_dim = 4096;
  DataProfile u0;
  DataProfile u1;                       // amplitude 0: starts from rest
  std::optional<Nonlinearity> forcing;  // empty: linear run
  double expansion_order = 2.0;         // K of the profile expansion
  int j_max = 2;                        // deepest approximation level
  double horizon = 200.0;
  double dt = 0.01;
  double snap_spacing = 0.1;
  LadderSpec ladder;
  std::string output = "trajectory.bin";
};

/// Parse from JSON text. Keys mirror the field names (see
/// docs/config.schema.json); unknown keys, missing required keys, and
/// ill-typed values throw invalid_argument naming the offender. load_
/// reads a file and prefixes I/O and parse errors with the path.
ExperimentConfig parse_experiment_config(const std::string& text);
ExperimentConfig load_experiment_config(const std::string& path);

/// Everything checkable before any field is realized: grid validity,
/// profile shapes and parameters, stepping compatibility, expansion order
/// in the supported window [0, 4], j_max in [0, 3], ladder sanity, a
/// nonempty output path, forcing validity when present, and the box-fit
/// rule 4 sqrt(horizon) + support < half_width (the diffusive spread must
/// die out well inside the periodic box or every long-time measurement is
/// a wrap-around artifact). Throws invalid_argument on the first failure.
void validate_config(const ExperimentConfig& config);

/// Gate for rate-verification runs on a forced config: the power must sit
/// where the expansion theory applies, p > 1 + 2/dim for dim 1 and 2 or
/// p >= 2 for dim 3. Exploratory solves may ignore this; rate fits on an
/// inadmissible power are meaningless, so the verifiers call it first.
/// No-op for linear configs.
void require_expansion_admissible(const ExperimentConfig& config);

Grid config_grid(const ExperimentConfig& config);

/// Realize the configured data pair (u0, u1) on the config grid.
std::pair<GridFunction, GridFunction> initial_data(const ExperimentConfig& config);

/// Effective support radius the box-fit rule charges to a profile:
/// |center| + 6 sigma for the Gaussian shapes (beyond 6 sigma the tail is
/// below 2e-8 of the peak), |center| + sigma exactly for the bump.
double support_radius(const DataProfile& profile);

/// The realized fit ladder: geometric times rounded to multiples of
/// snap_spacing, deduplicated, clipped to (0, horizon]. Explicit times are
/// checked against the snapshot grid instead (1e-9 relative). Throws when
/// fewer than four distinct times survive; a slope fit needs that many.
std::vector<double> ladder_times(const ExperimentConfig& config);

}  // namespace dwexp
