#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dwexp/grid.hpp"
#include "dwexp/nonlinearity.hpp"

namespace dwexp {

/// A solved time history: the pair (u, du/dt) sampled every snap_spacing
/// from t = 0. Immutable once produced; expansions and rate fits read it
/// without re-solving.
struct Trajectory {
  Grid grid;
  std::vector<double> times;      // times[i] = i * snap_spacing
  std::vector<GridFunction> u;    // one per time
  std::vector<GridFunction> du;   // matching time derivative
  double dt = 0.0;                // integrator step the history was produced with
  double snap_spacing = 0.0;
  std::optional<Nonlinearity> forcing;  // empty: the linear flow F == 0
  double amplitude = 0.0;               // sup amplitude of the initial data pair
};

/// Index of the snapshot at time t, matched within 1e-9 (1 + |t|). Throws
/// invalid_argument when t is not a stored time.
std::size_t snapshot_index(const Trajectory& traj, double t);

/// Binary container, layout documented in docs/trajectory-format.md:
/// 8-byte magic "DWTRAJ01", little-endian uint64 header length, a JSON
/// header, then per snapshot the u values followed by the du values as
/// little-endian doubles. The roundtrip is bit-exact. write_trajectory
/// overwrites silently (the CLI layer owns overwrite refusal);
/// read_trajectory validates magic, header consistency, and value
/// finiteness, throwing runtime_error on a malformed file.
void write_trajectory(const Trajectory& traj, const std::string& path);
Trajectory read_trajectory(const std::string& path);

}  // namespace dwexp
