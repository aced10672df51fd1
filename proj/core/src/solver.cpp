#include "dwexp/solver.hpp"

#include <cmath>
#include <complex>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

#include "dwexp/evolution.hpp"
#include "dwexp/norms.hpp"
#include "dwexp/spectral.hpp"
#include "dwexp/symbols.hpp"

namespace dwexp {

namespace {

long long exact_multiple(double whole, double part, const char* what) {
  const long long k = std::llround(whole / part);
  if (k < 0 || std::abs(k * part - whole) > 1e-9 * std::max(1.0, std::abs(whole)))
    throw std::invalid_argument(std::string("solve: ") + what);
  return k;
}

}  // namespace

Trajectory solve(const GridFunction& u0, const GridFunction& u1,
                 const std::optional<Nonlinearity>& forcing, double horizon, double dt,
                 double snap_spacing, double guard_factor) {
  require_same_grid(u0, u1, "solve");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("solve: dt must be > 0");
  if (!(horizon >= 0.0) || !std::isfinite(horizon))
    throw std::invalid_argument("solve: horizon must be >= 0");
  if (!(guard_factor > 0.0)) throw std::invalid_argument("solve: guard_factor must be > 0");
  if (forcing) require_valid(*forcing);
  const long long steps = exact_multiple(horizon, dt, "horizon must be an integer multiple of dt");
  const long long snap_every =
      exact_multiple(snap_spacing, dt, "snap_spacing must be an integer multiple of dt");
  if (snap_every < 1) throw std::invalid_argument("solve: snap_spacing must be at least dt");
  if (steps % snap_every != 0)
    throw std::invalid_argument("solve: horizon must be an integer multiple of snap_spacing");

  const Grid& g = u0.grid();
  const double amplitude = std::max(lq_norm(u0, Lq::inf), lq_norm(u1, Lq::inf));
  const double guard = guard_factor * amplitude;

  // Half-step propagator entries, one 2x2 per mode.
  const auto& rho2 = squared_frequency_table(g);
  const std::size_t modes = rho2.size();
  std::vector<double> a00(modes), a01(modes), a10(modes), a11(modes);
  for (std::size_t i = 0; i < modes; ++i) {
    const PropagatorEntries e = mode_propagator(rho2[i], 0.5 * dt);
    a00[i] = e.a00;
    a01[i] = e.a01;
    a10[i] = e.a10;
    a11[i] = e.a11;
  }

  SpectralField us = forward(u0);
  SpectralField vs = forward(u1);
  auto half_step = [&] {
    auto um = us.modes();
    auto vm = vs.modes();
    for (std::size_t i = 0; i < modes; ++i) {
      const std::complex<double> p = um[i];
      const std::complex<double> v = vm[i];
      um[i] = a00[i] * p + a01[i] * v;
      vm[i] = a10[i] * p + a11[i] * v;
    }
  };
  auto check_amplitude = [&](const GridFunction& u, long long step) {
    double peak = 0.0;
    for (double x : u.values()) peak = std::max(peak, std::abs(x));
    if (peak > guard || !std::isfinite(peak))
      throw std::runtime_error("solve: ||u||_inf = " + std::to_string(peak) + " at t = " +
                               std::to_string(step * dt) + " exceeded the blow-up guard " +
                               std::to_string(guard) + "; data too large for decay");
  };

  Trajectory out;
  out.grid = g;
  out.dt = dt;
  out.snap_spacing = snap_spacing;
  out.forcing = forcing;
  out.amplitude = amplitude;
  const std::size_t snaps = static_cast<std::size_t>(steps / snap_every) + 1;
  out.times.reserve(snaps);
  out.u.reserve(snaps);
  out.du.reserve(snaps);
  out.times.push_back(0.0);
  out.u.push_back(u0);
  out.du.push_back(u1);

  for (long long step = 1; step <= steps; ++step) {
    half_step();
    if (forcing) {
      const GridFunction u = inverse(us);
      check_amplitude(u, step);
      const Nonlinearity nl = *forcing;
      const GridFunction f =
          map(u, [&nl](double xi) { return nonlinearity_eval(xi, nl); });
      const SpectralField fs = forward(f);
      auto vm = vs.modes();
      const auto fm = fs.modes();
      for (std::size_t i = 0; i < modes; ++i) vm[i] += dt * fm[i];
    }
    half_step();

    if (step % snap_every == 0) {
      GridFunction u = inverse(us);
      check_amplitude(u, step);
      out.times.push_back(static_cast<double>(step / snap_every) * snap_spacing);
      out.u.push_back(std::move(u));
      out.du.push_back(inverse(vs));
    }
  }
  return out;
}

double mild_residual(const Trajectory& traj, double t) {
  const std::size_t idx = snapshot_index(traj, t);
  const double tt = traj.times[idx];
  const GridFunction& u0 = traj.u[0];
  const GridFunction& u1 = traj.du[0];

  GridFunction rhs = k0_apply(u0, tt) + k1_apply(axpy(u1, 0.5, u0), tt);
  if (traj.forcing && idx > 0) {
    const Nonlinearity nl = *traj.forcing;
    DuhamelAccumulator acc(traj.grid, traj.snap_spacing);
    for (std::size_t i = 0; i <= idx; ++i)
      acc.push(map(traj.u[i], [&nl](double xi) { return nonlinearity_eval(xi, nl); }));
    rhs = rhs + acc.position();
  }
  return lq_norm(traj.u[idx] - rhs, Lq::inf);
}

DataNorms data_norms(const GridFunction& u0, const GridFunction& u1, double K) {
  require_same_grid(u0, u1, "data_norms");
  if (!(K >= 0.0) || !std::isfinite(K))
    throw std::invalid_argument("data_norms: K must be finite and >= 0");
  const int deriv_order = u0.grid().dim / 2;  // 0 for dim 1, else 1
  auto sobolev = [&](const GridFunction& f, Lq q, double k) {
    double s = weighted_lq_norm(f, {q, k});
    if (deriv_order >= 1)
      for (int axis = 0; axis < f.grid().dim; ++axis)
        s += weighted_lq_norm(spectral_derivative(f, axis), {q, k});
    return s;
  };
  auto pair_sum = [&](double k) {
    return sobolev(u0, Lq::inf, k) + sobolev(u0, Lq::one, k) +
           weighted_lq_norm(u1, {Lq::inf, k}) + weighted_lq_norm(u1, {Lq::one, k});
  };
  return {pair_sum(0.0), pair_sum(K)};
}

}  // namespace dwexp
