#include "dwexp/verify.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <random>
#include <sstream>
#include <stdexcept>

#include "dwexp/coeffs.hpp"
#include "dwexp/evolution.hpp"
#include "dwexp/expansion.hpp"
#include "dwexp/heat.hpp"
#include "dwexp/log.hpp"
#include "dwexp/moments.hpp"
#include "dwexp/multi_index.hpp"
#include "dwexp/solver.hpp"

namespace dwexp {
namespace {

namespace fs = std::filesystem;

/// t^{dim/2 (1 - 1/q)}, the scaling that turns the decaying L^q norms into
/// flat quantities. Every fitted value uses t (not 1+t); on the fit window
/// t >= 20 the difference moves slopes by under 0.01.
double time_weight(double t, int dim, Lq q) {
  const double one_minus_recip = q == Lq::inf ? 1.0 : (q == Lq::two ? 0.5 : 0.0);
  return std::pow(t, 0.5 * dim * one_minus_recip);
}

RatePoint measure(const GridFunction& f, double t, double scale, const WeightedNormSpec& spec) {
  return {t, scale * weighted_lq_norm(f, spec), scale * band_lq_measure(f, spec)};
}

double integral(const GridFunction& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i];
  return s * f.grid().cell_volume();
}

double sup_diff(const GridFunction& a, const GridFunction& b) {
  return lq_norm(a - b, Lq::inf);
}

/// The Theorem-level norm laws shared by the linear and forced suites:
/// L^1_k grows like k/2, L^inf_k decays like (k - dim)/2, for k = 0, 1, 2.
/// The plain norms carry the tight windows, the weighted ones the wider.
void append_solution_norms(DecayReport& rep, const Trajectory& traj,
                           const std::vector<double>& ladder, int dim) {
  struct Law {
    Lq q;
    double k;
    double predicted;
    double tol;
  };
  const Law laws[] = {
      {Lq::one, 0.0, 0.0, 0.1},
      {Lq::inf, 0.0, -0.5 * dim, 0.15},
      {Lq::one, 1.0, 0.5, 0.2},
      {Lq::inf, 1.0, 0.5 * (1.0 - dim), 0.2},
      {Lq::one, 2.0, 1.0, 0.2},
      {Lq::inf, 2.0, 0.5 * (2.0 - dim), 0.2},
  };
  for (const Law& law : laws) {
    RateCheck c;
    c.quantity = "solution_norm";
    c.q = law.q;
    c.weight_power = law.k;
    c.predicted = law.predicted;
    c.tolerance = law.tol;
    for (double t : ladder)
      c.points.push_back(
          measure(traj.u[snapshot_index(traj, t)], t, 1.0, {law.q, law.k}));
    finalize_rate_check(c);
    rep.checks.push_back(std::move(c));
  }
}

void check_matches_config(const Trajectory& traj, const ExperimentConfig& config) {
  auto mismatch = [&](const char* what) {
    throw std::runtime_error("verify: stored trajectory at " + config.output +
                             " does not match the config: " + what);
  };
  if (!(traj.grid == config_grid(config))) mismatch("grid");
  if (std::abs(traj.dt - config.dt) > 1e-12 * std::max(1.0, config.dt)) mismatch("dt");
  if (std::abs(traj.snap_spacing - config.snap_spacing) >
      1e-12 * std::max(1.0, config.snap_spacing))
    mismatch("snap_spacing");
  if (traj.times.empty() || traj.times.back() < config.horizon - 1e-9 * (1.0 + config.horizon))
    mismatch("horizon");
  if (traj.forcing.has_value() != config.forcing.has_value()) mismatch("forcing presence");
  if (traj.forcing &&
      (traj.forcing->p != config.forcing->p || traj.forcing->form != config.forcing->form ||
       traj.forcing->sign != config.forcing->sign))
    mismatch("forcing parameters");
}

}  // namespace

Trajectory run_experiment(const ExperimentConfig& config, bool force) {
  validate_config(config);
  if (fs::exists(config.output) && !force)
    throw std::runtime_error("run: " + config.output +
                             " already exists; pass the force flag to overwrite");

  const auto [u0, u1] = initial_data(config);
  const DataNorms dn = data_norms(u0, u1, config.expansion_order);
  {
    std::ostringstream msg;
    msg << "run: data norms e0 = " << dn.e0 << ", ek = " << dn.ek
        << " at weight power " << config.expansion_order;
    log_message(msg.str());
  }

  Trajectory traj =
      solve(u0, u1, config.forcing, config.horizon, config.dt, config.snap_spacing);

  double worst = 0.0;
  for (const GridFunction& f : traj.u) worst = std::max(worst, lq_norm(f, Lq::inf));
  {
    std::ostringstream msg;
    msg << "run: peak amplitude " << worst << " against guard threshold "
        << 10.0 * traj.amplitude;
    log_message(msg.str());
  }

  for (double t = 1.0; t <= config.horizon * (1.0 + 1e-12); t *= 10.0) {
    std::size_t idx;
    try {
      idx = snapshot_index(traj, t);
    } catch (const std::invalid_argument&) {
      continue;  // decade falls between snapshots; nothing to report
    }
    const double total = lq_norm(traj.u[idx], Lq::one);
    const double tail = band_lq_measure(traj.u[idx], {Lq::one, 0.0});
    std::ostringstream msg;
    msg << "run: box tail at t = " << t << ": " << tail << " of L1 mass " << total;
    log_message(msg.str());
  }

  const fs::path parent = fs::path(config.output).parent_path();
  if (!parent.empty()) fs::create_directories(parent);
  write_trajectory(traj, config.output);
  {
    std::ostringstream msg;
    msg << "run: wrote " << traj.times.size() << " snapshots to " << config.output;
    log_message(msg.str());
  }
  return traj;
}

Trajectory obtain_trajectory(const ExperimentConfig& config) {
  validate_config(config);
  if (fs::exists(config.output)) {
    Trajectory traj = read_trajectory(config.output);
    check_matches_config(traj, config);
    log_message("verify: reusing stored trajectory " + config.output);
    return traj;
  }
  log_message("verify: no stored trajectory at " + config.output + "; solving fresh");
  const auto [u0, u1] = initial_data(config);
  return solve(u0, u1, config.forcing, config.horizon, config.dt, config.snap_spacing);
}

DecayReport verify_linear(const ExperimentConfig& config) {
  validate_config(config);
  if (config.forcing)
    throw std::invalid_argument(
        "verify_linear: config carries a nonlinearity; use the nonlinear suite");
  const Trajectory traj = obtain_trajectory(config);
  const std::vector<double> ladder = ladder_times(config);
  const auto [u0, u1] = initial_data(config);

  DecayReport rep;

  // Closed-profile gap per order: the scaled gap must decay at least as
  // fast as t^{-order/2}, and typically faster (the next correction), so
  // the window is one-sided.
  const int top = static_cast<int>(std::floor(config.expansion_order));
  for (int order = 0; order <= top; ++order) {
    for (Lq q : {Lq::one, Lq::inf}) {
      RateCheck c;
      c.quantity = "profile_gap_order" + std::to_string(order);
      c.q = q;
      c.predicted = -0.5 * order;
      c.tolerance = 0.15;
      c.one_sided = true;
      for (double t : ladder) {
        const GridFunction gap =
            traj.u[snapshot_index(traj, t)] - u_lin(u0, u1, order, t);
        c.points.push_back(measure(gap, t, time_weight(t, config.dim, q), {q, 0.0}));
      }
      finalize_rate_check(c);
      rep.checks.push_back(std::move(c));
    }
  }

  append_solution_norms(rep, traj, ladder, config.dim);

  // Kernel vs heat approximant, applied to the configured u0 shape. The
  // order of the approximant is independent of the config's K; orders 0
  // and 2 bracket the implemented window.
  for (int order : {0, 2}) {
    struct Op {
      const char* name;
      GridFunction (*kernel)(const GridFunction&, double);
      GridFunction (*approx)(const GridFunction&, double, double);
    };
    const Op ops[] = {{"v0_gap_order", &k0_apply, &v0_apply},
                      {"v1_gap_order", &k1_apply, &v1_apply}};
    for (const Op& op : ops) {
      RateCheck c;
      c.quantity = op.name + std::to_string(order);
      c.q = Lq::inf;
      c.predicted = -(order / 2 + 1);
      c.tolerance = 0.2;
      c.one_sided = true;
      for (double t : ladder) {
        const GridFunction gap = op.kernel(u0, t) - op.approx(u0, t, order);
        c.points.push_back(
            measure(gap, t, std::pow(t, 0.5 * config.dim), {Lq::inf, 0.0}));
      }
      finalize_rate_check(c);
      rep.checks.push_back(std::move(c));
    }
  }

  return rep;
}

DecayReport verify_nonlinear(const ExperimentConfig& config) {
  validate_config(config);
  if (!config.forcing)
    throw std::invalid_argument("verify_nonlinear: config is linear; use the linear suite");
  require_expansion_admissible(config);
  const Trajectory traj = obtain_trajectory(config);
  const std::vector<double> ladder = ladder_times(config);

  DecayReport rep;
  append_solution_norms(rep, traj, ladder, config.dim);

  const double K = config.expansion_order;
  const double A = decay_index(*config.forcing, config.dim);
  for (int j = 0; j <= config.j_max; ++j) {
    const std::vector<GridFunction> seq = uj_sequence(traj, K, j);
    for (Lq q : {Lq::one, Lq::inf}) {
      RateCheck gap;
      gap.quantity = "uj_gap";
      gap.q = q;
      gap.level = j;
      const double profile_rate = -0.5 * K;
      const double level_rate = -(j + 1) * A;
      gap.predicted = std::max(profile_rate, level_rate);
      if (std::abs(level_rate - profile_rate) <= 1e-9) {
        // Borderline level: the true remainder picks up a log factor,
        // which a power fit reads as a shallower slope.
        gap.log_corrected = true;
        gap.tolerance = 0.25;
      } else {
        gap.tolerance = level_rate > profile_rate ? 0.15 : 0.2;
      }
      RateCheck band;
      band.quantity = "uj_band";
      band.q = q;
      band.level = j;
      band.predicted = 0.0;
      band.tolerance = 0.2;
      for (double t : ladder) {
        const std::size_t idx = snapshot_index(traj, t);
        const double w = time_weight(t, config.dim, q);
        gap.points.push_back(measure(traj.u[idx] - seq[idx], t, w, {q, 0.0}));
        band.points.push_back(measure(seq[idx], t, w, {q, 0.0}));
      }
      finalize_rate_check(gap);
      finalize_rate_check(band);
      rep.checks.push_back(std::move(gap));
      rep.checks.push_back(std::move(band));
    }
  }
  return rep;
}

namespace {

struct SelftestScope {
  bool all_ok = true;
  void report(const char* group, bool good, const std::string& detail) {
    all_ok = all_ok && good;
    log_message(std::string("selftest ") + group + ": " + (good ? "ok" : "FAIL") + " (" +
                detail + ")");
  }
};

std::string fmt(double x) {
  std::ostringstream s;
  s << x;
  return s.str();
}

}  // namespace

bool selftest() {
  SelftestScope scope;

  {
    const bool good = phi_coeff(0, 0) == 1 && phi_coeff(0, 2) == 0 && phi_coeff(1, 1) == 2 &&
                      phi_coeff(1, 3) == 14 && phi_coeff(2, 0) == Rational(1, 2) &&
                      psi_coeff(2) == 6 && psi_coeff(5) == 252;
    scope.report("coefficients", good, "exact spot values");
  }

  const Grid g = make_grid(1, 16.0, 128);

  {
    // Mass factors of the two propagator kernels; exact on the periodic
    // box because the zero mode carries the integral.
    std::mt19937 rng(2026);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    double worst = 0.0;
    for (int trial = 0; trial < 3; ++trial) {
      const double a0 = unif(rng), a1 = unif(rng), a2 = unif(rng), c = unif(rng);
      const GridFunction phi = GridFunction::from_fn(g, [&](const std::array<double, 3>& x) {
        const double y = x[0] - c;
        return (a0 + a1 * y + a2 * y * y) * std::exp(-0.5 * y * y);
      });
      const double m = integral(phi);
      for (double t : {0.1, 1.0, 10.0, 100.0}) {
        worst = std::max(worst,
                         std::abs(integral(k0_apply(phi, t)) - 0.5 * (1.0 + std::exp(-t)) * m));
        worst =
            std::max(worst, std::abs(integral(k1_apply(phi, t)) - (1.0 - std::exp(-t)) * m));
      }
    }
    scope.report("mass identities", worst <= 1e-10, "worst gap " + fmt(worst));
  }

  const GridFunction phi = GridFunction::from_fn(g, [](const std::array<double, 3>& x) {
    return (1.0 + x[0]) * std::exp(-0.5 * x[0] * x[0]);
  });
  const GridFunction psi = GridFunction::from_fn(g, [](const std::array<double, 3>& x) {
    return std::exp(-x[0] * x[0]);
  });

  {
    const double gap = sup_diff(heat_semigroup(heat_semigroup(phi, 0.7), 0.3),
                                heat_semigroup(phi, 1.0));
    scope.report("semigroup law", gap <= 1e-10, "composition gap " + fmt(gap));
  }

  {
    double worst = 0.0;
    for (Lq q : {Lq::one, Lq::two, Lq::inf}) {
      const double a = lq_norm(-3.5 * phi, q);
      const double b = 3.5 * lq_norm(phi, q);
      worst = std::max(worst, std::abs(a - b) / b);
    }
    const double lin = sup_diff(k1_apply(axpy(phi, 2.25, psi), 2.0),
                                axpy(k1_apply(phi, 2.0), 2.25, k1_apply(psi, 2.0)));
    const bool good = worst <= 1e-12 && lin <= 1e-10;
    scope.report("homogeneity and linearity", good,
                 "norm gap " + fmt(worst) + ", operator gap " + fmt(lin));
  }

  {
    const GridFunction projected = project_pk(phi, 0.7, 3);
    double worst = 0.0;
    for (const MultiIndex& alpha : enumerate_multi_indices(1, 3))
      worst = std::max(worst, std::abs(raw_moment(projected, alpha)));
    scope.report("projection annihilation", worst <= 1e-8, "worst moment " + fmt(worst));
  }

  {
    const Grid gs = make_grid(1, 16.0, 64);
    const GridFunction w0 = GridFunction::from_fn(gs, [](const std::array<double, 3>& x) {
      return 0.5 * std::exp(-x[0] * x[0]);
    });
    const GridFunction zero = GridFunction::zeros(gs);
    const Nonlinearity cubic{3.0, NonlinearForm::signed_power, +1};
    auto final_state = [&](double dt) {
      return solve(w0, zero, cubic, 1.0, dt, 1.0).u.back();
    };
    const GridFunction a = final_state(0.05);
    const GridFunction b = final_state(0.025);
    const GridFunction c = final_state(0.0125);
    const double ratio = sup_diff(a, b) / sup_diff(b, c);
    scope.report("split-step order", ratio >= 3.2 && ratio <= 4.8,
                 "refinement ratio " + fmt(ratio));
  }

  {
    const Grid gs = make_grid(1, 16.0, 64);
    const GridFunction w0 = GridFunction::from_fn(gs, [](const std::array<double, 3>& x) {
      return 0.3 * std::exp(-x[0] * x[0]);
    });
    const Trajectory traj = solve(w0, GridFunction::zeros(gs), std::nullopt, 0.5, 0.05, 0.25);
    const fs::path path =
        fs::temp_directory_path() /
        ("dwexp-selftest-" +
         std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()) + ".bin");
    bool good = false;
    std::string detail = "write failed";
    try {
      write_trajectory(traj, path.string());
      const Trajectory back = read_trajectory(path.string());
      good = back.times == traj.times && back.dt == traj.dt;
      for (std::size_t i = 0; good && i < traj.u.size(); ++i) {
        if (sup_diff(back.u[i], traj.u[i]) != 0.0) good = false;
        if (sup_diff(back.du[i], traj.du[i]) != 0.0) good = false;
      }
      detail = good ? "bit-exact through " + path.string() : "values differ after roundtrip";
    } catch (const std::exception& e) {
      detail = e.what();
    }
    std::error_code ec;
    fs::remove(path, ec);
    scope.report("trajectory roundtrip", good, detail);
  }

  return scope.all_ok;
}

}  // namespace dwexp
