#include "dwexp/config.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dwexp {
namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& what) {
  throw std::invalid_argument("config: " + where + ": " + what);
}

const json& expect_object(const json& j, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  return j;
}

/// Typo guard: every key must be one we consume.
void reject_unknown_keys(const json& j, const std::string& where,
                         std::initializer_list<const char*> known) {
  for (const auto& item : j.items()) {
    bool ok = false;
    for (const char* k : known)
      if (item.key() == k) ok = true;
    if (!ok) bad(where, "unknown key '" + item.key() + "'");
  }
}

double get_number(const json& j, const std::string& where) {
  if (!j.is_number()) bad(where, "expected a number");
  return j.get<double>();
}

int get_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) bad(where, "expected an integer");
  return j.get<int>();
}

std::string get_string(const json& j, const std::string& where) {
  if (!j.is_string()) bad(where, "expected a string");
  return j.get<std::string>();
}

const json* find(const json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

const json& require(const json& j, const char* key, const std::string& where) {
  const json* p = find(j, key);
  if (!p) bad(where, std::string("missing key '") + key + "'");
  return *p;
}

DataProfile parse_profile(const json& j, const std::string& where) {
  expect_object(j, where);
  reject_unknown_keys(j, where, {"shape", "amplitude", "sigma", "center"});
  DataProfile p;
  p.shape = get_string(require(j, "shape", where), where + ".shape");
  p.amplitude = get_number(require(j, "amplitude", where), where + ".amplitude");
  if (const json* s = find(j, "sigma")) p.sigma = get_number(*s, where + ".sigma");
  if (const json* c = find(j, "center")) p.center = get_number(*c, where + ".center");
  return p;
}

std::optional<Nonlinearity> parse_forcing(const json& j, const std::string& where) {
  if (j.is_null()) return std::nullopt;
  expect_object(j, where);
  reject_unknown_keys(j, where, {"p", "form", "sign"});
  Nonlinearity nl;
  nl.p = get_number(require(j, "p", where), where + ".p");
  const std::string form = get_string(require(j, "form", where), where + ".form");
  if (form == "signed")
    nl.form = NonlinearForm::signed_power;
  else if (form == "unsigned")
    nl.form = NonlinearForm::unsigned_power;
  else
    bad(where + ".form", "expected 'signed' or 'unsigned', got '" + form + "'");
  nl.sign = get_int(require(j, "sign", where), where + ".sign");
  return nl;
}

LadderSpec parse_ladder(const json& j, const std::string& where) {
  expect_object(j, where);
  reject_unknown_keys(j, where, {"start", "points", "times"});
  LadderSpec ladder;
  if (const json* t = find(j, "times")) {
    if (!t->is_array()) bad(where + ".times", "expected an array");
    for (const auto& v : *t) ladder.times.push_back(get_number(v, where + ".times[]"));
    return ladder;
  }
  if (const json* s = find(j, "start")) ladder.start = get_number(*s, where + ".start");
  if (const json* p = find(j, "points")) ladder.points = get_int(*p, where + ".points");
  return ladder;
}

bool finite(double x) { return std::isfinite(x); }

void check_profile(const DataProfile& p, const std::string& where) {
  if (p.shape != "gaussian" && p.shape != "gaussian-derivative" && p.shape != "bump")
    bad(where, "unknown shape '" + p.shape + "'");
  if (!finite(p.amplitude)) bad(where, "amplitude must be finite");
  if (!finite(p.sigma) || p.sigma <= 0.0) bad(where, "sigma must be > 0");
  if (!finite(p.center)) bad(where, "center must be finite");
}

/// Same acceptance rule as the solver so the validator never green-lights
/// a config the solver would reject.
bool integer_multiple(double whole, double part) {
  const long long k = std::llround(whole / part);
  return k >= 0 && std::abs(k * part - whole) <= 1e-9 * std::max(1.0, std::abs(whole));
}

double evaluate_profile(const DataProfile& p, const std::array<double, 3>& x) {
  const double dx0 = x[0] - p.center;
  const double r2 = dx0 * dx0 + x[1] * x[1] + x[2] * x[2];
  if (p.shape == "bump") {
    const double s2 = r2 / (p.sigma * p.sigma);
    if (s2 >= 1.0) return 0.0;
    return p.amplitude * std::exp(1.0 - 1.0 / (1.0 - s2));
  }
  const double g = std::exp(-0.5 * r2 / (p.sigma * p.sigma));
  if (p.shape == "gaussian-derivative") return -p.amplitude * dx0 / (p.sigma * p.sigma) * g;
  return p.amplitude * g;
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config: not valid JSON: ") + e.what());
  }
  expect_object(j, "top level");
  reject_unknown_keys(j, "top level",
                      {"dim", "grid", "data", "nonlinearity", "K", "j_max", "horizon", "dt",
                       "snap_spacing", "ladder", "output"});

  ExperimentConfig c;
  c.dim = get_int(require(j, "dim", "dim"), "dim");

  const json& grid = expect_object(require(j, "grid", "grid"), "grid");
  reject_unknown_keys(grid, "grid", {"half_width", "points"});
  c.half_width = get_number(require(grid, "half_width", "grid"), "grid.half_width");
  c.points_per_dim = get_int(require(grid, "points", "grid"), "grid.points");

  const json& data = expect_object(require(j, "data", "data"), "data");
  reject_unknown_keys(data, "data", {"u0", "u1"});
  c.u0 = parse_profile(require(data, "u0", "data"), "data.u0");
  if (const json* u1 = find(data, "u1")) c.u1 = parse_profile(*u1, "data.u1");

  if (const json* nl = find(j, "nonlinearity")) c.forcing = parse_forcing(*nl, "nonlinearity");

  c.expansion_order = get_number(require(j, "K", "K"), "K");
  if (const json* jm = find(j, "j_max")) c.j_max = get_int(*jm, "j_max");
  c.horizon = get_number(require(j, "horizon", "horizon"), "horizon");
  c.dt = get_number(require(j, "dt", "dt"), "dt");
  c.snap_spacing = get_number(require(j, "snap_spacing", "snap_spacing"), "snap_spacing");
  if (const json* l = find(j, "ladder")) c.ladder = parse_ladder(*l, "ladder");
  c.output = get_string(require(j, "output", "output"), "output");
  return c;
}

ExperimentConfig load_experiment_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("config: cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_experiment_config(buf.str());
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void validate_config(const ExperimentConfig& config) {
  make_grid(config.dim, config.half_width, config.points_per_dim);
  check_profile(config.u0, "data.u0");
  check_profile(config.u1, "data.u1");
  if (config.forcing) require_valid(*config.forcing);

  if (!finite(config.expansion_order) || config.expansion_order < 0.0)
    bad("K", "must be finite and >= 0");
  if (config.expansion_order > 4.0)
    bad("K", "orders above 4 drive the profile derivatives past what the grid resolves");
  if (config.j_max < 0 || config.j_max > 3) bad("j_max", "must lie in [0, 3]");

  if (!finite(config.horizon) || config.horizon <= 0.0) bad("horizon", "must be > 0");
  if (!finite(config.dt) || config.dt <= 0.0) bad("dt", "must be > 0");
  if (!finite(config.snap_spacing) || config.snap_spacing < config.dt)
    bad("snap_spacing", "must be at least dt");
  if (!integer_multiple(config.snap_spacing, config.dt))
    bad("snap_spacing", "must be an integer multiple of dt");
  if (!integer_multiple(config.horizon, config.snap_spacing))
    bad("horizon", "must be an integer multiple of snap_spacing");

  const double support = std::max(support_radius(config.u0), support_radius(config.u1));
  const double needed = 4.0 * std::sqrt(config.horizon) + support;
  if (!(needed < config.half_width)) {
    std::ostringstream msg;
    msg << "diffusive spread does not fit the box: 4 sqrt(horizon) + support = " << needed
        << " must stay below half_width = " << config.half_width;
    bad("horizon/grid", msg.str());
  }

  if (config.ladder.times.empty()) {
    if (!finite(config.ladder.start) || config.ladder.start <= 0.0)
      bad("ladder.start", "must be > 0");
    if (config.ladder.start > config.horizon) bad("ladder.start", "exceeds the horizon");
    if (config.ladder.points < 4) bad("ladder.points", "a slope fit needs at least 4 times");
  }
  if (config.output.empty()) bad("output", "must be nonempty");
}

void require_expansion_admissible(const ExperimentConfig& config) {
  if (!config.forcing) return;
  if (!admissible_for_expansion(*config.forcing, config.dim)) {
    std::ostringstream msg;
    msg << "p = " << config.forcing->p << " is outside the expansion window for dim = "
        << config.dim << " (need p > " << critical_exponent(config.dim);
    if (config.dim == 3) msg << " and p >= 2";
    msg << "); the approximation levels gain no decay there";
    bad("nonlinearity", msg.str());
  }
}

Grid config_grid(const ExperimentConfig& config) {
  return make_grid(config.dim, config.half_width, config.points_per_dim);
}

std::pair<GridFunction, GridFunction> initial_data(const ExperimentConfig& config) {
  const Grid g = config_grid(config);
  const DataProfile& p0 = config.u0;
  const DataProfile& p1 = config.u1;
  return {GridFunction::from_fn(g, [&](const std::array<double, 3>& x) {
            return evaluate_profile(p0, x);
          }),
          GridFunction::from_fn(g, [&](const std::array<double, 3>& x) {
            return evaluate_profile(p1, x);
          })};
}

double support_radius(const DataProfile& profile) {
  const double reach = profile.shape == "bump" ? profile.sigma : 6.0 * profile.sigma;
  return std::abs(profile.center) + reach;
}

std::vector<double> ladder_times(const ExperimentConfig& config) {
  std::vector<double> out;
  if (!config.ladder.times.empty()) {
    for (double t : config.ladder.times) {
      if (!finite(t) || t <= 0.0 || t > config.horizon)
        bad("ladder.times", "times must lie in (0, horizon]");
      if (!integer_multiple(t, config.snap_spacing))
        bad("ladder.times", "explicit times must be snapshot times");
      if (!out.empty() && t <= out.back()) bad("ladder.times", "must be strictly increasing");
      out.push_back(t);
    }
  } else {
    // Geometric rule snapped to the snapshot grid. Rounding can collide
    // neighbours when start/snap_spacing is small; duplicates collapse.
    const double start = config.ladder.start;
    const int points = config.ladder.points;
    const double ratio = config.horizon / start;
    long long prev = -1;
    for (int i = 0; i < points; ++i) {
      const double t = points == 1
                           ? start
                           : start * std::pow(ratio, static_cast<double>(i) / (points - 1));
      long long idx = std::llround(t / config.snap_spacing);
      const long long last = std::llround(config.horizon / config.snap_spacing);
      if (idx < 1) idx = 1;
      if (idx > last) idx = last;
      if (idx == prev) continue;
      prev = idx;
      out.push_back(static_cast<double>(idx) * config.snap_spacing);
    }
  }
  if (out.size() < 4)
    bad("ladder", "fewer than 4 distinct ladder times; cannot fit a slope");
  return out;
}

}  // namespace dwexp
