#include "dwexp/report.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "dwexp/decay_fit.hpp"

namespace dwexp {
namespace {

std::string num(double x) {
  if (x == 0.0) return "0";  // normalize the sign of zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

bool clears_ceiling(const RatePoint& p) { return p.value >= 10.0 * p.ceiling; }

}  // namespace

std::string to_string(RateVerdict v) {
  switch (v) {
    case RateVerdict::pass: return "pass";
    case RateVerdict::fail: return "fail";
    case RateVerdict::vacuous: return "vacuous";
    case RateVerdict::unreliable: return "unreliable";
  }
  return "?";
}

void finalize_rate_check(RateCheck& check) {
  check.slope = 0.0;
  bool all_zero = true;
  for (const RatePoint& p : check.points)
    if (p.value != 0.0) all_zero = false;
  if (check.points.empty() || all_zero) {
    check.verdict = RateVerdict::vacuous;
    return;
  }

  std::vector<double> ts, vs;
  for (const RatePoint& p : check.points) {
    if (!(p.value > 0.0) || !std::isfinite(p.value)) continue;
    if (!clears_ceiling(p)) continue;
    ts.push_back(p.t);
    vs.push_back(p.value);
  }
  if (ts.size() < 4) {
    check.verdict = RateVerdict::unreliable;
    return;
  }

  check.slope = fit_decay_rate(ts, vs).slope;
  const double hi = check.predicted + check.tolerance;
  const double lo = check.predicted - check.tolerance;
  const bool ok = check.one_sided ? check.slope <= hi
                                  : (check.slope <= hi && check.slope >= lo);
  check.verdict = ok ? RateVerdict::pass : RateVerdict::fail;
}

bool all_pass(const DecayReport& report) {
  for (const RateCheck& c : report.checks)
    if (c.verdict != RateVerdict::pass && c.verdict != RateVerdict::vacuous) return false;
  return true;
}

std::string render_csv(const DecayReport& report) {
  std::string out = "quantity,q,k,j,t,value,slope,predicted,pass,trunc_ceiling\n";
  for (const RateCheck& c : report.checks) {
    const std::string key = c.quantity + "," + to_string(c.q) + "," + num(c.weight_power) + "," +
                            std::to_string(c.level) + ",";
    double worst = 0.0;
    for (const RatePoint& p : c.points) {
      worst = std::max(worst, p.ceiling);
      out += key + num(p.t) + "," + num(p.value) + ",,,," + num(p.ceiling) + "\n";
    }
    out += key + ",," + num(c.slope) + "," + num(c.predicted) + "," + to_string(c.verdict) + "," +
           num(worst) + "\n";
  }
  return out;
}

void emit_report(const DecayReport& report, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("report: cannot open " + path + " for writing");
  out << render_csv(report);
  out.flush();
  if (!out) throw std::runtime_error("report: write failed for " + path);
}

}  // namespace dwexp
