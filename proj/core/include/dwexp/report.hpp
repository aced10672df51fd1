#pragma once

#include <string>
#include <vector>

#include "dwexp/norms.hpp"

namespace dwexp {

/// One measurement entering a rate fit: the quantity at a ladder time,
/// paired with the box-edge share of the same measure. The ceiling is the
/// self-audit: a value that does not clear ten times it is dominated by
/// wrap-around and periodization, not physics.
struct RatePoint {
  double t = 0.0;
  double value = 0.0;
  double ceiling = 0.0;
};

/// What the pass column of the CSV carries. vacuous: the data was
/// identically zero, nothing to fit. unreliable: fewer than four points
/// cleared their ceilings, so no trustworthy fit exists; by construction
/// this never upgrades to pass.
enum class RateVerdict { pass, fail, vacuous, unreliable };

std::string to_string(RateVerdict v);

/// A fitted rate against its predicted exponent. one_sided marks upper
/// envelopes (steeper decay than predicted still passes); log_corrected
/// marks the borderline branch whose widened window is already folded
/// into tolerance. The tolerance travels with the check so the window is
/// auditable, not hidden in the comparison code.
struct RateCheck {
  std::string quantity;
  Lq q = Lq::inf;
  double weight_power = 0.0;  // k of the (1+|x|)^k weight, 0 when plain
  int level = -1;             // approximation level j, -1 when not applicable
  std::vector<RatePoint> points;
  double slope = 0.0;
  double predicted = 0.0;
  double tolerance = 0.0;
  bool one_sided = false;
  bool log_corrected = false;
  RateVerdict verdict = RateVerdict::fail;
};

/// Fits the slope and assigns the verdict. Only points that clear ten
/// times their ceiling (and are strictly positive, so they can enter a
/// log fit) are used; at least four must survive. All points stay in the
/// report either way, ceilings included, so the cut is auditable.
void finalize_rate_check(RateCheck& check);

struct DecayReport {
  std::vector<RateCheck> checks;
};

/// Vacuous quantities count as passing (nothing was claimed); unreliable
/// ones do not.
bool all_pass(const DecayReport& report);

/// CSV per docs/report-format.md: the fixed header
/// quantity,q,k,j,t,value,slope,predicted,pass,trunc_ceiling, then per
/// quantity one row per ladder point (fit columns empty) and a summary
/// row carrying slope, predicted, verdict, and the largest ceiling.
/// Doubles are printed at 17 significant digits, so parsing the file
/// reproduces them bit-exactly. Ordering is the report's, deterministic.
std::string render_csv(const DecayReport& report);

/// render_csv to a file; I/O failures carry the path.
void emit_report(const DecayReport& report, const std::string& path);

}  // namespace dwexp
