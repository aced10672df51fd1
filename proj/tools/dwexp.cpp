// Command-line front end: configure runs, drive the verification suites,
// dump the expansion coefficient table, and health-check a build.
#include <cstdio>
#include <exception>
#include <string>

#include "CLI11.hpp"
#include "dwexp/coeffs.hpp"
#include "dwexp/config.hpp"
#include "dwexp/log.hpp"
#include "dwexp/rational.hpp"
#include "dwexp/report.hpp"
#include "dwexp/verify.hpp"

namespace {

/// Default report path: the config's output with the suite suffix, so a
/// run directory collects its own reports.
std::string default_report_path(const dwexp::ExperimentConfig& config, const char* suite) {
  return config.output + "." + suite + ".csv";
}

void print_summary(const dwexp::DecayReport& report) {
  for (const dwexp::RateCheck& c : report.checks) {
    std::string window = c.one_sided ? "<= " : "+- ";
    window += std::to_string(c.tolerance);
    std::printf("%-22s q=%-3s k=%g j=%-2d slope=%+.4f predicted=%+.4f (%s%s) %s\n",
                c.quantity.c_str(), dwexp::to_string(c.q).c_str(), c.weight_power, c.level,
                c.slope, c.predicted, window.c_str(), c.log_corrected ? ", log branch" : "",
                dwexp::to_string(c.verdict).c_str());
  }
}

int run_verify(const std::string& config_path, std::string report_path, bool nonlinear) {
  const dwexp::ExperimentConfig config = dwexp::load_experiment_config(config_path);
  const dwexp::DecayReport report =
      nonlinear ? dwexp::verify_nonlinear(config) : dwexp::verify_linear(config);
  if (report_path.empty())
    report_path = default_report_path(config, nonlinear ? "nonlinear" : "linear");
  dwexp::emit_report(report, report_path);
  print_summary(report);
  std::printf("report written to %s\n", report_path.c_str());
  const bool ok = dwexp::all_pass(report);
  std::printf("%s\n", ok ? "all checks passed" : "CHECKS FAILED");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  dwexp::set_log_sink([](const std::string& msg) { std::printf("[log] %s\n", msg.c_str()); });

  CLI::App app{"damped wave expansion laboratory"};
  app.require_subcommand(1);

  std::string config_path;
  std::string report_path;
  bool force = false;
  int order_k = 4;

  CLI::App* run = app.add_subcommand("run", "solve the configured problem and persist it");
  run->add_option("config", config_path, "experiment config (JSON)")->required();
  run->add_flag("--force", force, "overwrite an existing output file");

  CLI::App* vlin = app.add_subcommand("verify-linear", "rate suites for a linear config");
  vlin->add_option("config", config_path, "experiment config (JSON)")->required();
  vlin->add_option("--report", report_path, "CSV path (default: <output>.linear.csv)");

  CLI::App* vnl = app.add_subcommand("verify-nonlinear", "rate suites for a forced config");
  vnl->add_option("config", config_path, "experiment config (JSON)")->required();
  vnl->add_option("--report", report_path, "CSV path (default: <output>.nonlinear.csv)");

  CLI::App* coeffs = app.add_subcommand("coeffs", "print the expansion coefficient table");
  coeffs->add_option("--K", order_k, "expansion order")->required();

  CLI::App* self = app.add_subcommand("selftest", "run the build health checks");

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) {
      const dwexp::ExperimentConfig config = dwexp::load_experiment_config(config_path);
      const dwexp::Trajectory traj = dwexp::run_experiment(config, force);
      std::printf("run complete: %zu snapshots, final time %g, output %s\n", traj.times.size(),
                  traj.times.empty() ? 0.0 : traj.times.back(), config.output.c_str());
      return 0;
    }
    if (vlin->parsed()) return run_verify(config_path, report_path, false);
    if (vnl->parsed()) return run_verify(config_path, report_path, true);
    if (coeffs->parsed()) {
      if (order_k < 0) {
        std::fprintf(stderr, "error: --K must be >= 0\n");
        return 2;
      }
      for (const dwexp::CoefficientRow& row : dwexp::coefficient_table(order_k))
        std::printf("%s %d %d %s\n", row.name.c_str(), row.l, row.m,
                    dwexp::to_fraction_string(row.value).c_str());
      return 0;
    }
    if (self->parsed()) {
      const bool ok = dwexp::selftest();
      std::printf("%s\n", ok ? "selftest passed" : "SELFTEST FAILED");
      return ok ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
