#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace armijo::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kNumericalFailure = 2,
  kAuditFailure = 3,
};

struct RunConfig {
  std::string function = "example1";
  /// backtracking | unbounded | uncapped | standard | diminishing
  std::string optimizer = "backtracking";
  double alpha = 0.5;
  double beta = 0.7;
  /// Armijo delta0; the fixed rate for standard; the schedule scale for diminishing.
  double delta0 = 1.0;
  std::string x0;  // comma separated, e.g. "4,-5"
  long long max_iters = 1'000'000;
  double grad_tol = 1e-10;
  std::string cap = "paper-sqrt";  // paper-sqrt | none
  std::string output_format = "csv";  // csv | json
  long long thin = 1;
  unsigned long long seed = 0;
  /// Trajectory path; the summary goes to <stem>.summary.json beside it.
  std::optional<std::string> output;
};

/// Writes the trajectory and summary artifacts and prints the summary JSON.
int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

struct AuditConfig {
  std::string trajectory;
  std::optional<std::string> summary;  // defaults to <stem>.summary.json
  double epsilon = 1e-3;
  double tail_fraction = 0.2;
  double critical_tol = 1e-3;
  /// The final point is replaced by a known critical point of the objective
  /// within this distance before classification.
  double snap_radius = 1e-3;
  std::optional<std::string> output;
};

/// Prints the audit report JSON; exit 0 iff the audit passes.
int cmd_audit(const AuditConfig& cfg, std::ostream& out, std::ostream& err);

/// Verdict table: rule, increment dimension, verdict.
int cmd_units(std::ostream& out);

/// Path of the summary artifact written next to a trajectory file.
std::string summary_path_for(const std::string& trajectory_path);

}  // namespace armijo::cli
