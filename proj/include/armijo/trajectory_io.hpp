#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "armijo/core.hpp"

namespace armijo::io {

/// Shortest decimal representation that parses back to the same double.
std::string format_double(double v);
/// Throws std::invalid_argument unless the whole string is a number.
double parse_double(const std::string& text);
/// "4,-5" -> (4, -5).
Point parse_point(const std::string& text);

/// Columns: n, x_0..x_{k-1}, f, grad_norm, delta, armijo_lhs, armijo_rhs.
/// Armijo cells are empty for non-Armijo optimizers.
void write_trajectory_csv(std::ostream& os, const std::vector<StepRecord>& records);
/// Records read back carry no gradient vector.
std::vector<StepRecord> read_trajectory_csv(std::istream& is);

nlohmann::json trajectory_to_json(const Trajectory& t);
Trajectory trajectory_from_json(const nlohmann::json& j);

/// Final state of a `run` invocation, written next to the trajectory artifact.
struct RunSummary {
  std::string function;
  std::string optimizer;
  double alpha = 0.0;
  double beta = 0.0;
  double delta0 = 0.0;
  std::string cap;
  Point x0;
  long long max_iters = 0;
  double grad_tol = 0.0;
  long long thin = 1;
  unsigned long long seed = 0;
  long long steps = 0;
  std::string termination;  // a Termination, or LineSearchStalled / Divergence
  Point final_point;
  std::optional<double> final_delta;
  double max_delta = 0.0;
  long long growth_limit_hits = 0;
  std::optional<std::string> error;
};

nlohmann::json summary_to_json(const RunSummary& s);
RunSummary summary_from_json(const nlohmann::json& j);

}  // namespace armijo::io
