#include "armijo/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>

#include "armijo/analysis.hpp"
#include "armijo/optimizers.hpp"
#include "armijo/testfns.hpp"
#include "armijo/trajectory_io.hpp"
#include "armijo/units.hpp"

namespace armijo::cli {
namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

CapFunction parse_cap(const std::string& name, double delta0) {
  if (name == "paper-sqrt") return CapFunction::paper_sqrt(delta0);
  if (name == "none") return CapFunction::none();
  throw UsageError("unknown cap '" + name + "' (expected paper-sqrt or none)");
}

OptimizerSpec make_spec(const RunConfig& cfg) {
  LineSearchConfig ls{cfg.alpha, cfg.beta, cfg.delta0, parse_cap(cfg.cap, cfg.delta0)};
  const std::string& kind = cfg.optimizer;
  OptimizerSpec spec;
  if (kind == "backtracking") {
    ls.cap = CapFunction::none();
    spec = BacktrackingGD{ls};
  } else if (kind == "unbounded") {
    if (ls.cap.present()) {
      spec = UnboundedGD{ls};
    } else {
      spec = UncappedTwoWayGD{ls};
    }
  } else if (kind == "uncapped") {
    ls.cap = CapFunction::none();
    spec = UncappedTwoWayGD{ls};
  } else if (kind == "standard") {
    if (!(cfg.delta0 > 0.0)) throw UsageError("delta0 must be positive");
    return StandardGD{cfg.delta0};
  } else if (kind == "diminishing") {
    if (!(cfg.delta0 > 0.0)) throw UsageError("delta0 must be positive");
    return DiminishingGD{DiminishingSchedule{DiminishingSchedule::Kind::Harmonic, cfg.delta0}};
  } else {
    throw UsageError("unknown optimizer '" + kind + "'");
  }
  try {
    ls.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return spec;
}

nlohmann::json point_json(const Point& x) {
  nlohmann::json arr = nlohmann::json::array();
  for (Eigen::Index i = 0; i < x.size(); ++i) arr.push_back(x(i));
  return arr;
}

void write_artifacts(const RunConfig& cfg, const Trajectory& traj, const io::RunSummary& summary) {
  if (!cfg.output) return;
  std::ofstream traj_out(*cfg.output);
  if (!traj_out) throw std::runtime_error("cannot write " + *cfg.output);
  if (cfg.output_format == "json") {
    traj_out << io::trajectory_to_json(traj).dump() << '\n';
  } else {
    io::write_trajectory_csv(traj_out, traj.records);
  }
  const std::string path = summary_path_for(*cfg.output);
  std::ofstream sum_out(path);
  if (!sum_out) throw std::runtime_error("cannot write " + path);
  sum_out << io::summary_to_json(summary).dump(2) << '\n';
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError("cannot parse " + path + ": " + e.what());
  }
}

Trajectory read_trajectory(const std::string& path) {
  if (std::filesystem::path(path).extension() == ".json") {
    try {
      return io::trajectory_from_json(read_json_file(path));
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("malformed trajectory " + path + ": " + e.what());
    }
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  Trajectory t;
  try {
    t.records = io::read_trajectory_csv(in);
  } catch (const std::invalid_argument& e) {
    throw UsageError("malformed trajectory " + path + ": " + e.what());
  }
  return t;
}

}  // namespace

std::string summary_path_for(const std::string& trajectory_path) {
  std::filesystem::path p(trajectory_path);
  p.replace_extension(".summary.json");
  return p.string();
}

int cmd_run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  NamedObjective named;
  OptimizerSpec spec;
  Point x0;
  try {
    named = objective_by_name(cfg.function);
    spec = make_spec(cfg);
    x0 = io::parse_point(cfg.x0);
    if (x0.size() != named.objective.dim) {
      throw UsageError("x0 has " + std::to_string(x0.size()) + " coordinates, " + cfg.function +
                       " needs " + std::to_string(named.objective.dim));
    }
    if (cfg.max_iters < 1) throw UsageError("max-iters must be >= 1");
    if (!(cfg.grad_tol >= 0.0)) throw UsageError("grad-tol must be >= 0");
    if (cfg.thin < 1) throw UsageError("thin must be >= 1");
    if (cfg.output_format != "csv" && cfg.output_format != "json") {
      throw UsageError("format must be csv or json");
    }
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  io::RunSummary summary;
  summary.function = cfg.function;
  summary.optimizer = optimizer_name(spec);
  summary.alpha = cfg.alpha;
  summary.beta = cfg.beta;
  summary.delta0 = cfg.delta0;
  summary.cap = std::holds_alternative<UnboundedGD>(spec) ? cfg.cap : "none";
  summary.x0 = x0;
  summary.max_iters = cfg.max_iters;
  summary.grad_tol = cfg.grad_tol;
  summary.thin = cfg.thin;
  summary.seed = cfg.seed;

  const StoppingRule stop{cfg.max_iters, cfg.grad_tol};
  const Recording recording{cfg.thin, 1000, 1000};
  Trajectory traj;
  int code = kSuccess;
  try {
    traj = run(named.objective, spec, x0, stop, recording);
    summary.termination = to_string(traj.termination);
  } catch (const RunAborted& e) {
    traj = e.partial();
    summary.termination = to_string(e.reason());
    summary.error = e.what();
    code = kNumericalFailure;
  }
  summary.steps = traj.steps;
  summary.final_point = traj.final_point;
  if (!traj.records.empty()) summary.final_delta = traj.records.back().delta;
  summary.max_delta = traj.max_delta;
  summary.growth_limit_hits = traj.growth_limit_hits;

  try {
    write_artifacts(cfg, traj, summary);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  out << io::summary_to_json(summary).dump(2) << '\n';
  if (summary.error) err << "numerical failure: " << *summary.error << '\n';
  return code;
}

int cmd_audit(const AuditConfig& cfg, std::ostream& out, std::ostream& err) {
  Trajectory traj;
  io::RunSummary summary;
  NamedObjective named;
  try {
    traj = read_trajectory(cfg.trajectory);
    const std::string sum_path = cfg.summary.value_or(summary_path_for(cfg.trajectory));
    try {
      summary = io::summary_from_json(read_json_file(sum_path));
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("malformed summary " + sum_path + ": " + e.what());
    }
    named = objective_by_name(summary.function);
    if (traj.records.empty()) throw UsageError("trajectory has no records");
    if (!(cfg.tail_fraction > 0.0 && cfg.tail_fraction <= 1.0)) {
      throw UsageError("tail-fraction must lie in (0, 1]");
    }
    if (!(cfg.epsilon >= 0.0)) throw UsageError("epsilon must be >= 0");
    if (!(summary.alpha > 0.0 && summary.alpha < 1.0)) {
      throw UsageError("summary alpha must lie in (0, 1)");
    }
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  nlohmann::json report;
  Point limit = summary.final_point;
  bool snapped = false;
  if (limit.allFinite()) {
    for (const auto& known : named.known_critical_points) {
      if ((known.point - limit).norm() <= cfg.snap_radius) {
        limit = known.point;
        snapped = true;
        break;
      }
    }
  }
  report["limit_point"] = point_json(limit);
  report["snapped_to_known_critical_point"] = snapped;

  std::optional<BoundReport> bound;
  if (limit.allFinite()) {
    const CriticalPointClass cls = classify_critical_point(named.objective, limit, cfg.critical_tol);
    report["is_critical"] = cls.is_critical;
    report["non_degenerate"] = cls.non_degenerate;
    if (cls.non_degenerate) {
      bound = theorem1_bound(cls.hessian, summary.alpha, cfg.epsilon);
      report["hessian_norm"] = bound->hessian_norm;
      report["inverse_norm"] = *bound->inverse_norm;
      report["delta_bound"] = *bound->delta_bound;
      report["delta_bound_zero_epsilon"] = *bound->delta_bound_zero_epsilon;
      std::mt19937_64 rng(summary.seed);
      const TaylorResidual taylor =
          taylor_residual_check(named.objective, limit, cls.hessian, 1e-3, 100, rng);
      report["taylor_value_ratio"] = taylor.max_value_residual_ratio;
      report["taylor_grad_ratio"] = taylor.max_grad_residual_ratio;
    }
  } else {
    report["is_critical"] = false;
    report["non_degenerate"] = false;
  }

  const AuditReport audit = audit_trajectory(traj, summary.alpha, bound, cfg.tail_fraction);
  report["epsilon"] = cfg.epsilon;
  report["tail_fraction"] = cfg.tail_fraction;
  report["armijo_ok"] = audit.armijo_ok;
  report["monotone_ok"] = audit.monotone_ok;
  report["tail_delta_max"] = audit.tail_delta_max;
  report["bound_satisfied"] =
      audit.bound_satisfied ? nlohmann::json(*audit.bound_satisfied) : nlohmann::json(nullptr);
  report["violating_indices"] = audit.violating_indices;

  const bool pass = audit.armijo_ok && audit.monotone_ok && audit.bound_satisfied.value_or(true);
  report["pass"] = pass;

  if (cfg.output) {
    std::ofstream file(*cfg.output);
    if (!file) {
      err << "error: cannot write " << *cfg.output << '\n';
      return kUsageError;
    }
    file << report.dump(2) << '\n';
  }
  out << report.dump(2) << '\n';
  return pass ? kSuccess : kAuditFailure;
}

int cmd_units(std::ostream& out) {
  out << std::left << std::setw(22) << "rule" << std::setw(14) << "increment"
      << "verdict\n";
  for (const units::Rule r : units::kAllRules) {
    const units::RuleVerdict v = units::check_rule(r);
    out << std::left << std::setw(22) << v.rule_name << std::setw(14)
        << units::to_string(v.increment_dimension) << (v.correct ? "correct" : "mismatch") << '\n';
  }
  const units::ArmijoConsistency ac = units::armijo_consistency_check();
  out << "armijo delta unit: " << units::to_string(ac.delta_dim)
      << (ac.alpha_unitless_required ? " (alpha unitless)" : "") << '\n';
  return kSuccess;
}

}  // namespace armijo::cli
