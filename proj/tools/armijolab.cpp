#include <iostream>

#include "CLI11.hpp"

#include "armijo/cli.hpp"

int main(int argc, char** argv) {
  using namespace armijo::cli;

  CLI::App app{"Armijo line-search laboratory"};
  app.require_subcommand(1);

  RunConfig run_cfg;
  std::string run_output;
  auto* run = app.add_subcommand("run", "Run an optimizer and record its trajectory");
  run->add_option("--function", run_cfg.function, "example1 | example2 | quadratic:a11,a12,a22")
      ->required();
  run->add_option("--optimizer", run_cfg.optimizer,
                  "backtracking | unbounded | uncapped | standard | diminishing");
  run->add_option("--alpha", run_cfg.alpha, "Armijo constant in (0, 1)");
  run->add_option("--beta", run_cfg.beta, "Grid ratio in (0, 1)");
  run->add_option("--delta0", run_cfg.delta0, "Initial learning rate");
  run->add_option("--x0", run_cfg.x0, "Starting point, comma separated")->required();
  run->add_option("--max-iters", run_cfg.max_iters, "Iteration budget");
  run->add_option("--grad-tol", run_cfg.grad_tol, "Stop when |grad| <= this");
  run->add_option("--cap", run_cfg.cap, "paper-sqrt | none");
  run->add_option("--format", run_cfg.output_format, "Trajectory format: csv | json");
  run->add_option("--thin", run_cfg.thin, "Record every m-th step (first/last 1000 always kept)");
  run->add_option("--seed", run_cfg.seed, "Seed for audit sampling");
  run->add_option("--output", run_output, "Trajectory path; summary written beside it");

  AuditConfig audit_cfg;
  std::string audit_summary;
  std::string audit_output;
  auto* audit = app.add_subcommand("audit", "Audit a trajectory against the learning-rate bound");
  audit->add_option("trajectory", audit_cfg.trajectory, "Trajectory artifact (.csv or .json)")
      ->required();
  audit->add_option("--summary", audit_summary, "Summary artifact (default: beside trajectory)");
  audit->add_option("--epsilon", audit_cfg.epsilon, "Slack in the learning-rate bound");
  audit->add_option("--tail-fraction", audit_cfg.tail_fraction, "Fraction of final steps audited");
  audit->add_option("--critical-tol", audit_cfg.critical_tol, "Gradient tolerance for criticality");
  audit->add_option("--snap-radius", audit_cfg.snap_radius,
                    "Snap the final point to a known critical point within this distance");
  audit->add_option("--output", audit_output, "Write the audit report here as well");

  app.add_subcommand("units", "Print the unit-correctness table of update rules");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsageError;
  }

  if (run->parsed()) {
    if (!run_output.empty()) run_cfg.output = run_output;
    return cmd_run(run_cfg, std::cout, std::cerr);
  }
  if (audit->parsed()) {
    if (!audit_summary.empty()) audit_cfg.summary = audit_summary;
    if (!audit_output.empty()) audit_cfg.output = audit_output;
    return cmd_audit(audit_cfg, std::cout, std::cerr);
  }
  return cmd_units(std::cout);
}
