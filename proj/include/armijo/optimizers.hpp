#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <variant>

#include "armijo/core.hpp"
#include "armijo/linesearch.hpp"

namespace armijo {

struct StoppingRule {
  long long max_iters = 1'000'000;
  double grad_tol = 1e-10;
};

/// Record every `thin`-th step; the first and last `keep_head` / `keep_tail`
/// steps are always kept.
struct Recording {
  long long thin = 1;
  long long keep_head = 1000;
  long long keep_tail = 1000;
};

/// delta_n = delta0 / (n + 1).
struct DiminishingSchedule {
  enum class Kind { Harmonic };
  Kind kind = Kind::Harmonic;
  double delta0 = 1.0;
};

double delta_schedule_value(const DiminishingSchedule& s, long long n);

struct BacktrackingGD {
  LineSearchConfig linesearch;
};

/// Two-way search bounded by a cap function.
struct UnboundedGD {
  LineSearchConfig linesearch;  // linesearch.cap must be present
};

/// Two-way search with no cap; growth halts only on Armijo or kMaxGrows.
struct UncappedTwoWayGD {
  LineSearchConfig linesearch;  // linesearch.cap is ignored
};

struct StandardGD {
  double fixed_delta = 0.01;
};

struct DiminishingGD {
  DiminishingSchedule schedule;
};

using OptimizerSpec =
    std::variant<BacktrackingGD, UnboundedGD, UncappedTwoWayGD, StandardGD, DiminishingGD>;

std::string optimizer_name(const OptimizerSpec& spec);
bool is_armijo_based(const OptimizerSpec& spec);

/// Thrown when a run cannot continue; carries the trajectory up to the failure.
class RunAborted : public std::runtime_error {
 public:
  enum class Reason { LineSearchStalled, Divergence };

  RunAborted(Reason reason, const std::string& what, Trajectory partial)
      : std::runtime_error(what), reason_(reason), partial_(std::move(partial)) {}

  Reason reason() const { return reason_; }
  const Trajectory& partial() const { return partial_; }

 private:
  Reason reason_;
  Trajectory partial_;
};

std::string to_string(RunAborted::Reason r);

/// Called with every step taken, including steps thinned out of the trajectory.
using StepObserver = std::function<void(const StepRecord&)>;

/// Iterates x_{n+1} = x_n - delta_n grad f(x_n) until ||grad f(x_n)|| <= grad_tol
/// (tested before stepping) or max_iters steps have been taken.
Trajectory run(const Objective& obj, const OptimizerSpec& spec, const Point& x0,
               const StoppingRule& stop = {}, const Recording& recording = {},
               const StepObserver& observer = {});

struct ProductCheck {
  double max_tail_product = 0.0;
  bool vanishes = false;
};

/// delta_n ||grad f(x_n)|| over the last decile of records.
ProductCheck unbounded_product_check(const Trajectory& t, double tol = 1e-6);

}  // namespace armijo
