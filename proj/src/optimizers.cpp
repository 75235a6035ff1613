#include "armijo/optimizers.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

namespace armijo {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Keeps head, every thin-th step, and a sliding tail window.
class Recorder {
 public:
  explicit Recorder(const Recording& rec) : rec_(rec) {
    if (rec_.thin < 1) throw std::invalid_argument("recording thin must be >= 1");
  }

  void add(StepRecord&& r) {
    if (rec_.thin == 1) {
      kept_.push_back(std::move(r));
      return;
    }
    if (r.n < rec_.keep_head || r.n % rec_.thin == 0) kept_.push_back(r);
    if (rec_.keep_tail > 0) {
      tail_.push_back(std::move(r));
      if (static_cast<long long>(tail_.size()) > rec_.keep_tail) tail_.pop_front();
    }
  }

  std::vector<StepRecord> finish() {
    const long long last_kept = kept_.empty() ? -1 : kept_.back().n;
    for (auto& r : tail_) {
      if (r.n > last_kept) kept_.push_back(std::move(r));
    }
    tail_.clear();
    return std::move(kept_);
  }

 private:
  Recording rec_;
  std::vector<StepRecord> kept_;
  std::deque<StepRecord> tail_;
};

std::string point_text(const Point& x) {
  std::ostringstream os;
  os.precision(17);
  os << "(";
  for (Eigen::Index i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x(i);
  os << ")";
  return os.str();
}

}  // namespace

double delta_schedule_value(const DiminishingSchedule& s, long long n) {
  if (n < 0) throw std::invalid_argument("schedule index must be >= 0");
  return s.delta0 / static_cast<double>(n + 1);
}

std::string optimizer_name(const OptimizerSpec& spec) {
  return std::visit(overloaded{
                        [](const BacktrackingGD&) { return std::string("backtracking"); },
                        [](const UnboundedGD&) { return std::string("unbounded"); },
                        [](const UncappedTwoWayGD&) { return std::string("uncapped"); },
                        [](const StandardGD&) { return std::string("standard"); },
                        [](const DiminishingGD&) { return std::string("diminishing"); },
                    },
                    spec);
}

bool is_armijo_based(const OptimizerSpec& spec) {
  return std::holds_alternative<BacktrackingGD>(spec) ||
         std::holds_alternative<UnboundedGD>(spec) ||
         std::holds_alternative<UncappedTwoWayGD>(spec);
}

std::string to_string(RunAborted::Reason r) {
  switch (r) {
    case RunAborted::Reason::LineSearchStalled:
      return "LineSearchStalled";
    case RunAborted::Reason::Divergence:
      return "Divergence";
  }
  return "unknown";
}

Trajectory run(const Objective& obj, const OptimizerSpec& spec, const Point& x0,
               const StoppingRule& stop, const Recording& recording,
               const StepObserver& observer) {
  if (x0.size() != obj.dim) throw std::invalid_argument("x0 dimension does not match objective");
  if (!x0.allFinite()) throw std::invalid_argument("x0 must be finite");
  if (stop.max_iters < 1) throw std::invalid_argument("max_iters must be >= 1");
  if (!(stop.grad_tol >= 0.0)) throw std::invalid_argument("grad_tol must be >= 0");

  std::visit(overloaded{
                 [](const BacktrackingGD& s) { s.linesearch.validate(); },
                 [](const UnboundedGD& s) {
                   s.linesearch.validate();
                   if (!s.linesearch.cap.present()) {
                     throw std::invalid_argument("UnboundedGD requires a cap function");
                   }
                 },
                 [](const UncappedTwoWayGD& s) { s.linesearch.validate(); },
                 [](const StandardGD& s) {
                   if (!(s.fixed_delta > 0.0)) throw std::invalid_argument("fixed_delta must be > 0");
                 },
                 [](const DiminishingGD& s) {
                   if (!(s.schedule.delta0 > 0.0)) {
                     throw std::invalid_argument("schedule delta0 must be > 0");
                   }
                 },
             },
             spec);

  Recorder recorder(recording);
  Trajectory traj;
  Point x = x0;

  auto abort = [&](RunAborted::Reason reason, const std::string& what) {
    traj.records = recorder.finish();
    traj.final_point = x;
    throw RunAborted(reason, what, std::move(traj));
  };

  for (long long n = 0;; ++n) {
    ArmijoContext ctx = make_armijo_context(obj, x);
    if (!std::isfinite(ctx.f_x) || !ctx.grad.allFinite()) {
      abort(RunAborted::Reason::Divergence, "divergence: non-finite value or gradient at " + point_text(x));
    }
    const double grad_norm = ctx.grad_norm();
    if (grad_norm <= stop.grad_tol) {
      traj.termination = Termination::GradientTolReached;
      break;
    }
    if (n == stop.max_iters) {
      traj.termination = Termination::MaxItersReached;
      break;
    }

    StepRecord rec;
    rec.n = n;
    rec.f_value = ctx.f_x;
    rec.grad_norm = grad_norm;

    try {
      std::visit(overloaded{
                     [&](const BacktrackingGD& s) {
                       const StepSize step = backtrack(ctx, s.linesearch);
                       rec.delta = step.delta;
                       rec.armijo_lhs = step.accepted.lhs;
                       rec.armijo_rhs = step.accepted.rhs;
                     },
                     [&](const UnboundedGD& s) {
                       const StepSize step = two_way_search(ctx, s.linesearch);
                       rec.delta = step.delta;
                       rec.armijo_lhs = step.accepted.lhs;
                       rec.armijo_rhs = step.accepted.rhs;
                     },
                     [&](const UncappedTwoWayGD& s) {
                       LineSearchConfig cfg = s.linesearch;
                       cfg.cap = CapFunction::none();
                       const StepSize step = two_way_search(ctx, cfg);
                       rec.delta = step.delta;
                       rec.armijo_lhs = step.accepted.lhs;
                       rec.armijo_rhs = step.accepted.rhs;
                       if (step.growth_limit_hit) ++traj.growth_limit_hits;
                     },
                     [&](const StandardGD& s) { rec.delta = s.fixed_delta; },
                     [&](const DiminishingGD& s) { rec.delta = delta_schedule_value(s.schedule, n); },
                 },
                 spec);
    } catch (const LineSearchStalled& e) {
      abort(RunAborted::Reason::LineSearchStalled, e.what());
    }

    Point next = x - rec.delta * ctx.grad;
    rec.x = std::move(x);
    rec.grad = std::move(ctx.grad);
    x = std::move(next);
    traj.max_delta = std::max(traj.max_delta, rec.delta);
    if (observer) observer(rec);
    recorder.add(std::move(rec));
    ++traj.steps;

    if (!x.allFinite()) {
      abort(RunAborted::Reason::Divergence, "divergence: iterate became non-finite after step " +
                                                std::to_string(n));
    }
  }

  traj.records = recorder.finish();
  traj.final_point = x;
  return traj;
}

ProductCheck unbounded_product_check(const Trajectory& t, double tol) {
  if (t.records.empty()) throw std::invalid_argument("unbounded_product_check: empty trajectory");
  const std::size_t count = t.records.size();
  const std::size_t tail = std::max<std::size_t>(1, (count + 9) / 10);
  ProductCheck out;
  for (std::size_t i = count - tail; i < count; ++i) {
    const auto& r = t.records[i];
    out.max_tail_product = std::max(out.max_tail_product, r.delta * r.grad_norm);
  }
  out.vanishes = out.max_tail_product < tol;
  return out;
}

}  // namespace armijo
