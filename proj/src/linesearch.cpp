#include "armijo/linesearch.hpp"

#include <cmath>
#include <sstream>

namespace armijo {
namespace {

std::string stall_message(const Point& x, double grad_norm) {
  std::ostringstream os;
  os.precision(17);
  os << "line search stalled at x = (";
  for (Eigen::Index i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x(i);
  os << ") with |grad| = " << grad_norm;
  return os.str();
}

void require_nonzero_gradient(const ArmijoContext& ctx) {
  if (!(ctx.grad_sq_norm > 0.0)) {
    throw std::invalid_argument("line search requires a nonzero gradient");
  }
}

// Shrink phase shared by backtrack and the failing branch of two_way_search.
// `trials` already counts the failed evaluation at delta0.
StepSize shrink_from(const ArmijoContext& ctx, const LineSearchConfig& cfg, int trials) {
  double delta = cfg.delta0;
  for (int i = 0; i < kMaxShrinks; ++i) {
    delta *= cfg.beta;
    const ArmijoCheck check = armijo_holds(ctx, delta, cfg.alpha);
    ++trials;
    if (check.holds) {
      StepSize out;
      out.delta = delta;
      out.trials = trials;
      out.accepted = check;
      return out;
    }
  }
  throw LineSearchStalled(ctx.x, ctx.grad_norm());
}

}  // namespace

double cap_value(const CapFunction& cap, double t) {
  if (!(t > 0.0)) throw std::invalid_argument("cap_value requires t > 0");
  switch (cap.kind) {
    case CapFunction::Kind::None:
      return std::numeric_limits<double>::infinity();
    case CapFunction::Kind::PaperSqrt:
      return t > 1.0 ? cap.delta0 : cap.delta0 / std::sqrt(t);
  }
  return std::numeric_limits<double>::infinity();
}

void LineSearchConfig::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  if (!(beta > 0.0 && beta < 1.0)) throw std::invalid_argument("beta must lie in (0, 1)");
  if (!(delta0 > 0.0) || !std::isfinite(delta0)) {
    throw std::invalid_argument("delta0 must be positive");
  }
  if (cap.present() && !(cap.delta0 > 0.0)) {
    throw std::invalid_argument("cap delta0 must be positive");
  }
}

double ArmijoContext::grad_norm() const { return std::sqrt(grad_sq_norm); }

ArmijoContext make_armijo_context(const Objective& obj, const Point& x) {
  ArmijoContext ctx;
  ctx.objective = &obj;
  ctx.x = x;
  ctx.f_x = obj.value(x);
  ctx.grad = obj.gradient(x);
  ctx.grad_sq_norm = ctx.grad.squaredNorm();
  return ctx;
}

LineSearchStalled::LineSearchStalled(Point x, double grad_norm)
    : std::runtime_error(stall_message(x, grad_norm)), x_(std::move(x)), grad_norm_(grad_norm) {}

ArmijoCheck armijo_holds(const ArmijoContext& ctx, double delta, double alpha) {
  ArmijoCheck check;
  const Point trial = ctx.x - delta * ctx.grad;
  const double f_trial = ctx.objective->value(trial);
  check.lhs = f_trial - ctx.f_x;
  check.rhs = -alpha * delta * ctx.grad_sq_norm;
  if (!std::isfinite(check.lhs)) {
    check.non_finite = true;
    check.holds = false;
    return check;
  }
  check.holds = check.lhs <= check.rhs;
  return check;
}

ArmijoCheck armijo_holds(const Objective& obj, const Point& x, double delta, double alpha) {
  return armijo_holds(make_armijo_context(obj, x), delta, alpha);
}

StepSize backtrack(const ArmijoContext& ctx, const LineSearchConfig& cfg) {
  cfg.validate();
  require_nonzero_gradient(ctx);
  const ArmijoCheck first = armijo_holds(ctx, cfg.delta0, cfg.alpha);
  if (first.holds) {
    StepSize out;
    out.delta = cfg.delta0;
    out.trials = 1;
    out.accepted = first;
    return out;
  }
  return shrink_from(ctx, cfg, 1);
}

StepSize backtrack(const Objective& obj, const Point& x, const LineSearchConfig& cfg) {
  return backtrack(make_armijo_context(obj, x), cfg);
}

StepSize two_way_search(const ArmijoContext& ctx, const LineSearchConfig& cfg) {
  cfg.validate();
  require_nonzero_gradient(ctx);
  const ArmijoCheck first = armijo_holds(ctx, cfg.delta0, cfg.alpha);
  if (!first.holds) return shrink_from(ctx, cfg, 1);

  StepSize out;
  out.delta = cfg.delta0;
  out.trials = 1;
  out.accepted = first;

  const double ceiling = cap_value(cfg.cap, ctx.grad_norm());
  for (int grows = 0;; ++grows) {
    if (!cfg.cap.present() && grows == kMaxGrows) {
      out.growth_limit_hit = true;
      break;
    }
    const double candidate = out.delta / cfg.beta;
    if (candidate > ceiling) break;
    const ArmijoCheck check = armijo_holds(ctx, candidate, cfg.alpha);
    ++out.trials;
    if (!check.holds) break;
    out.delta = candidate;
    out.accepted = check;
    out.grew = true;
  }
  return out;
}

StepSize two_way_search(const Objective& obj, const Point& x, const LineSearchConfig& cfg) {
  return two_way_search(make_armijo_context(obj, x), cfg);
}

}  // namespace armijo
