#include "armijo/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace armijo {
namespace {

double bound_formula(double alpha, double h_norm, double inv_norm, double eps) {
  const double inv = inv_norm + eps;
  return (1.0 / alpha) * 0.5 * (h_norm + eps) * inv * inv;
}

}  // namespace

BoundReport theorem1_bound(const SymmetricMatrix<double>& h, double alpha, double epsilon,
                           double cond_tol) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("alpha must lie in (0, 1)");
  if (!(epsilon >= 0.0)) throw std::invalid_argument("epsilon must be >= 0");
  BoundReport report;
  report.alpha = alpha;
  report.epsilon = epsilon;
  report.hessian_norm = operator_norm(h);
  const auto inverse = invert(h, cond_tol);
  if (!inverse) {
    report.degenerate = true;
    return report;
  }
  const double inv_norm = operator_norm(*inverse);
  report.inverse_norm = inv_norm;
  report.delta_bound = bound_formula(alpha, report.hessian_norm, inv_norm, epsilon);
  report.delta_bound_zero_epsilon = bound_formula(alpha, report.hessian_norm, inv_norm, 0.0);
  return report;
}

CriticalPointClass classify_critical_point(const Objective& obj, const Point& x, double grad_tol,
                                           double cond_tol) {
  CriticalPointClass out;
  out.is_critical = obj.gradient(x).norm() <= grad_tol;
  out.hessian = obj.has_hessian() ? obj.hessian(x) : finite_diff_hessian(obj, x);
  out.non_degenerate = out.is_critical && invert(out.hessian, cond_tol).has_value();
  return out;
}

AuditReport audit_trajectory(const Trajectory& t, double alpha,
                             const std::optional<BoundReport>& bound, double tail_fraction) {
  if (t.records.empty()) throw std::invalid_argument("audit_trajectory: empty trajectory");
  if (!(tail_fraction > 0.0 && tail_fraction <= 1.0)) {
    throw std::invalid_argument("tail_fraction must lie in (0, 1]");
  }
  AuditReport report;
  report.armijo_ok = true;
  report.monotone_ok = true;
  std::vector<long long> bad;

  const auto& recs = t.records;
  for (std::size_t i = 0; i < recs.size(); ++i) {
    const StepRecord& r = recs[i];
    bool ok = r.armijo_lhs.has_value() && r.armijo_rhs.has_value() && *r.armijo_lhs <= *r.armijo_rhs;
    if (ok) {
      // The stored right-hand side must be the Armijo term for this alpha.
      const double expected = -alpha * r.delta * r.grad_norm * r.grad_norm;
      ok = std::abs(*r.armijo_rhs - expected) <= 1e-9 * std::max(std::abs(expected), 1e-300);
    }
    if (!ok) {
      report.armijo_ok = false;
      bad.push_back(r.n);
    }
    if (i > 0 && !(r.f_value <= recs[i - 1].f_value)) {
      report.monotone_ok = false;
      bad.push_back(r.n);
    }
  }

  const std::size_t tail = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(tail_fraction * static_cast<double>(recs.size()))));
  const std::size_t tail_begin = recs.size() - std::min(tail, recs.size());
  for (std::size_t i = tail_begin; i < recs.size(); ++i) {
    report.tail_delta_max = std::max(report.tail_delta_max, recs[i].delta);
  }

  if (bound && !bound->degenerate && bound->delta_bound) {
    report.bound_satisfied = report.tail_delta_max <= *bound->delta_bound;
    for (std::size_t i = tail_begin; i < recs.size(); ++i) {
      if (recs[i].delta > *bound->delta_bound) bad.push_back(recs[i].n);
    }
  }

  std::sort(bad.begin(), bad.end());
  bad.erase(std::unique(bad.begin(), bad.end()), bad.end());
  report.violating_indices = std::move(bad);
  return report;
}

TaylorResidual taylor_residual_check(const Objective& obj, const Point& x_inf,
                                     const SymmetricMatrix<double>& h, double radius, int samples,
                                     std::mt19937_64& rng) {
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be > 0");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  const auto inverse = invert(h);
  if (!inverse) throw std::invalid_argument("taylor_residual_check: degenerate Hessian");
  const double h_norm = operator_norm(h);
  const double inv_norm = operator_norm(*inverse);
  const double f_inf = obj.value(x_inf);
  const Eigen::Index k = x_inf.size();

  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  TaylorResidual out;
  out.max_value_residual_ratio = -std::numeric_limits<double>::infinity();
  out.max_grad_residual_ratio = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    Point dir(k);
    double norm = 0.0;
    do {
      for (Eigen::Index i = 0; i < k; ++i) dir(i) = normal(rng);
      norm = dir.norm();
    } while (norm == 0.0);
    double u = 0.0;
    do {
      u = unit(rng);
    } while (u == 0.0);
    const double r = radius * std::pow(u, 1.0 / static_cast<double>(k));
    const Point x = x_inf + (r / norm) * dir;
    const double dist = (x - x_inf).norm();
    const double value_ratio = (obj.value(x) - f_inf) / (0.5 * h_norm * dist * dist);
    const double grad_ratio = dist / (inv_norm * obj.gradient(x).norm());
    out.max_value_residual_ratio = std::max(out.max_value_residual_ratio, value_ratio);
    out.max_grad_residual_ratio = std::max(out.max_grad_residual_ratio, grad_ratio);
  }
  return out;
}

}  // namespace armijo
