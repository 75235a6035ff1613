#pragma once

#include <optional>
#include <random>
#include <vector>

#include "armijo/core.hpp"
#include "armijo/linalg.hpp"

namespace armijo {

inline constexpr double kDefaultCondTol = 1e-12;
inline constexpr double kDefaultBoundEpsilon = 1e-3;
inline constexpr double kDefaultTailFraction = 0.2;

/// Learning-rate ceiling for Armijo sequences converging to a non-degenerate
/// critical point:
///   alpha delta_n <= 1/2 (||H|| + eps) (||H^-1|| + eps)^2   for n large.
struct BoundReport {
  double hessian_norm = 0.0;
  std::optional<double> inverse_norm;  // absent when degenerate
  double epsilon = 0.0;
  double alpha = 0.0;
  std::optional<double> delta_bound;                // absent when degenerate
  std::optional<double> delta_bound_zero_epsilon;   // same formula at eps = 0
  bool degenerate = false;
};

BoundReport theorem1_bound(const SymmetricMatrix<double>& h, double alpha,
                           double epsilon = kDefaultBoundEpsilon,
                           double cond_tol = kDefaultCondTol);

struct CriticalPointClass {
  bool is_critical = false;
  bool non_degenerate = false;
  SymmetricMatrix<double> hessian;
};

/// Uses the analytic Hessian when the objective has one, else finite differences.
CriticalPointClass classify_critical_point(const Objective& obj, const Point& x,
                                           double grad_tol, double cond_tol = kDefaultCondTol);

struct AuditReport {
  bool armijo_ok = false;
  bool monotone_ok = false;
  double tail_delta_max = 0.0;
  std::optional<bool> bound_satisfied;
  std::vector<long long> violating_indices;  // step indices n, ascending
};

/// Checks Armijo and monotonicity on every record and the delta bound over the
/// final tail_fraction of records. Throws std::invalid_argument on an empty
/// trajectory or tail_fraction outside (0, 1].
AuditReport audit_trajectory(const Trajectory& t, double alpha,
                             const std::optional<BoundReport>& bound,
                             double tail_fraction = kDefaultTailFraction);

struct TaylorResidual {
  double max_value_residual_ratio = 0.0;
  double max_grad_residual_ratio = 0.0;
};

/// Samples points uniformly in the ball B(x_inf, radius) and reports
///   max [f(x) - f(x_inf)] / [1/2 ||H|| ||x - x_inf||^2]
///   max ||x - x_inf|| / [||H^-1|| ||grad f(x)||]
/// Both approach <= 1 as radius -> 0. Throws std::invalid_argument when H is degenerate.
TaylorResidual taylor_residual_check(const Objective& obj, const Point& x_inf,
                                     const SymmetricMatrix<double>& h, double radius, int samples,
                                     std::mt19937_64& rng);

}  // namespace armijo
