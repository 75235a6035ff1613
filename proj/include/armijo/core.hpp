#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "armijo/linalg.hpp"

namespace armijo {

/// An iterate in R^k.
using Point = Eigen::VectorXd;

inline bool is_finite(const Point& x) { return x.allFinite(); }

/// A scalar function on R^k with a gradient oracle and an optional Hessian
/// oracle. Value and gradient must be total on R^k.
struct Objective {
  using ValueFn = std::function<double(const Point&)>;
  using GradientFn = std::function<Point(const Point&)>;
  using HessianFn = std::function<SymmetricMatrix<double>(const Point&)>;

  Eigen::Index dim = 0;
  std::string label;
  ValueFn value;
  GradientFn gradient;
  HessianFn hessian;  // empty when no analytic Hessian exists

  bool has_hessian() const { return static_cast<bool>(hessian); }
};

/// One iteration of a run: x_{n+1} = x_n - delta * grad.
struct StepRecord {
  long long n = 0;
  Point x;
  double f_value = 0.0;
  Point grad;  // empty when read back from a CSV artifact
  double grad_norm = 0.0;
  double delta = 0.0;
  // Present only for Armijo-based optimizers.
  std::optional<double> armijo_lhs;
  std::optional<double> armijo_rhs;
};

enum class Termination { GradientTolReached, MaxItersReached };

std::string to_string(Termination t);
Termination termination_from_string(const std::string& s);

struct Trajectory {
  std::vector<StepRecord> records;
  Termination termination = Termination::MaxItersReached;
  Point final_point;
  /// Number of steps taken. Differs from records.size() when recording is thinned.
  long long steps = 0;
  /// Largest delta_n over all steps, recorded or not.
  double max_delta = 0.0;
  /// Times the uncapped two-way search stopped at its growth limit.
  long long growth_limit_hits = 0;
};

/// A probe evaluated to NaN or Inf.
class ProbeError : public std::runtime_error {
 public:
  ProbeError(const std::string& what, Point probe)
      : std::runtime_error(what), probe_(std::move(probe)) {}
  const Point& probe() const { return probe_; }

 private:
  Point probe_;
};

inline constexpr double kDefaultGradientStep = 1e-5;
inline constexpr double kDefaultHessianStep = 1e-4;

/// Central differences (f(x + h e_i) - f(x - h e_i)) / 2h per coordinate.
Point finite_diff_gradient(const Objective& obj, const Point& x,
                           double step = kDefaultGradientStep);

/// Central differences of the analytic gradient, symmetrized.
SymmetricMatrix<double> finite_diff_hessian(const Objective& obj, const Point& x,
                                            double step = kDefaultHessianStep);

struct GradientCheck {
  double max_abs_err = 0.0;
  bool pass = false;
};

GradientCheck check_gradient(const Objective& obj, const Point& x,
                             double step = kDefaultGradientStep, double tol = 1e-3);

}  // namespace armijo
