#pragma once

#include <limits>
#include <stdexcept>
#include <string>

#include "armijo/core.hpp"

namespace armijo {

/// Ceiling h(t) on the learning rate during two-way growth, t = ||grad f(x)||.
struct CapFunction {
  enum class Kind { None, PaperSqrt };

  Kind kind = Kind::None;
  double delta0 = 1.0;

  /// delta0 for t > 1, delta0 / sqrt(t) for 0 < t <= 1.
  static CapFunction paper_sqrt(double delta0) { return {Kind::PaperSqrt, delta0}; }
  static CapFunction none() { return {Kind::None, 1.0}; }

  bool present() const { return kind != Kind::None; }
};

/// Throws std::invalid_argument for t <= 0. Kind::None never binds (+inf).
double cap_value(const CapFunction& cap, double t);

struct LineSearchConfig {
  double alpha = 0.5;
  double beta = 0.7;
  double delta0 = 1.0;
  CapFunction cap = CapFunction::none();

  /// Throws std::invalid_argument unless 0 < alpha < 1, 0 < beta < 1, delta0 > 0.
  void validate() const;
};

inline constexpr int kMaxShrinks = 200;
inline constexpr int kMaxGrows = 100;

/// Everything a line search needs at a fixed x, computed once per iterate.
struct ArmijoContext {
  const Objective* objective = nullptr;
  Point x;
  double f_x = 0.0;
  Point grad;
  double grad_sq_norm = 0.0;

  double grad_norm() const;
};

ArmijoContext make_armijo_context(const Objective& obj, const Point& x);

struct ArmijoCheck {
  bool holds = false;
  double lhs = 0.0;  // f(x - delta grad) - f(x)
  double rhs = 0.0;  // -alpha delta ||grad||^2
  bool non_finite = false;
};

ArmijoCheck armijo_holds(const ArmijoContext& ctx, double delta, double alpha);
ArmijoCheck armijo_holds(const Objective& obj, const Point& x, double delta, double alpha);

class LineSearchStalled : public std::runtime_error {
 public:
  LineSearchStalled(Point x, double grad_norm);
  const Point& x() const { return x_; }
  double grad_norm() const { return grad_norm_; }

 private:
  Point x_;
  double grad_norm_;
};

struct StepSize {
  double delta = 0.0;
  int trials = 0;  // Armijo evaluations performed
  bool grew = false;
  bool growth_limit_hit = false;
  ArmijoCheck accepted;  // the evaluation at the returned delta
};

/// Largest delta in {beta^n delta0} satisfying Armijo, by repeated delta *= beta.
StepSize backtrack(const ArmijoContext& ctx, const LineSearchConfig& cfg);
StepSize backtrack(const Objective& obj, const Point& x, const LineSearchConfig& cfg);

/// Shrinks like backtrack when Armijo fails at delta0; otherwise grows by
/// delta / beta while the cap (checked first) and Armijo both hold.
StepSize two_way_search(const ArmijoContext& ctx, const LineSearchConfig& cfg);
StepSize two_way_search(const Objective& obj, const Point& x, const LineSearchConfig& cfg);

}  // namespace armijo
