#pragma once

#include <string>
#include <vector>

#include "armijo/core.hpp"

namespace armijo {

enum class CriticalKind { NonDegenerate, Degenerate };

struct KnownCriticalPoint {
  Point point;
  CriticalKind kind;
};

struct NamedObjective {
  Objective objective;
  std::vector<KnownCriticalPoint> known_critical_points;
};

/// f(x, y) = g(x) + g(y), g(t) = t^3 sin(1/t), extended by g(0) = 0 (the C^1
/// extension). No analytic Hessian: g is not C^2 at 0.
NamedObjective example1();

/// f(x, y) = x^4 + y^4, degenerate minimum at the origin.
NamedObjective example2();

/// f(x) = 1/2 x^T A x.
NamedObjective quadratic(const SymmetricMatrix<double>& a);

/// Resolves "example1", "example2" or "quadratic:<a11>,<a12>,<a22>".
/// Throws std::invalid_argument for unknown or malformed names.
NamedObjective objective_by_name(const std::string& name);

}  // namespace armijo
