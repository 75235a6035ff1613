#include "armijo/testfns.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace armijo {
namespace {

// Below this magnitude 1/t overflows; treat as the removable singularity.
constexpr double kSingularityGuard = 1e-300;

double oscillating_cube(double t) {
  if (std::abs(t) < kSingularityGuard) return 0.0;
  return std::pow(t, 3) * std::sin(1.0 / t);
}

double oscillating_cube_derivative(double t) {
  if (std::abs(t) < kSingularityGuard) return 0.0;
  const double inv = 1.0 / t;
  return 3.0 * std::pow(t, 2) * std::sin(inv) - t * std::cos(inv);
}

double parse_double(std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || !std::isfinite(v)) {
    throw std::invalid_argument("malformed number '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

NamedObjective example1() {
  NamedObjective out;
  out.objective.dim = 2;
  out.objective.label = "example1";
  out.objective.value = [](const Point& x) {
    return oscillating_cube(x(0)) + oscillating_cube(x(1));
  };
  out.objective.gradient = [](const Point& x) {
    Point g(2);
    g << oscillating_cube_derivative(x(0)), oscillating_cube_derivative(x(1));
    return g;
  };
  return out;
}

NamedObjective example2() {
  NamedObjective out;
  out.objective.dim = 2;
  out.objective.label = "example2";
  out.objective.value = [](const Point& x) {
    return std::pow(x(0), 4) + std::pow(x(1), 4);
  };
  out.objective.gradient = [](const Point& x) {
    Point g(2);
    g << 4.0 * std::pow(x(0), 3), 4.0 * std::pow(x(1), 3);
    return g;
  };
  out.objective.hessian = [](const Point& x) {
    Eigen::Matrix2d h = Eigen::Matrix2d::Zero();
    h(0, 0) = 12.0 * std::pow(x(0), 2);
    h(1, 1) = 12.0 * std::pow(x(1), 2);
    return SymmetricMatrix<double>(h);
  };
  out.known_critical_points.push_back({Point::Zero(2), CriticalKind::Degenerate});
  return out;
}

NamedObjective quadratic(const SymmetricMatrix<double>& a) {
  const Eigen::Index k = a.dim();
  if (k < 1) throw std::invalid_argument("quadratic: empty matrix");
  NamedObjective out;
  out.objective.dim = k;
  out.objective.label = "quadratic";
  const Eigen::MatrixXd m = a.matrix();
  out.objective.value = [m](const Point& x) { return 0.5 * x.dot(m * x); };
  out.objective.gradient = [m](const Point& x) -> Point { return m * x; };
  out.objective.hessian = [a](const Point&) { return a; };
  const bool invertible = invert(a).has_value();
  out.known_critical_points.push_back(
      {Point::Zero(k), invertible ? CriticalKind::NonDegenerate : CriticalKind::Degenerate});
  return out;
}

NamedObjective objective_by_name(const std::string& name) {
  if (name == "example1") return example1();
  if (name == "example2") return example2();
  const std::string prefix = "quadratic:";
  if (name.rfind(prefix, 0) == 0) {
    const std::string_view args = std::string_view(name).substr(prefix.size());
    std::vector<double> values;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = args.find(',', start);
      values.push_back(parse_double(args.substr(start, comma - start)));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (values.size() != 3) {
      throw std::invalid_argument("quadratic needs exactly three entries a11,a12,a22");
    }
    Eigen::Matrix2d a;
    a << values[0], values[1], values[1], values[2];
    NamedObjective out = quadratic(SymmetricMatrix<double>(a));
    out.objective.label = name;
    return out;
  }
  throw std::invalid_argument("unknown function '" + name + "'");
}

}  // namespace armijo
