#include "armijo/core.hpp"

#include <cmath>
#include <sstream>

namespace armijo {
namespace {

std::string describe(const Point& x) {
  std::ostringstream os;
  os.precision(17);
  os << "(";
  for (Eigen::Index i = 0; i < x.size(); ++i) os << (i ? ", " : "") << x(i);
  os << ")";
  return os.str();
}

double probe_value(const Objective& obj, const Point& x) {
  const double v = obj.value(x);
  if (!std::isfinite(v)) {
    throw ProbeError("non-finite value of " + obj.label + " at " + describe(x), x);
  }
  return v;
}

Point probe_gradient(const Objective& obj, const Point& x) {
  Point g = obj.gradient(x);
  if (!g.allFinite()) {
    throw ProbeError("non-finite gradient of " + obj.label + " at " + describe(x), x);
  }
  return g;
}

void require_step(double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw std::invalid_argument("finite difference step must be positive");
  }
}

}  // namespace

std::string to_string(Termination t) {
  switch (t) {
    case Termination::GradientTolReached:
      return "GradientTolReached";
    case Termination::MaxItersReached:
      return "MaxItersReached";
  }
  return "unknown";
}

Termination termination_from_string(const std::string& s) {
  if (s == "GradientTolReached") return Termination::GradientTolReached;
  if (s == "MaxItersReached") return Termination::MaxItersReached;
  throw std::invalid_argument("unknown termination: " + s);
}

Point finite_diff_gradient(const Objective& obj, const Point& x, double step) {
  require_step(step);
  if (!x.allFinite()) throw ProbeError("non-finite base point " + describe(x), x);
  Point g(x.size());
  Point probe = x;
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    probe(i) = x(i) + step;
    const double up = probe_value(obj, probe);
    probe(i) = x(i) - step;
    const double down = probe_value(obj, probe);
    probe(i) = x(i);
    g(i) = (up - down) / (2.0 * step);
  }
  return g;
}

SymmetricMatrix<double> finite_diff_hessian(const Objective& obj, const Point& x, double step) {
  require_step(step);
  const Eigen::Index k = x.size();
  Eigen::MatrixXd h(k, k);
  Point probe = x;
  for (Eigen::Index j = 0; j < k; ++j) {
    probe(j) = x(j) + step;
    const Point up = probe_gradient(obj, probe);
    probe(j) = x(j) - step;
    const Point down = probe_gradient(obj, probe);
    probe(j) = x(j);
    h.col(j) = (up - down) / (2.0 * step);
  }
  return SymmetricMatrix<double>(h);
}

GradientCheck check_gradient(const Objective& obj, const Point& x, double step, double tol) {
  const Point analytic = obj.gradient(x);
  const Point numeric = finite_diff_gradient(obj, x, step);
  GradientCheck report;
  report.max_abs_err = (analytic - numeric).cwiseAbs().maxCoeff();
  report.pass = report.max_abs_err <= tol;
  return report;
}

}  // namespace armijo
