#include "armijo/units.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

namespace armijo::units {
namespace {

std::string exponent_text(const Exponent& e) {
  std::ostringstream os;
  os << e.numerator();
  if (e.denominator() != 1) os << '/' << e.denominator();
  return os.str();
}

// A factor of a rule's increment raised to a power.
struct Factor {
  Dimension dim;
  Exponent power{1};
};

Dimension product(const std::vector<Factor>& factors) {
  Dimension out;
  for (const auto& f : factors) out = out * dim_pow(f.dim, f.power);
  return out;
}

// Unit(delta) for a learning rate bound by Armijo's inequality.
Dimension armijo_bound_delta() { return Dimension::of_x() / derivative_unit(1); }

// Unit(L) from |f'(x) - f'(y)| <= L |x - y|.
Dimension lipschitz_constant() { return derivative_unit(1) / Dimension::of_x(); }

}  // namespace

Dimension dim_mul(const Dimension& a, const Dimension& b) {
  return {a.x_exp + b.x_exp, a.f_exp + b.f_exp};
}

Dimension dim_div(const Dimension& a, const Dimension& b) {
  return {a.x_exp - b.x_exp, a.f_exp - b.f_exp};
}

Dimension dim_inv(const Dimension& a) { return {-a.x_exp, -a.f_exp}; }

Dimension dim_pow(const Dimension& a, const Exponent& p) { return {a.x_exp * p, a.f_exp * p}; }

std::string to_string(const Dimension& d) {
  return "X^" + exponent_text(d.x_exp) + " F^" + exponent_text(d.f_exp);
}

Dimension derivative_unit(int order) {
  if (order < 1) throw std::invalid_argument("derivative order must be >= 1");
  Dimension d = Dimension::of_f();
  for (int i = 0; i < order; ++i) d = d / Dimension::of_x();
  return d;
}

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::StandardGD:
      return "standard-gd";
    case Rule::Newton:
      return "newton";
    case Rule::BacktrackingGD:
      return "backtracking-gd";
    case Rule::LipschitzScaledGD:
      return "lipschitz-scaled-gd";
    case Rule::DiminishingGD:
      return "diminishing-gd";
  }
  return "unknown";
}

RuleVerdict check_rule(Rule r) {
  const Dimension grad = derivative_unit(1);
  std::vector<Factor> increment;
  switch (r) {
    case Rule::StandardGD:  // delta0 f', delta0 unbound
      increment = {{Dimension::unitless()}, {grad}};
      break;
    case Rule::Newton:  // f' / f''
      increment = {{grad}, {derivative_unit(2), Exponent(-1)}};
      break;
    case Rule::BacktrackingGD:  // delta f', delta bound by Armijo
      increment = {{armijo_bound_delta()}, {grad}};
      break;
    case Rule::LipschitzScaledGD:  // (1/L) f'
      increment = {{lipschitz_constant(), Exponent(-1)}, {grad}};
      break;
    case Rule::DiminishingGD:  // delta_n f', schedule chosen independently of f
      increment = {{Dimension::unitless()}, {grad}};
      break;
  }
  RuleVerdict v;
  v.rule_name = rule_name(r);
  v.increment_dimension = product(increment);
  v.correct = v.increment_dimension == Dimension::of_x();
  return v;
}

Dimension armijo_rhs_dimension(const Dimension& alpha_dim) {
  const Dimension grad = derivative_unit(1);
  return alpha_dim * armijo_bound_delta() * dim_pow(grad, Exponent(2));
}

ArmijoConsistency armijo_consistency_check() {
  ArmijoConsistency out;
  out.delta_dim = armijo_bound_delta();
  out.lhs_dim = Dimension::of_f();
  out.rhs_dim = armijo_rhs_dimension(Dimension::unitless());
  // Since rhs_dim(alpha) = Unit(alpha) * Unit(f), the two sides agree exactly
  // when Unit(alpha) is the identity.
  const Dimension required_alpha = out.lhs_dim / armijo_rhs_dimension(Dimension::unitless());
  out.alpha_unitless_required = out.rhs_dim == out.lhs_dim && required_alpha == Dimension::unitless();
  return out;
}

}  // namespace armijo::units
