#pragma once

#include <boost/rational.hpp>

#include <array>
#include <string>

namespace armijo::units {

using Exponent = boost::rational<long long>;

/// Unit(x)^x_exp * Unit(f)^f_exp. Dimension{} is unitless.
struct Dimension {
  Exponent x_exp{0};
  Exponent f_exp{0};

  static Dimension unitless() { return {}; }
  static Dimension of_x() { return {Exponent(1), Exponent(0)}; }
  static Dimension of_f() { return {Exponent(0), Exponent(1)}; }

  friend bool operator==(const Dimension&, const Dimension&) = default;
};

Dimension dim_mul(const Dimension& a, const Dimension& b);
Dimension dim_div(const Dimension& a, const Dimension& b);
Dimension dim_inv(const Dimension& a);
Dimension dim_pow(const Dimension& a, const Exponent& p);

inline Dimension operator*(const Dimension& a, const Dimension& b) { return dim_mul(a, b); }
inline Dimension operator/(const Dimension& a, const Dimension& b) { return dim_div(a, b); }

/// "X^a F^b", e.g. "X^2 F^-1" or "X^1/2 F^0".
std::string to_string(const Dimension& d);

/// Unit of the order-th derivative: Unit(f) / Unit(x)^order. Throws
/// std::invalid_argument for order < 1.
Dimension derivative_unit(int order);

enum class Rule { StandardGD, Newton, BacktrackingGD, LipschitzScaledGD, DiminishingGD };

inline constexpr std::array<Rule, 5> kAllRules = {Rule::StandardGD, Rule::Newton,
                                                  Rule::BacktrackingGD, Rule::LipschitzScaledGD,
                                                  Rule::DiminishingGD};

std::string rule_name(Rule r);

struct RuleVerdict {
  std::string rule_name;
  Dimension increment_dimension;
  bool correct = false;  // increment carries Unit(x)
};

RuleVerdict check_rule(Rule r);

struct ArmijoConsistency {
  Dimension delta_dim;  // forced by Unit(delta f') = Unit(x)
  Dimension lhs_dim;    // f(x - delta f') - f(x)
  Dimension rhs_dim;    // alpha delta |f'|^2 with alpha unitless
  bool alpha_unitless_required = false;
};

/// Dimension of alpha * delta * |f'|^2 for a given Unit(alpha).
Dimension armijo_rhs_dimension(const Dimension& alpha_dim);

ArmijoConsistency armijo_consistency_check();

}  // namespace armijo::units
