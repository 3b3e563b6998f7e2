#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fueter/radial_calc.hpp"
#include "fueter/radial_expr.hpp"
#include "fueter/seed.hpp"

namespace fueter {

/// A named constant vector bound to one axial group (t lives in R^p, s in R^q).
struct BoundVector {
  Group group = Group::X;
  std::vector<Rational> values;
};

using VectorBindings = std::map<std::string, BoundVector>;

/// Parses the expression grammar
///
///   expr   := ["+"|"-"] term {("+"|"-") term}
///   term   := factor {("*"|"/") factor}        divisors must be nonzero rationals
///   factor := "-" factor | primary ["^" int]   negative powers only on r, rho
///   primary:= rational | coord | blade | "r" | "rho" | "(" expr ")"
///           | "ip(" arg "," arg ")" | "vec(" arg ")"
///   coord  := "x"digits | "y"digits | "X0";  blade := "e"digits | "e{" ints "}"
///   arg    := "x" | "y" | bound vector name
///
/// `ip(x,t)` is <x,t>, `ip(t,t)` is |t|^2, `vec(x)` is the vector variable and
/// `vec(t)` the constant vector sum t_j e_j. Blades `e12` read one index per
/// digit when m <= 9 and a single index otherwise.
RadialExpr parse_expression(std::string_view text, const AxisFrame& frame,
                            const VectorBindings& vectors = {});

/// Parses a seed such as `3/2*zbar^5 - i*zbar^3` or `z^2*zbar`. Accepts the
/// symbols z, zbar, x, y, i, rationals, + - * / ^ and parentheses.
ComplexBivarPoly parse_seed(std::string_view text);

/// Parses a scalar Laurent polynomial in r and rho, e.g. `r^2 - 3*r^-1*rho`.
BivariateRadial parse_bivariate(std::string_view text);

/// Comma-separated rationals: `1,-2/3,0`.
std::vector<Rational> parse_rational_list(std::string_view text);

enum class TextStyle { Plain, Json, Latex };

/// Deterministic rendering. Plain output reparses to an equal expression.
std::string format_expression(const RadialExpr& f, TextStyle style = TextStyle::Plain);
nlohmann::json to_json(const RadialExpr& f);
RadialExpr from_json(const nlohmann::json& j);

std::string format_bivariate(const BivariateRadial& f, TextStyle style = TextStyle::Plain);

}  // namespace fueter
