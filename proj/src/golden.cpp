#include "fueter/golden.hpp"

namespace fueter {

const std::array<GoldenExample, 6>& golden_examples() {
  static const std::array<GoldenExample, 6> table = {{
      {"plus zbar^5", Variant::Plus, "zbar^5", "ip(x,t)", "ip(y,s)",
       "10*r^-3*ip(x,t)*ip(y,s) + 6*r^-5*vec(x)*vec(y)*ip(x,t)*ip(y,s)"
       " - 2*r^-3*vec(t)*vec(y)*ip(y,s) + (5*r^2+3*rho^2)*r^-5*vec(x)*vec(s)*ip(x,t)"
       " - (5*r^2+rho^2)*r^-3*vec(t)*vec(s)"},
      {"plus zbar^8", Variant::Plus, "zbar^8", "ip(x,t)", "ip(y,s)",
       "10*ip(x,t)*ip(y,s) - 2*vec(t)*vec(y)*ip(y,s) + 2*vec(x)*vec(s)*ip(x,t)"
       " + (r^2-rho^2)*vec(t)*vec(s)"},
      {"plus zbar^10", Variant::Plus, "zbar^10", "ip(x,t)", "ip(y,s)",
       "140*(r^2-rho^2)*ip(x,t)*ip(y,s) - 56*vec(x)*vec(y)*ip(x,t)*ip(y,s)"
       " - 4*(7*r^2-5*rho^2)*vec(t)*vec(y)*ip(y,s) + 4*(5*r^2-7*rho^2)*vec(x)*vec(s)*ip(x,t)"
       " + (5*r^4-14*r^2*rho^2+5*rho^4)*vec(t)*vec(s)"},
      {"minus i*zbar^6", Variant::Minus, "i*zbar^6", "ip(x,t)", "ip(y,s)",
       "2*vec(x)*rho^-3*ip(x,t)*ip(y,s) - (3*r^2+5*rho^2)*vec(y)*rho^-5*ip(x,t)*ip(y,s)"
       " + (r^2+5*rho^2)*rho^-3*(vec(t)*ip(y,s)+vec(s)*ip(x,t))"},
      {"minus zbar^9", Variant::Minus, "zbar^9", "ip(x,t)", "ip(y,s)",
       "2*(vec(x)-vec(y))*ip(x,t)*ip(y,s) + (r^2-rho^2)*(vec(t)*ip(y,s)+vec(s)*ip(x,t))"},
      {"minus zbar^11", Variant::Minus, "zbar^11", "ip(x,t)^2", "ip(y,s)",
       "8*(5*vec(x)-7*vec(y))*ip(x,t)^2*ip(y,s) - 4*(7*r^2-5*rho^2)*ip(t,t)*vec(y)*ip(y,s)"
       " + 4*(5*r^2-7*rho^2)*(2*vec(t)*ip(x,t)*ip(y,s) + ip(t,t)*vec(x)*ip(y,s)"
       " + vec(s)*ip(x,t)^2) + (5*r^4-14*r^2*rho^2+5*rho^4)*ip(t,t)*vec(s)"},
  }};
  return table;
}

std::optional<Rational> proportionality(const RadialExpr& f, const RadialExpr& g) {
  if (g.is_zero()) return std::nullopt;
  if (f.is_zero()) return Rational(0);
  const auto& [key, gc] = *g.flat_terms().begin();
  auto it = f.flat_terms().find(key);
  if (it == f.flat_terms().end()) return std::nullopt;
  Rational c = it->second / gc;
  if (f == g * c) return c;
  return std::nullopt;
}

GoldenOutcome run_golden(const GoldenExample& ex, const std::vector<Rational>& t,
                         const std::vector<Rational>& s) {
  const AxisFrame frame(3, 3);
  const VectorBindings vars{{"t", {Group::X, t}}, {"s", {Group::Y, s}}};
  const SeedFunction w(parse_seed(ex.seed));
  const RadialExpr hk = parse_expression(ex.hk, frame, vars);
  const RadialExpr hl = parse_expression(ex.hl, frame, vars);
  GoldenOutcome out{false, std::nullopt, ft_biaxial(w, hk, hl, ex.variant),
                    parse_expression(ex.formula, frame, vars)};
  out.exact = out.engine == out.expected;
  out.ratio = proportionality(out.engine, out.expected);
  return out;
}

}  // namespace fueter
