#include <doctest.h>

#include <random>

#include "fueter/errors.hpp"
#include "fueter/text_io.hpp"
#include "generators.hpp"

using namespace fueter;

namespace {

const AxisFrame k33(3, 3);

ParseError parse_failure(std::string_view text, const VectorBindings& vars = {}) {
  try {
    parse_expression(text, k33, vars);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error for " << text);
  return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("parsing the expression grammar") {
  const RadialExpr f = parse_expression("x1^2 + 3/2*e1*e2", k33);
  CHECK(f.size() == 2);
  CHECK(f == RadialExpr::coordinate(k33, Coord::x(1)) * RadialExpr::coordinate(k33, Coord::x(1)) +
                 RadialExpr::constant(k33, Multivector(6, Blade::from_indices(std::vector<int>{1, 2}),
                                                       Rational(3, 2))));

  const VectorBindings t{{"t", {Group::X, {1, 0, 0}}}};
  CHECK(parse_expression("ip(x,t)^2", k33, t) == parse_expression("x1^2", k33));

  const RadialExpr g = parse_expression("r^-3 * x1", k33);
  REQUIRE(g.size() == 1);
  CHECK(g.flat_terms().begin()->first.a == -3);
  CHECK(g.flat_terms().begin()->first.sector() == 2);

  CHECK(parse_expression("e2*e1", k33) == parse_expression("-e12", k33));
  CHECK(parse_expression("ip(x,x)", k33) == parse_expression("r^2", k33));
  CHECK(parse_expression("vec(x)*vec(x)", k33) == parse_expression("-r^2", k33));
  CHECK(parse_expression("(x1 - y2)/4", k33) == parse_expression("1/4*x1 - 1/4*y2", k33));
  const VectorBindings ts{{"t", {Group::X, {1, 2, 2}}}, {"s", {Group::Y, {0, 1, 0}}}};
  CHECK(parse_expression("ip(t,t)", k33, ts) == RadialExpr::scalar(k33, 9));
  CHECK(parse_expression("vec(s)", k33, ts) == parse_expression("e5", k33));
}

TEST_CASE("parse errors carry positions") {
  const ParseError e1 = parse_failure("x1 + * 2");
  CHECK(e1.line() == 1);
  CHECK(e1.column() == 6);
  const ParseError e2 = parse_failure("x1 +\n  (y1");
  CHECK(e2.line() == 2);
  CHECK(e2.column() == 6);
  CHECK(parse_failure("x4").column() == 1);
  CHECK(parse_failure("x1 * ip(x,u)").column() == 11);
  CHECK(parse_failure("x1^-1").column() == 1);
  CHECK(parse_failure("x1 / y1").column() == 4);
  CHECK(parse_failure("x1 $ 2").column() == 4);
  CHECK(parse_failure("e17").column() == 1);
  CHECK_THROWS_AS(parse_expression("ip(x,t)", k33, {{"t", {Group::X, {1, 2}}}}), ParseError);
  CHECK_THROWS_AS(parse_expression("ip(y,t)", k33, {{"t", {Group::X, {1, 2, 3}}}}), ParseError);
}

TEST_CASE("formatting") {
  const RadialExpr zero(k33);
  CHECK(format_expression(zero) == "0");
  CHECK(format_expression(zero, TextStyle::Latex) == "0");
  CHECK(to_json(zero)["terms"] == nlohmann::json::array());

  const RadialExpr on = parse_expression("x1*r^-1*y1*rho^-1*e1*e4", k33);
  CHECK(format_expression(on) == "x1*y1*e14*r^-1*rho^-1");
  CHECK(format_expression(parse_expression("r*rho - 3/2*x1", k33)) == "-3/2*x1 + r^1*rho^1");
  CHECK(format_expression(parse_expression("x1^2*e12/2", k33), TextStyle::Latex) ==
        "\\frac{1}{2} x_{1}^{2} e_{12}");
}

TEST_CASE("large frames use bracketed blades") {
  const AxisFrame big(5, 7);
  const RadialExpr f = parse_expression("e{1,12} + 2*e10*y7", big);
  CHECK(format_expression(f) == "2*y7*e{10} + e{1,12}");
  CHECK(parse_expression(format_expression(f), big) == f);
}

TEST_CASE("property: plain output reparses to the same expression") {
  std::mt19937_64 rng(41);
  const std::vector<AxisFrame> frames = {AxisFrame(3, 3), AxisFrame(5, 7), AxisFrame(3, 0, true),
                                         AxisFrame(2, 1)};
  for (int i = 0; i < 100; ++i) {
    const AxisFrame& f = frames[i % frames.size()];
    const RadialExpr e = testgen::random_expr(rng, f, 1 + i % 5);
    const std::string text = format_expression(e);
    CHECK_MESSAGE(parse_expression(text, f) == e, text);
    CHECK(format_expression(parse_expression(text, f)) == text);
  }
}

TEST_CASE("JSON round trip") {
  std::mt19937_64 rng(42);
  const RadialExpr e = testgen::random_expr(rng, k33, 6) * RadialExpr::scalar(k33, Rational(7, 3));
  const nlohmann::json j = to_json(e);
  CHECK(j["frame"]["p"] == 3);
  CHECK(from_json(nlohmann::json::parse(j.dump())) == e);
  // Coefficients beyond 64 bits are written as strings.
  Rational huge(Integer("123456789012345678901234567891"), 7);
  huge.canonicalize();
  const RadialExpr big = RadialExpr::scalar(k33, huge);
  const nlohmann::json jb = to_json(big);
  CHECK(jb["terms"][0]["coeff"]["num"].is_string());
  CHECK(from_json(jb) == big);
  CHECK_THROWS_AS(from_json(nlohmann::json::parse(R"({"frame":{"p":3}})")), PreconditionError);
  nlohmann::json unreduced = to_json(RadialExpr::scalar(k33, Rational(1, 2)));
  unreduced["terms"][0]["coeff"] = {{"num", 2}, {"den", 4}};
  CHECK(from_json(unreduced) == RadialExpr::scalar(k33, Rational(1, 2)));
}

TEST_CASE("seed and list parsing") {
  using P = ComplexBivarPoly;
  CHECK(parse_seed("3/2*zbar^5 - i*zbar^3") ==
        pow(P::zbar(), 5) * ComplexRational{Rational(3, 2), 0} - pow(P::zbar(), 3) * ComplexRational{0, 1});
  CHECK(parse_seed("z^2*zbar") == pow(P::z(), 2) * P::zbar());
  CHECK(parse_seed("(x - i*y)^2") == pow(P::zbar(), 2));
  CHECK_THROWS_AS(parse_seed("zbar^-1"), ParseError);
  CHECK_THROWS_AS(parse_seed("w"), ParseError);

  CHECK(parse_rational_list("1,-2/3,0") == std::vector<Rational>{1, Rational(-2, 3), 0});
  CHECK_THROWS_AS(parse_rational_list("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_rational_list("1/0"), ParseError);

  CHECK(parse_bivariate("r^2 - 3*r^-1*rho") ==
        BivariateRadial::monomial(2, 0) - BivariateRadial::monomial(-1, 1, 3));
  CHECK(format_bivariate(parse_bivariate("2*r*rho^-2")) == "2 * r^1 * rho^-2");
}
