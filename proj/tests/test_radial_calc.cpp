#include <doctest.h>

#include "fueter/errors.hpp"
#include "fueter/fueter.hpp"
#include "fueter/radial_calc.hpp"

using namespace fueter;

namespace {

BivariateRadial mono(int a, int b = 0, Rational c = 1) { return BivariateRadial::monomial(a, b, c); }

}  // namespace

TEST_CASE("r^-1 d_r") {
  CHECK(op_xinv_d(mono(2), 1, RadialVar::R) == mono(0, 0, 2));
  CHECK(op_xinv_d(mono(5), 2, RadialVar::R) == mono(1, 0, 15));
  CHECK(op_xinv_d(mono(5, 3), 0, RadialVar::R) == mono(5, 3));
  CHECK(op_xinv_d(mono(0, 4), 1, RadialVar::Rho) == mono(0, 2, 4));
}

TEST_CASE("d_r r^-1") {
  CHECK(op_d_xinv(mono(2), 1, RadialVar::R) == mono(0, 0, 1));
  CHECK(op_d_xinv(mono(1), 1, RadialVar::R).is_zero());
  CHECK(op_d_xinv(mono(5), 2, RadialVar::R) == mono(1, 0, 8));
}

TEST_CASE("planar laplacian in the radii") {
  CHECK(delta2_power(mono(2) + mono(0, 2), 1) == mono(0, 0, 4));
  CHECK(delta2_power(mono(-1), 1) == mono(-3, 0, 2));
  CHECK(delta2_power(mono(3, 1), 0) == mono(3, 1));
}

TEST_CASE("D coefficients") {
  CHECK(d_coeff(0, 0, {0, 0, 3, 3}) == 1);
  CHECK(d_coeff(1, 0, {0, 0, 3, 3}) == 2);
  CHECK(d_coeff(2, 0, {0, 0, 3, 3}) == 0);
  CHECK(d_coeff(2, 2, {1, 1, 3, 3}) == 64);
}

TEST_CASE("D vanishes exactly past the threshold") {
  for (int p : {1, 3, 5, 7}) {
    for (int q : {1, 3, 5}) {
      for (int k = 0; k <= 3; ++k) {
        for (int l = 0; l <= 3; ++l) {
          const BiaxialParams params{k, l, p, q};
          for (int j1 = 0; j1 <= 8; ++j1) {
            for (int j2 = 0; j2 <= 8; ++j2) {
              const bool past = j1 >= k + (p + 1) / 2 || j2 >= l + (q + 1) / 2;
              CHECK((d_coeff(j1, j2, params) == 0) == past);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("multinomials") {
  CHECK(multinomial(4, 1, 1) == 12);
  CHECK(multinomial(7, 0, 0) == 1);
  CHECK(multinomial(3, 3, 0) == 1);
  CHECK_THROWS_AS(multinomial(3, 2, 2), PreconditionError);
  // Pascal-type recurrence with out-of-range terms zero.
  auto m = [](int n, int a, int b) -> Integer {
    if (a < 0 || b < 0 || a + b > n) return 0;
    return multinomial(n, a, b);
  };
  for (int n = 0; n <= 8; ++n) {
    for (int a = 0; a <= n + 1; ++a) {
      for (int b = 0; a + b <= n + 1; ++b) {
        CHECK(m(n + 1, a, b) == m(n, a, b) + m(n, a - 1, b) + m(n, a, b - 1));
      }
    }
  }
}

TEST_CASE("double factorials") {
  CHECK(double_factorial(5) == 15);
  CHECK(double_factorial(1) == 1);
  CHECK(double_factorial(0) == 1);
  CHECK(double_factorial(-1) == 1);
  CHECK(double_factorial(6) == 48);
  CHECK_THROWS_AS(double_factorial(-3), PreconditionError);
}

TEST_CASE("W terms") {
  CHECK(w_term(mono(3, 1), 0, 0, 0, 0, 0) == mono(3, 1));
  CHECK(w_term(mono(2), 1, 1, 0, 0, 0) == mono(0, 0, 2));
  for (int s1 = 0; s1 <= 1; ++s1) {
    for (int s2 = 0; s2 <= 1; ++s2) CHECK(w_term(mono(2), 1, 0, 0, s1, s2) == mono(0, 0, 2));
  }
  CHECK_THROWS_AS(w_term(mono(2), 1, 1, 1, 0, 0), PreconditionError);
}

TEST_CASE("Laplacian expansion right-hand side") {
  const BiaxialParams params{0, 0, 3, 3};
  CHECK(laplacian_power_rhs(mono(2), 1, 0, 0, params) == mono(0, 0, 6));
  CHECK(laplacian_power_rhs(mono(0, 2), 1, 0, 0, params) == mono(0, 0, 6));
  CHECK(laplacian_power_rhs(mono(0, 0, 9), 1, 0, 0, params).is_zero());
  CHECK_THROWS_AS(laplacian_power_rhs(mono(2), 0, 0, 0, params), PreconditionError);
}

TEST_CASE("single Laplacian on h Pk Pl agrees with the first-order formula") {
  // Delta (h Pk Pl) = (Delta_2 h + (2k+p-1)/r d_r h + (2l+q-1)/rho d_rho h) Pk Pl.
  for (auto [p, q] : {std::pair{3, 3}, {3, 5}, {5, 3}}) {
    const AxisFrame frame(p, q);
    auto gen = [&](int j) { return RadialExpr::constant(frame, Multivector(frame.m(), Blade::generator(j))); };
    const RadialExpr pk = RadialExpr::coordinate(frame, Coord::x(1)) * gen(1) -
                          RadialExpr::coordinate(frame, Coord::x(2)) * gen(2);
    const RadialExpr pl = RadialExpr::coordinate(frame, Coord::y(1)) * gen(p + 1) -
                          RadialExpr::coordinate(frame, Coord::y(2)) * gen(p + 2);
    for (int a = -2; a <= 3; ++a) {
      for (int b = -2; b <= 3; ++b) {
        const BivariateRadial h = mono(a, b) + mono(a + 2, b, 3);
        const BivariateRadial expected = delta2_power(h, 1) +
                                         shift(partial(h, RadialVar::R), -1, 0) * Rational(2 + p - 1) +
                                         shift(partial(h, RadialVar::Rho), 0, -1) * Rational(2 + q - 1);
        const RadialExpr lhs = laplacian_power(to_radial_expr(h, frame) * pk * pl, 1, DiracScope::Full);
        CHECK(lhs == to_radial_expr(expected, frame) * pk * pl);
      }
    }
  }
}

TEST_CASE("radial operator identities on powers") {
  const RadialVar x = RadialVar::R;
  auto d = [&](const BivariateRadial& f) { return partial(f, x); };
  for (int a = -3; a <= 5; ++a) {
    const BivariateRadial f = mono(a);
    for (int n = 0; n <= 4; ++n) {
      const Rational two_n(2 * n);
      CHECK(d(d(op_xinv_d(f, n, x))) == op_xinv_d(d(d(f)), n, x) - two_n * op_xinv_d(f, n + 1, x));
      CHECK(d(d(op_d_xinv(f, n, x))) == op_d_xinv(d(d(f)), n, x) - two_n * op_d_xinv(f, n + 1, x));
      CHECK(op_d_xinv(d(f), n, x) == d(op_xinv_d(f, n, x)));
      CHECK(op_xinv_d(d(f), n, x) - d(op_d_xinv(f, n, x)) == two_n * shift(op_d_xinv(f, n, x), -1, 0));
    }
  }
}

TEST_CASE("text form") {
  CHECK((mono(2, -1, Rational(3, 2)) - mono(0, 1)).to_string() == "-1 * r^0 * rho^1 + 3/2 * r^2 * rho^-1");
  CHECK(BivariateRadial().to_string() == "0");
}
