#include <doctest.h>

#include <random>

#include "fueter/errors.hpp"
#include "fueter/fueter.hpp"
#include "fueter/seed.hpp"

using namespace fueter;

namespace {

using P = ComplexBivarPoly;

const ComplexRational kI{0, 1};

P random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, 5);
  std::uniform_int_distribution<int> num(-3, 3);
  P out;
  for (int t = 0; t < 4; ++t) out += P::monomial(deg(rng), deg(rng), {num(rng), num(rng)});
  return out;
}

RealBivarPoly real_poly(std::initializer_list<std::tuple<int, int, int>> terms) {
  RealBivarPoly out;
  for (auto [i, j, c] : terms) out.terms[{i, j}] = c;
  return out;
}

}  // namespace

TEST_CASE("Wirtinger derivatives") {
  for (int n = 0; n <= 6; ++n) CHECK(wirtinger(pow(P::zbar(), n), Wirtinger::Dz).is_zero());
  CHECK(wirtinger(P::z() * P::zbar(), Wirtinger::Dz) == P::zbar());
  CHECK(wirtinger(pow(P::zbar(), 2), Wirtinger::Dzbar) == P::zbar() * ComplexRational{2, 0});
  CHECK(wirtinger(P::z(), Wirtinger::Dz) == P::constant({1, 0}));
}

TEST_CASE("seed order") {
  CHECK(seed_order(pow(P::zbar(), 5)) == 0);
  CHECK(seed_order(P::z() * P::zbar()) == 1);
  CHECK(seed_order(pow(P::zbar(), 5) * P::z()) == 1);
  CHECK(seed_order(pow(P::zbar(), 6) * pow(P::z(), 2)) == 2);
  CHECK_THROWS_AS(seed_order(P()), PreconditionError);
  CHECK(SeedFunction(pow(P::zbar(), 5) * P::z()).mu() == 1);
}

TEST_CASE("seed builders") {
  const SeedFunction w = conj_power(8);
  CHECK(w.w() == pow(P::x() - P::y() * kI, 8));
  CHECK(w.mu() == 0);
  CHECK(w.is_antiholomorphic());
  CHECK(times_i(conj_power(1)).w() == P::y() + P::x() * kI);

  const RouteFactor hp = route_factor(1, 1, Variant::Plus);
  CHECK(hp.target == Variant::Plus);
  CHECK(hp.factor == P::monomial(1, 1, kI));
  const RouteFactor hm = route_factor(1, 0, Variant::Plus);
  CHECK(hm.target == Variant::Minus);
  CHECK(hm.factor == P::x());
  CHECK(route_factor(0, 0, Variant::Plus).factor == P::constant({1, 0}));
  CHECK(route_factor(0, 0, Variant::Minus).factor == P::constant({1, 0}));
}

TEST_CASE("real and imaginary parts") {
  auto [u, v] = split_uv(pow(P::zbar(), 2));
  CHECK(u == real_poly({{2, 0, 1}, {0, 2, -1}}));
  CHECK(v == real_poly({{1, 1, -2}}));
  std::tie(u, v) = split_uv(P::zbar() * kI);
  CHECK(u == real_poly({{0, 1, 1}}));
  CHECK(v == real_poly({{1, 0, 1}}));
  std::tie(u, v) = split_uv(P::constant({3, 0}));
  CHECK(u == real_poly({{0, 0, 3}}));
  CHECK(v.terms.empty());
}

TEST_CASE("lifting to the radii") {
  CHECK(lift_to_radial(real_poly({{2, 0, 1}, {0, 2, -1}})) ==
        BivariateRadial::monomial(2, 0) - BivariateRadial::monomial(0, 2));
  CHECK(lift_to_radial(real_poly({{1, 1, 1}})) == BivariateRadial::monomial(1, 1));
  CHECK(lift_to_radial(RealBivarPoly{}).is_zero());
}

TEST_CASE("property: planar Laplacian factors through Wirtinger derivatives") {
  std::mt19937_64 rng(21);
  for (int i = 0; i < 100; ++i) {
    const P w = random_poly(rng);
    CHECK(planar_laplacian(w) ==
          wirtinger(wirtinger(w, Wirtinger::Dzbar), Wirtinger::Dz) * ComplexRational{4, 0});
    const auto [u, v] = split_uv(w);
    P rebuilt;
    for (const auto& [k, c] : u.terms) rebuilt += P::monomial(k.first, k.second, {c, 0});
    for (const auto& [k, c] : v.terms) rebuilt += P::monomial(k.first, k.second, {0, c});
    CHECK(rebuilt == w);
  }
}

TEST_CASE("property: route factors raise the order by at most n1 + n2") {
  for (int n = 0; n <= 9; ++n) {
    const SeedFunction w = conj_power(n);
    for (int n1 = 0; n1 <= 3; ++n1) {
      for (int n2 = 0; n2 <= 3; ++n2) {
        for (Variant v : {Variant::Plus, Variant::Minus}) {
          const SeedFunction wh = monomial_times(w, n1, n2, v);
          CHECK(wh.mu() <= n1 + n2);
          const ComplexBivarPoly direct = wirtinger(wh.w(), Wirtinger::Dz);
          const ComplexBivarPoly rule = w.w() * wirtinger(route_factor(n1, n2, v).factor, Wirtinger::Dz);
          CHECK(direct == rule);
        }
      }
    }
  }
}

TEST_CASE("route tables reproduce the shifted integrand") {
  // profile(source, w) x^{n1} y^{n2} == profile(target, w h) with x -> r, y -> rho.
  const AxisFrame frame(3, 3);
  const RadialExpr xv = RadialExpr::vector_variable(frame, Group::X);
  const RadialExpr yv = RadialExpr::vector_variable(frame, Group::Y);
  const RadialExpr one = RadialExpr::scalar(frame, 1);
  for (const P& seed : {pow(P::zbar(), 3), pow(P::zbar(), 4) * kI + P::zbar()}) {
    const auto [u, v] = split_uv(seed);
    for (int n1 = 0; n1 <= 3; ++n1) {
      for (int n2 = 0; n2 <= 3; ++n2) {
        for (Variant source : {Variant::Plus, Variant::Minus}) {
          const RadialExpr lhs =
              biaxial_integrand(lift_to_radial(u), lift_to_radial(v), one, one, source) *
              power(xv, n1) * power(yv, n2);
          const RouteFactor route = route_factor(n1, n2, source);
          const auto [u2, v2] = split_uv(seed * route.factor);
          const RadialExpr rhs =
              biaxial_integrand(lift_to_radial(u2), lift_to_radial(v2), one, one, route.target);
          CHECK(lhs == rhs);
        }
      }
    }
  }
}
