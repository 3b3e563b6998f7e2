#include <doctest.h>

#include <map>
#include <random>

#include "fueter/errors.hpp"
#include "fueter/fueter.hpp"
#include "fueter/linsolve.hpp"
#include "generators.hpp"

using namespace fueter;

namespace {

using P = ComplexBivarPoly;

const AxisFrame k33(3, 3);

RadialExpr coord(const AxisFrame& f, Coord c) { return RadialExpr::coordinate(f, c); }
RadialExpr gen(const AxisFrame& f, int j) {
  return RadialExpr::constant(f, Multivector(f.m(), Blade::generator(j)));
}
RadialExpr scalar(const AxisFrame& f, const Rational& c) { return RadialExpr::scalar(f, c); }
RadialExpr monogenic_x(const AxisFrame& f) {
  return coord(f, Coord::x(1)) * gen(f, 1) - coord(f, Coord::x(2)) * gen(f, 2);
}
RadialExpr monogenic_y(const AxisFrame& f) {
  return coord(f, Coord::y(1)) * gen(f, f.p() + 1) - coord(f, Coord::y(2)) * gen(f, f.p() + 2);
}
SeedFunction seed(const P& w) { return SeedFunction(w); }
P zbar(int n) { return pow(P::zbar(), n); }

}  // namespace

TEST_CASE("degree bound annihilates low-degree integrands") {
  CHECK(ft_plus(seed(zbar(2)), scalar(k33, 1), scalar(k33, 1)).is_zero());
  CHECK(ft_minus(seed(zbar(3)), scalar(k33, 1), scalar(k33, 1)).is_zero());
}

TEST_CASE("biaxial map preconditions") {
  const AxisFrame even(4, 3);
  CHECK_THROWS_AS(ft_plus(seed(zbar(8)), scalar(even, 1), scalar(even, 1)), PreconditionError);
  const RadialExpr mixed = coord(k33, Coord::x(1)) + coord(k33, Coord::x(1)) * coord(k33, Coord::x(2));
  CHECK_THROWS_AS(ft_plus(seed(zbar(8)), mixed, scalar(k33, 1)), PreconditionError);
  CHECK_THROWS_AS(ft_plus(seed(zbar(8) * P::z()), scalar(k33, 1), scalar(k33, 1)), PreconditionError);
  CHECK_THROWS_AS(ft_plus(seed(zbar(8)), coord(k33, Coord::y(1)), scalar(k33, 1)), PreconditionError);
  CHECK_THROWS_AS(ft_plus(seed(zbar(8)), gen(k33, 4), scalar(k33, 1)), PreconditionError);
}

TEST_CASE("higher-order map") {
  const RadialExpr one = scalar(k33, 1);
  const RadialExpr pk = monogenic_x(k33);
  const RadialExpr pl = monogenic_y(k33);
  // mu = 0 reduces to the first-order maps.
  for (Variant v : {Variant::Plus, Variant::Minus}) {
    CHECK(ft_mu(seed(zbar(9)), pk, pl, v) == ft_biaxial(seed(zbar(9)), pk, pl, v));
  }
  const SeedFunction w = seed(zbar(5) * P::z());
  REQUIRE(w.mu() == 1);
  for (Variant v : {Variant::Plus, Variant::Minus}) {
    const RadialExpr out = ft_mu(w, pk, pl, v);
    CHECK(is_monogenic(out, DiracScope::Full));
    CHECK(out == ft_closed_form(w, pk, pl, v));
  }
  CHECK(ft_mu(seed(P::z() * P::zbar()), one, one, Variant::Plus).is_zero());
  // Non-monogenic factors and understated orders are rejected.
  const std::vector<Rational> t = {1, 2, 3};
  CHECK_THROWS_AS(ft_mu(w, RadialExpr::inner_product(k33, Group::X, t), one, Variant::Plus),
                  PreconditionError);
  CHECK_THROWS_AS(ft_mu(w, pk, pl, Variant::Plus, 0), PreconditionError);
  // A larger declared order is allowed and stays monogenic.
  CHECK(is_monogenic(ft_mu(seed(zbar(9)), pk, one, Variant::Plus, 1), DiracScope::Full));
}

TEST_CASE("closed form constants") {
  const ClosedFormData data = closed_form_data(seed(zbar(8)), {0, 0, 3, 3}, Variant::Plus, 0);
  CHECK(data.constant == 8);
  CHECK(data.exponent == 2);
  CHECK(ft_closed_form(seed(zbar(8)), scalar(k33, 1), scalar(k33, 1), Variant::Plus) ==
        ft_plus(seed(zbar(8)), scalar(k33, 1), scalar(k33, 1)));
  // A real seed has no imaginary part, so B vanishes.
  const ClosedFormData real = closed_form_data(seed(pow(P::z() * P::zbar(), 6)), {1, 0, 3, 3}, Variant::Plus, 1);
  CHECK(real.components.second.is_zero());
  CHECK_FALSE(real.components.first.is_zero());
  // N = 4 Laplacians annihilate a degree 4 seed.
  CHECK(closed_form_data(seed(pow(P::z() * P::zbar(), 2)), {1, 0, 3, 3}, Variant::Plus, 1).components.first.is_zero());
}

TEST_CASE("classical map") {
  const AxisFrame f(3, 0, true);
  const RadialExpr one = scalar(f, 1);
  CHECK(fueter_classical(seed(pow(P::z(), 2)), one) == scalar(f, -4));
  CHECK(classical_closed_form(seed(pow(P::z(), 2)), one) == scalar(f, -4));
  CHECK(fueter_classical(seed(P::z()), one).is_zero());
  for (int n = 2; n <= 5; ++n) {
    const RadialExpr out = fueter_classical(seed(pow(P::z(), n)), monogenic_x(f));
    CHECK(is_monogenic(out, DiracScope::CauchyRiemann));
    CHECK(out == classical_closed_form(seed(pow(P::z(), n)), monogenic_x(f)));
  }
  CHECK_THROWS_AS(fueter_classical(seed(zbar(2)), one), PreconditionError);
  const AxisFrame even(4, 0, true);
  CHECK_THROWS_AS(fueter_classical(seed(pow(P::z(), 2)), scalar(even, 1)), PreconditionError);
  CHECK_THROWS_AS(fueter_classical(seed(pow(P::z(), 2)), scalar(k33, 1)), PreconditionError);
}

TEST_CASE("Fischer decomposition examples") {
  const AxisFrame f(3, 0);
  const auto layers = fischer_decompose(coord(f, Coord::x(1)), Group::X);
  REQUIRE(layers.size() == 2);
  const RadialExpr xv = RadialExpr::vector_variable(f, Group::X);
  CHECK(layers[0].n == 0);
  CHECK(layers[0].component == coord(f, Coord::x(1)) + xv * gen(f, 1) * Rational(1, 3));
  CHECK(layers[1].n == 1);
  CHECK(layers[1].component == gen(f, 1) * Rational(-1, 3));

  const auto mono = fischer_decompose(monogenic_x(f), Group::X);
  CHECK(mono[0].component == monogenic_x(f));
  CHECK(mono[1].component.is_zero());

  const RadialExpr sq = coord(f, Coord::x(1)) * coord(f, Coord::x(1)) +
                        coord(f, Coord::x(2)) * coord(f, Coord::x(2)) +
                        coord(f, Coord::x(3)) * coord(f, Coord::x(3));
  const auto sl = fischer_decompose(sq, Group::X);
  REQUIRE(sl.size() == 3);
  CHECK(sl[0].component.is_zero());
  CHECK(sl[1].component.is_zero());
  CHECK(sl[2].component == scalar(f, -1));

  CHECK_THROWS_AS(fischer_decompose(coord(f, Coord::x(1)) + scalar(f, 1), Group::X), PreconditionError);
}

namespace {

// Fischer layers from a direct linear solve over monomials x blades.
std::vector<RadialExpr> fischer_by_linear_solve(const RadialExpr& h, int degree) {
  const AxisFrame& f = h.frame();
  const int p = f.p();
  std::vector<std::pair<int, RadialExpr>> basis;  // (layer n, basis element)
  for (int n = 0; n <= degree; ++n) {
    const int d = degree - n;
    std::vector<std::array<int, 3>> exps;
    for (int a = 0; a <= d; ++a) {
      for (int b = 0; a + b <= d; ++b) exps.push_back({a, b, d - a - b});
    }
    for (const auto& e : exps) {
      RadialExpr m = scalar(f, 1);
      for (int j = 0; j < p; ++j) m = m * power(coord(f, Coord::x(j + 1)), e[j]);
      for (std::uint64_t bits = 0; bits < 8; ++bits) {
        basis.emplace_back(n, m * RadialExpr::constant(f, Multivector(f.m(), Blade(bits))));
      }
    }
  }
  // Unknown c_i: sum_i c_i x^{n_i} b_i = h and Dirac(sum over each layer) = 0.
  std::map<std::pair<int, TermKey>, int> row_of;
  std::vector<std::vector<std::pair<int, Rational>>> columns(basis.size());
  auto row = [&](int tag, const TermKey& k) {
    auto [it, inserted] = row_of.try_emplace({tag, k}, static_cast<int>(row_of.size()));
    return it->second;
  };
  const RadialExpr xv = RadialExpr::vector_variable(f, Group::X);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& [n, b] = basis[i];
    const RadialExpr shifted = power(xv, n) * b;
    const RadialExpr db = dirac(b, DiracScope::FirstGroup);
    for (const auto& [k, c] : shifted.flat_terms()) columns[i].emplace_back(row(-1, k), c);
    for (const auto& [k, c] : db.flat_terms()) {
      columns[i].emplace_back(row(n, k), c);
    }
  }
  for (const auto& [k, c] : h.flat_terms()) row(-1, k);
  std::vector<std::vector<Rational>> a(row_of.size(), std::vector<Rational>(basis.size()));
  std::vector<Rational> rhs(row_of.size());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (const auto& [r, c] : columns[i]) a[r][i] += c;
  }
  for (const auto& [k, c] : h.flat_terms()) rhs[row_of.at({-1, k})] = c;
  const auto sol = solve_exact(a, rhs);
  REQUIRE(sol.has_value());
  CHECK(sol->rank == static_cast<int>(basis.size()));
  std::vector<RadialExpr> layers(degree + 1, RadialExpr(f));
  for (std::size_t i = 0; i < basis.size(); ++i) layers[basis[i].first] += basis[i].second * sol->x[i];
  return layers;
}

}  // namespace

TEST_CASE("Fischer decomposition agrees with a brute-force linear solve") {
  std::mt19937_64 rng(31);
  const AxisFrame f(3, 0);
  for (int trial = 0; trial < 12; ++trial) {
    const int degree = 1 + trial % 2;
    RadialExpr h = testgen::random_group_poly(rng, f, Group::X, degree);
    if (h.is_zero()) continue;
    const auto layers = fischer_decompose(h, Group::X);
    const auto oracle = fischer_by_linear_solve(h, degree);
    REQUIRE(layers.size() == oracle.size());
    for (std::size_t n = 0; n < layers.size(); ++n) CHECK(layers[n].component == oracle[n]);
  }
}

TEST_CASE("property: Fischer reconstruction in both groups") {
  std::mt19937_64 rng(32);
  for (const AxisFrame& f : {AxisFrame(3, 5), AxisFrame(5, 3)}) {
    for (Group g : {Group::X, Group::Y}) {
      for (int degree = 0; degree <= 3; ++degree) {
        const RadialExpr h = testgen::random_group_poly(rng, f, g, degree);
        if (h.is_zero()) continue;
        RadialExpr rebuilt(f);
        for (const auto& layer : fischer_decompose(h, g)) {
          CHECK(is_monogenic(layer.component, g == Group::X ? DiracScope::FirstGroup : DiracScope::SecondGroup));
          rebuilt += power(RadialExpr::vector_variable(f, g), layer.n) * layer.component;
        }
        CHECK(rebuilt == h);
      }
    }
  }
}

TEST_CASE("route through Fischer layers") {
  const std::vector<Rational> t = {2, -1, 1};
  const std::vector<Rational> s = {1, 3, -2};
  const RadialExpr xt = RadialExpr::inner_product(k33, Group::X, t);
  const RadialExpr ys = RadialExpr::inner_product(k33, Group::Y, s);
  const auto layers = fischer_decompose(xt, Group::X);
  REQUIRE(layers.size() == 2);
  CHECK_FALSE(layers[0].component.is_zero());
  CHECK_FALSE(layers[1].component.is_zero());
  for (Variant v : {Variant::Plus, Variant::Minus}) {
    CHECK(ft_general_via_fischer(seed(zbar(8)), xt, ys, v) == ft_biaxial(seed(zbar(8)), xt, ys, v));
    CHECK(ft_general_via_fischer(seed(zbar(7)), xt, scalar(k33, 1), v) ==
          ft_biaxial(seed(zbar(7)), xt, scalar(k33, 1), v));
    CHECK(ft_general_via_fischer(seed(zbar(9)), monogenic_x(k33), monogenic_y(k33), v) ==
          ft_biaxial(seed(zbar(9)), monogenic_x(k33), monogenic_y(k33), v));
  }
  // Odd-valued layers and the five-dimensional groups.
  const AxisFrame f53(5, 3);
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 3; ++trial) {
    const RadialExpr hk = testgen::random_group_poly(rng, f53, Group::X, 2);
    const RadialExpr hl = testgen::random_group_poly(rng, f53, Group::Y, 1);
    if (hk.is_zero() || hl.is_zero()) continue;
    for (Variant v : {Variant::Plus, Variant::Minus}) {
      CHECK(ft_general_via_fischer(seed(zbar(10)), hk, hl, v) == ft_biaxial(seed(zbar(10)), hk, hl, v));
    }
  }
}

TEST_CASE("component extraction") {
  const RadialExpr one = scalar(k33, 1);
  const RadialExpr xv = RadialExpr::vector_variable(k33, Group::X);
  const RadialExpr yv = RadialExpr::vector_variable(k33, Group::Y);
  const BiaxialComponents cd = extract_components(xv - yv, one, one, Variant::Minus);
  CHECK(cd.first == BivariateRadial::monomial(1, 0));
  CHECK(cd.second == BivariateRadial::monomial(0, 1, -1));
  const RadialExpr rr = RadialExpr::radius(k33, Group::X, 2) - RadialExpr::radius(k33, Group::Y, 2);
  const BiaxialComponents ab = extract_components(rr, one, one, Variant::Plus);
  CHECK(ab.first == BivariateRadial::monomial(2, 0) - BivariateRadial::monomial(0, 2));
  CHECK(ab.second.is_zero());
  CHECK_THROWS_AS(extract_components(gen(k33, 1), one, one, Variant::Plus), PreconditionError);
}

TEST_CASE("Vekua systems") {
  const BiaxialParams params{0, 0, 3, 3};
  CHECK(vekua_check({Variant::Minus, BivariateRadial::monomial(1, 0), BivariateRadial::monomial(0, 1, -1)},
                    params));
  CHECK_FALSE(vekua_check({Variant::Minus, BivariateRadial::monomial(1, 0), BivariateRadial()}, params));
  CHECK(vekua_check({Variant::Plus, BivariateRadial::constant(5), BivariateRadial()}, params));
}

TEST_CASE("property: extracted components round-trip") {
  const RadialExpr pk = monogenic_x(k33);
  const RadialExpr pl = monogenic_y(k33);
  for (int n : {6, 8, 9}) {
    for (Variant v : {Variant::Plus, Variant::Minus}) {
      const RadialExpr out = ft_biaxial(seed(zbar(n) * ComplexRational{1, 1}), pk, pl, v);
      const BiaxialComponents comp = extract_components(out, pk, pl, v);
      CHECK(biaxial_integrand(comp.first, comp.second, pk, pl, v) == out);
      CHECK(vekua_check(comp, {1, 1, 3, 3}));
    }
  }
}
