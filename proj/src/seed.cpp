#include "fueter/seed.hpp"

#include <sstream>

#include "fueter/errors.hpp"

namespace fueter {

ComplexBivarPoly ComplexBivarPoly::constant(ComplexRational c) { return monomial(0, 0, c); }

ComplexBivarPoly ComplexBivarPoly::monomial(int i, int j, ComplexRational c) {
  if (i < 0 || j < 0) throw PreconditionError("negative exponent in a seed polynomial");
  ComplexBivarPoly f;
  f.add(i, j, c);
  return f;
}

ComplexBivarPoly ComplexBivarPoly::z() { return x() + monomial(0, 1, {0, 1}); }

ComplexBivarPoly ComplexBivarPoly::zbar() { return x() + monomial(0, 1, {0, -1}); }

int ComplexBivarPoly::degree() const {
  int d = -1;
  for (const auto& [k, c] : terms_) d = std::max(d, k.first + k.second);
  return d;
}

void ComplexBivarPoly::add(int i, int j, const ComplexRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(Key{i, j}, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ComplexBivarPoly& ComplexBivarPoly::operator+=(const ComplexBivarPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add(k.first, k.second, c);
  return *this;
}

ComplexBivarPoly& ComplexBivarPoly::operator-=(const ComplexBivarPoly& rhs) {
  for (const auto& [k, c] : rhs.terms_) add(k.first, k.second, ComplexRational{-c.re, -c.im});
  return *this;
}

ComplexBivarPoly& ComplexBivarPoly::operator*=(const ComplexRational& c) {
  Terms out;
  for (const auto& [k, v] : terms_) {
    ComplexRational p = v * c;
    if (!p.is_zero()) out.emplace(k, p);
  }
  terms_ = std::move(out);
  return *this;
}

ComplexBivarPoly operator*(const ComplexBivarPoly& f, const ComplexBivarPoly& g) {
  ComplexBivarPoly out;
  for (const auto& [kf, cf] : f.terms_) {
    for (const auto& [kg, cg] : g.terms_) out.add(kf.first + kg.first, kf.second + kg.second, cf * cg);
  }
  return out;
}

std::string ComplexBivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.re.get_str();
    if (sgn(c.im) != 0) os << (sgn(c.im) < 0 ? " - " : " + ") << Rational(abs(c.im)).get_str() << "i";
    os << ")";
    if (k.first) os << "*x^" << k.first;
    if (k.second) os << "*y^" << k.second;
  }
  return os.str();
}

ComplexBivarPoly pow(const ComplexBivarPoly& f, int n) {
  if (n < 0) throw PreconditionError("negative power of a seed polynomial");
  ComplexBivarPoly out = ComplexBivarPoly::constant({1, 0});
  for (int i = 0; i < n; ++i) out = out * f;
  return out;
}

ComplexBivarPoly partial_x(const ComplexBivarPoly& f) {
  ComplexBivarPoly out;
  for (const auto& [k, c] : f.terms()) {
    if (k.first > 0) out.add(k.first - 1, k.second, c * ComplexRational{k.first, 0});
  }
  return out;
}

ComplexBivarPoly partial_y(const ComplexBivarPoly& f) {
  ComplexBivarPoly out;
  for (const auto& [k, c] : f.terms()) {
    if (k.second > 0) out.add(k.first, k.second - 1, c * ComplexRational{k.second, 0});
  }
  return out;
}

ComplexBivarPoly wirtinger(const ComplexBivarPoly& w, Wirtinger which) {
  const Rational half(1, 2);
  const ComplexRational iy = which == Wirtinger::Dz ? ComplexRational{0, -half}
                                                    : ComplexRational{0, half};
  return partial_x(w) * ComplexRational{half, 0} + partial_y(w) * iy;
}

ComplexBivarPoly planar_laplacian(const ComplexBivarPoly& w) {
  return partial_x(partial_x(w)) + partial_y(partial_y(w));
}

int seed_order(const ComplexBivarPoly& w) {
  if (w.is_zero()) throw PreconditionError("seed order of the zero function is undefined");
  ComplexBivarPoly g = w;
  for (int mu = 0;; ++mu) {
    if (wirtinger(g, Wirtinger::Dz).is_zero()) return mu;
    g = wirtinger(wirtinger(g, Wirtinger::Dzbar), Wirtinger::Dz) * ComplexRational{4, 0};
  }
}

SeedFunction::SeedFunction(ComplexBivarPoly w) : w_(std::move(w)), mu_(seed_order(w_)) {}

SeedFunction conj_power(int n) { return SeedFunction(pow(ComplexBivarPoly::zbar(), n)); }

SeedFunction times_i(const SeedFunction& w) { return SeedFunction(w.w() * ComplexRational{0, 1}); }

RouteFactor route_factor(int n1, int n2, Variant source) {
  if (n1 < 0 || n2 < 0) throw PreconditionError("route exponents must be nonnegative");
  const int n = n1 + n2;
  const bool n1_odd = n1 % 2 != 0;
  auto sign = [](int e) { return e % 2 == 0 ? 1 : -1; };
  ComplexRational c{0, 0};
  Variant target = Variant::Plus;
  if (source == Variant::Plus) {
    if (n % 2 == 0) {
      target = Variant::Plus;
      c = n1_odd ? ComplexRational{0, sign((n - 2) / 2)} : ComplexRational{sign(n / 2), 0};
    } else {
      target = Variant::Minus;
      c = n1_odd ? ComplexRational{sign((n - 1) / 2), 0} : ComplexRational{0, sign((n - 1) / 2)};
    }
  } else {
    // (omega u + nu v) x^{n1} y^{n2}: both odd gives omega v - nu u, n1 odd
    // gives -(u + omega nu v), n2 odd gives -v + omega nu u.
    if (n % 2 == 0) {
      target = Variant::Minus;
      c = n1_odd ? ComplexRational{0, sign(n / 2)} : ComplexRational{sign(n / 2), 0};
    } else {
      target = Variant::Plus;
      c = n1_odd ? ComplexRational{sign((n + 1) / 2), 0}
                 : ComplexRational{0, sign((n - 1) / 2)};
    }
  }
  return {ComplexBivarPoly::monomial(n1, n2, c), target};
}

SeedFunction monomial_times(const SeedFunction& w, int n1, int n2, Variant source) {
  return SeedFunction(w.w() * route_factor(n1, n2, source).factor);
}

std::pair<RealBivarPoly, RealBivarPoly> split_uv(const ComplexBivarPoly& w) {
  RealBivarPoly u;
  RealBivarPoly v;
  for (const auto& [k, c] : w.terms()) {
    if (sgn(c.re) != 0) u.terms.emplace(k, c.re);
    if (sgn(c.im) != 0) v.terms.emplace(k, c.im);
  }
  return {u, v};
}

BivariateRadial lift_to_radial(const RealBivarPoly& poly) {
  BivariateRadial out;
  for (const auto& [k, c] : poly.terms) out.add(k.first, k.second, c);
  return out;
}

}  // namespace fueter
