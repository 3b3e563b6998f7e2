#pragma once

#include <map>
#include <string>
#include <utility>

#include "fueter/radial_calc.hpp"
#include "fueter/rational.hpp"

namespace fueter {

struct ComplexRational {
  Rational re;
  Rational im;

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
};

/// Real bivariate polynomial sum c_ij x^i y^j.
struct RealBivarPoly {
  std::map<std::pair<int, int>, Rational> terms;
  friend bool operator==(const RealBivarPoly&, const RealBivarPoly&) = default;
};

/// Complex-rational polynomial in (x, y), i.e. in (z, zbar) after expansion.
class ComplexBivarPoly {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, ComplexRational>;

  ComplexBivarPoly() = default;
  static ComplexBivarPoly constant(ComplexRational c);
  static ComplexBivarPoly monomial(int i, int j, ComplexRational c = {1, 0});
  static ComplexBivarPoly x() { return monomial(1, 0); }
  static ComplexBivarPoly y() { return monomial(0, 1); }
  static ComplexBivarPoly z();     // x + i y
  static ComplexBivarPoly zbar();  // x - i y
  static ComplexBivarPoly imaginary_unit() { return constant({0, 1}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  void add(int i, int j, const ComplexRational& c);

  ComplexBivarPoly& operator+=(const ComplexBivarPoly& rhs);
  ComplexBivarPoly& operator-=(const ComplexBivarPoly& rhs);
  ComplexBivarPoly& operator*=(const ComplexRational& c);
  friend ComplexBivarPoly operator+(ComplexBivarPoly l, const ComplexBivarPoly& r) { return l += r; }
  friend ComplexBivarPoly operator-(ComplexBivarPoly l, const ComplexBivarPoly& r) { return l -= r; }
  friend ComplexBivarPoly operator*(ComplexBivarPoly f, const ComplexRational& c) { return f *= c; }
  friend ComplexBivarPoly operator*(const ComplexBivarPoly& f, const ComplexBivarPoly& g);
  friend bool operator==(const ComplexBivarPoly&, const ComplexBivarPoly&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

ComplexBivarPoly pow(const ComplexBivarPoly& f, int n);
ComplexBivarPoly partial_x(const ComplexBivarPoly& f);
ComplexBivarPoly partial_y(const ComplexBivarPoly& f);

enum class Wirtinger { Dz, Dzbar };

/// d_z = (d_x - i d_y)/2, d_zbar = (d_x + i d_y)/2.
ComplexBivarPoly wirtinger(const ComplexBivarPoly& w, Wirtinger which);
/// d_x^2 + d_y^2.
ComplexBivarPoly planar_laplacian(const ComplexBivarPoly& w);

/// Smallest mu >= 0 with d_z (4 d_z d_zbar)^mu w = 0.
int seed_order(const ComplexBivarPoly& w);

/// Polynomial seed w(z, zbar) with its recomputed order mu.
class SeedFunction {
 public:
  explicit SeedFunction(ComplexBivarPoly w);

  const ComplexBivarPoly& w() const { return w_; }
  int mu() const { return mu_; }
  bool is_antiholomorphic() const { return mu_ == 0; }
  bool is_holomorphic() const { return wirtinger(w_, Wirtinger::Dzbar).is_zero(); }

 private:
  ComplexBivarPoly w_;
  int mu_;
};

/// zbar^n.
SeedFunction conj_power(int n);
/// i * w.
SeedFunction times_i(const SeedFunction& w);

enum class Variant { Plus, Minus };

/// Routing of one Fischer term x^{n1} y^{n2} through the higher-order map:
/// the integrand of `source` times x^{n1} y^{n2} equals the integrand of
/// `target` built from the seed w * factor.
struct RouteFactor {
  ComplexBivarPoly factor;  // h(x, y)
  Variant target;
};

/// For Variant::Plus this is the h^+ / h^- table pair: n1 + n2 even routes
/// to Plus with h^+, odd routes to Minus with h^-. Variant::Minus uses the
/// analogous tables for the (omega u + nu v) integrand.
RouteFactor route_factor(int n1, int n2, Variant source);

/// w * h for the route of (n1, n2); order recomputed.
SeedFunction monomial_times(const SeedFunction& w, int n1, int n2, Variant source);

/// Real and imaginary parts.
std::pair<RealBivarPoly, RealBivarPoly> split_uv(const ComplexBivarPoly& w);

/// x -> r, y -> rho.
BivariateRadial lift_to_radial(const RealBivarPoly& poly);

}  // namespace fueter
