#pragma once

#include <map>
#include <string>
#include <utility>

#include "fueter/radial_expr.hpp"
#include "fueter/rational.hpp"

namespace fueter {

enum class RadialVar { R, Rho };

/// Scalar Laurent polynomial sum c_ab r^a rho^b in the two radii.
class BivariateRadial {
 public:
  using Key = std::pair<int, int>;
  using Terms = std::map<Key, Rational>;

  BivariateRadial() = default;
  static BivariateRadial monomial(int a, int b, Rational c = 1);
  static BivariateRadial constant(Rational c) { return monomial(0, 0, std::move(c)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(int a, int b) const;
  void add(int a, int b, const Rational& c);

  BivariateRadial& operator+=(const BivariateRadial& rhs);
  BivariateRadial& operator-=(const BivariateRadial& rhs);
  BivariateRadial& operator*=(const Rational& c);
  friend BivariateRadial operator+(BivariateRadial l, const BivariateRadial& r) { return l += r; }
  friend BivariateRadial operator-(BivariateRadial l, const BivariateRadial& r) { return l -= r; }
  friend BivariateRadial operator-(BivariateRadial f) { return f *= Rational(-1); }
  friend BivariateRadial operator*(BivariateRadial f, const Rational& c) { return f *= c; }
  friend BivariateRadial operator*(const Rational& c, BivariateRadial f) { return f *= c; }
  friend BivariateRadial operator*(const BivariateRadial& f, const BivariateRadial& g);
  friend bool operator==(const BivariateRadial&, const BivariateRadial&) = default;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Multiplies by r^da rho^db.
BivariateRadial shift(const BivariateRadial& f, int da, int db);
BivariateRadial partial(const BivariateRadial& f, RadialVar var);

/// (var^-1 d/dvar)^n: r^a -> a r^(a-2).
BivariateRadial op_xinv_d(const BivariateRadial& f, int n, RadialVar var);
/// (d/dvar var^-1)^n: r^a -> (a-1) r^(a-2).
BivariateRadial op_d_xinv(const BivariateRadial& f, int n, RadialVar var);
/// (d_r^2 + d_rho^2)^n.
BivariateRadial delta2_power(const BivariateRadial& f, int n);

struct BiaxialParams {
  int k = 0;
  int l = 0;
  int p = 1;
  int q = 1;
};

/// D(j1, j2) = prod_{s<=j1} (2k+p-(2s-1)) * prod_{s<=j2} (2l+q-(2s-1)).
Integer d_coeff(int j1, int j2, const BiaxialParams& params);
/// n! / (j1! j2! (n-j1-j2)!).
Integer multinomial(int n, int j1, int j2);
/// n(n-2)(n-4)...; (-1)!! = 0!! = 1.
Integer double_factorial(int n);

/// W^{s1,s2}_{j1,j2}: Delta_2^(n-j1-j2) first, then the r-operator j1 times
/// ((r^-1 d_r) when s1 = 0, (d_r r^-1) when s1 = 1), then the rho-operator.
BivariateRadial w_term(const BivariateRadial& h, int n, int j1, int j2, int s1, int s2);

/// sum_{j1+j2<=n} multinomial(n; j1, j2) D(j1, j2) W^{s1,s2}_{j1,j2}.
BivariateRadial laplacian_power_rhs(const BivariateRadial& h, int n, int s1, int s2,
                           const BiaxialParams& params);

/// Scalar RadialExpr sum c_ab r^a rho^b in the given frame.
RadialExpr to_radial_expr(const BivariateRadial& f, const AxisFrame& frame);

}  // namespace fueter
