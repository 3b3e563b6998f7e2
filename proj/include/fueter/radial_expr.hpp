#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fueter/clifford.hpp"
#include "fueter/rational.hpp"

namespace fueter {

inline constexpr int kMaxSlots = 24;

enum class Group { X, Y, Scalar };

/// A frame coordinate: x_j (1 <= j <= p), y_j (1 <= j <= q) or X0.
struct Coord {
  Group group;
  int index;

  static Coord x(int j) { return {Group::X, j}; }
  static Coord y(int j) { return {Group::Y, j}; }
  static Coord scalar_axis() { return {Group::Scalar, 0}; }
  friend bool operator==(const Coord&, const Coord&) = default;
};

/// Biaxial configuration R^m = R^p (+) R^q, optionally with a commuting
/// coordinate X0. q = 0 is single-axis mode, where r = |X|.
class AxisFrame {
 public:
  AxisFrame(int p, int q, bool scalar_axis = false);

  int p() const { return p_; }
  int q() const { return q_; }
  int m() const { return p_ + q_; }
  bool has_scalar_axis() const { return scalar_axis_; }

  // Monomial slot layout: x1..xp, y1..yq, X0.
  int num_slots() const { return m() + (scalar_axis_ ? 1 : 0); }
  int slot(Coord c) const;
  Coord coord_at(int slot) const;
  Group group_of_slot(int slot) const;
  bool contains(Coord c) const;
  // Generator index of the Dirac factor for a coordinate (e_j or e_{p+j}).
  int generator_index(Coord c) const;
  std::string coord_name(int slot) const;

  friend bool operator==(const AxisFrame&, const AxisFrame&) = default;

 private:
  int p_;
  int q_;
  bool scalar_axis_;
};

struct Monomial {
  std::array<std::uint8_t, kMaxSlots> exps{};

  int degree() const;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Flat key of one scalar coefficient: monomial * e_A * r^a * rho^b.
struct TermKey {
  Monomial mono;
  int a = 0;
  int b = 0;
  Blade blade;

  int sector() const { return ((a & 1) << 1) | (b & 1); }
  friend bool operator==(const TermKey&, const TermKey&) = default;
  friend bool operator<(const TermKey& lhs, const TermKey& rhs);
};

/// monomial * coeff * r^a * rho^b with a Clifford-valued coefficient.
struct RadialTerm {
  Monomial mono;
  Multivector coeff;
  int a = 0;
  int b = 0;
};

/// Clifford-valued Laurent-radial expression sum_i mono_i c_i r^{a_i} rho^{b_i}
/// over a fixed frame.
///
/// Canonical form: every monomial has exponent <= 1 in the last x-coordinate
/// x_p (and in y_q); higher powers are folded with x_p^2 = r^2 - sum_{j<p} x_j^2.
/// The monomials x^alpha r^a rho^b with alpha_p, beta_q <= 1 are linearly
/// independent as functions on {r > 0, rho > 0}, so an expression is the zero
/// function iff its canonical term map is empty, and two expressions are equal
/// iff their term maps are.
class RadialExpr {
 public:
  using TermMap = std::map<TermKey, Rational>;

  explicit RadialExpr(AxisFrame frame);

  static RadialExpr constant(const AxisFrame& frame, const Multivector& value);
  static RadialExpr scalar(const AxisFrame& frame, const Rational& value);
  static RadialExpr coordinate(const AxisFrame& frame, Coord c);
  // r^exponent for Group::X, rho^exponent for Group::Y.
  static RadialExpr radius(const AxisFrame& frame, Group group, int exponent);
  // The vector variable x = sum x_j e_j, or y = sum y_j e_{p+j}.
  static RadialExpr vector_variable(const AxisFrame& frame, Group group);
  // Constant vector sum t_j e_j (X) or sum s_j e_{p+j} (Y).
  static RadialExpr constant_vector(const AxisFrame& frame, Group group,
                                    std::span<const Rational> values);
  // <x, t> = sum t_j x_j, or <y, s>.
  static RadialExpr inner_product(const AxisFrame& frame, Group group,
                                  std::span<const Rational> values);

  const AxisFrame& frame() const { return frame_; }
  const TermMap& flat_terms() const { return terms_; }
  // Terms grouped by (monomial, a, b) with Multivector coefficients.
  std::vector<RadialTerm> terms() const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  RadialExpr& operator+=(const RadialExpr& rhs);
  RadialExpr& operator-=(const RadialExpr& rhs);
  RadialExpr& operator*=(const Rational& c);

  friend RadialExpr operator+(RadialExpr lhs, const RadialExpr& rhs) { return lhs += rhs; }
  friend RadialExpr operator-(RadialExpr lhs, const RadialExpr& rhs) { return lhs -= rhs; }
  friend RadialExpr operator-(RadialExpr f) { return f *= Rational(-1); }
  friend RadialExpr operator*(RadialExpr f, const Rational& c) { return f *= c; }
  friend RadialExpr operator*(const Rational& c, RadialExpr f) { return f *= c; }
  friend bool operator==(const RadialExpr& lhs, const RadialExpr& rhs) {
    return lhs.frame_ == rhs.frame_ && lhs.terms_ == rhs.terms_;
  }

 private:
  friend class TermAccumulator;

  AxisFrame frame_;
  TermMap terms_;
};

/// Collects raw (possibly non-canonical) terms and folds them into
/// canonical form.
class TermAccumulator {
 public:
  explicit TermAccumulator(AxisFrame frame);

  void add(TermKey key, const Rational& c);
  void add(const RadialExpr& f, const Rational& scale = 1);
  RadialExpr finish() &&;

 private:
  AxisFrame frame_;
  RadialExpr::TermMap terms_;
};

RadialExpr canonicalize(const AxisFrame& frame, std::span<const RadialTerm> raw);

/// Termwise product; Clifford coefficients multiply with the left factor on
/// the left.
RadialExpr re_mul(const RadialExpr& f, const RadialExpr& g);
inline RadialExpr operator*(const RadialExpr& f, const RadialExpr& g) { return re_mul(f, g); }
RadialExpr power(const RadialExpr& f, int n);

RadialExpr partial_derivative(const RadialExpr& f, Coord c);

enum class DiracScope { FirstGroup, SecondGroup, Full, CauchyRiemann };

/// sum_j e_j d/dx_j f over the scope, e_j multiplied from the left.
/// CauchyRiemann adds d/dX0 with unit coefficient.
RadialExpr dirac(const RadialExpr& f, DiracScope scope);

/// n-fold sum of second partials over the scope (CauchyRiemann includes X0).
RadialExpr laplacian_power(const RadialExpr& f, int n, DiracScope scope);

bool is_monogenic(const RadialExpr& f, DiracScope scope);

/// Total degree (monomial degree + a + b) when all terms agree; nullopt for
/// mixed degrees and for the zero expression.
std::optional<int> homogeneity_degree(const RadialExpr& f);

/// Euler operator sum_j X_j d/dX_j over every coordinate of the frame.
RadialExpr euler_operator(const RadialExpr& f);

/// True when every term is an honest polynomial: a, b even and >= 0.
bool is_polynomial(const RadialExpr& f);

/// True when f depends only on the coordinates of `group` (radii included).
bool depends_only_on(const RadialExpr& f, Group group);

/// True when every coefficient blade lies in the subalgebra generated by the
/// group's generators (e_1..e_p for X, e_{p+1}..e_m for Y).
bool values_in_group_algebra(const RadialExpr& f, Group group);

/// Alternative exact representation: within each parity sector of (a, b) all
/// terms share the sector-minimal exponents, with the surplus r^2 / rho^2
/// factors expanded into sum x_j^2 / sum y_j^2. Unique, but large; used for
/// display and cross-checks, never for arithmetic.
std::vector<RadialTerm> sector_minimal_terms(const RadialExpr& f);

/// Floating-point evaluation at a point (slot order x, y, X0), for smoke
/// tests only. Returns one value per blade.
std::map<Blade, double> evaluate(const AxisFrame& frame, std::span<const RadialTerm> terms,
                                 std::span<const double> point);
std::map<Blade, double> evaluate(const RadialExpr& f, std::span<const double> point);

}  // namespace fueter
