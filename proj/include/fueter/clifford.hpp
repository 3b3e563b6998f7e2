#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fueter/rational.hpp"

namespace fueter {

inline constexpr int kMaxGenerators = 63;

/// Basis element e_A of R_m, stored as a bitmask (bit j-1 <-> e_j).
class Blade {
 public:
  constexpr Blade() = default;
  constexpr explicit Blade(std::uint64_t bits) : bits_(bits) {}

  static Blade scalar() { return Blade{}; }
  static Blade generator(int j);
  // Indices must be strictly increasing and in 1..kMaxGenerators.
  static Blade from_indices(std::span<const int> indices);

  std::uint64_t bits() const { return bits_; }
  int grade() const;
  bool is_even() const { return grade() % 2 == 0; }
  int max_index() const;
  std::vector<int> indices() const;
  bool contains(int j) const { return (bits_ >> (j - 1)) & 1u; }

  // `1` for the scalar; `e12` when every index is below 10, `e{1,12}`
  // otherwise (or when `bracketed` is forced).
  std::string to_string(bool bracketed = false) const;

  friend bool operator==(Blade, Blade) = default;
  // Lexicographic order of the sorted index lists: 1 < e1 < e12 < e2.
  friend bool operator<(Blade lhs, Blade rhs);

 private:
  std::uint64_t bits_ = 0;
};

/// Product of two basis blades: e_A e_B = sign * e_{A xor B}.
std::pair<int, Blade> blade_product(Blade a, Blade b);

/// Element of R_m with exact rational coefficients.
class Multivector {
 public:
  using Terms = std::map<Blade, Rational>;

  explicit Multivector(int dim = 0);
  Multivector(int dim, Blade blade, Rational coeff = 1);

  static Multivector scalar(int dim, Rational value);

  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(Blade blade) const;
  // Adds c*e_A, dropping the entry if it cancels.
  void add(Blade blade, const Rational& c);

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(const Rational& c);

  friend Multivector operator+(Multivector lhs, const Multivector& rhs) { return lhs += rhs; }
  friend Multivector operator-(Multivector lhs, const Multivector& rhs) { return lhs -= rhs; }
  friend Multivector operator-(Multivector v) { return v *= Rational(-1); }
  friend Multivector operator*(Multivector v, const Rational& c) { return v *= c; }
  friend Multivector operator*(const Rational& c, Multivector v) { return v *= c; }
  friend bool operator==(const Multivector& lhs, const Multivector& rhs);

  std::string to_string() const;

 private:
  void check_blade(Blade blade) const;

  int dim_;
  Terms terms_;
};

Multivector geometric_product(const Multivector& a, const Multivector& b);
inline Multivector operator*(const Multivector& a, const Multivector& b) {
  return geometric_product(a, b);
}

struct ParitySplit {
  Multivector even;
  Multivector odd;
};

/// Even/odd parts by blade cardinality.
ParitySplit parity_split(const Multivector& a);

/// sum_j c_j e_j in R_m; coords must have exactly m entries.
Multivector vector_embed(int dim, std::span<const Rational> coords);

}  // namespace fueter
