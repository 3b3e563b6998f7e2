#include "fueter/clifford.hpp"

#include <bit>
#include <sstream>

#include "fueter/errors.hpp"

namespace fueter {

Blade Blade::generator(int j) {
  if (j < 1 || j > kMaxGenerators) {
    throw PreconditionError("generator index out of range: " + std::to_string(j));
  }
  return Blade{std::uint64_t{1} << (j - 1)};
}

Blade Blade::from_indices(std::span<const int> indices) {
  std::uint64_t bits = 0;
  int last = 0;
  for (int j : indices) {
    if (j <= last) throw PreconditionError("blade indices must be strictly increasing");
    bits |= generator(j).bits_;
    last = j;
  }
  return Blade{bits};
}

int Blade::grade() const { return std::popcount(bits_); }

int Blade::max_index() const { return 64 - std::countl_zero(bits_); }

std::vector<int> Blade::indices() const {
  std::vector<int> out;
  for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
  return out;
}

std::string Blade::to_string(bool bracketed) const {
  if (bits_ == 0) return "1";
  const auto idx = indices();
  if (!bracketed && idx.back() < 10) {
    std::string s = "e";
    for (int j : idx) s += static_cast<char>('0' + j);
    return s;
  }
  std::string s = "e{";
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(idx[i]);
  }
  return s + "}";
}

bool operator<(Blade lhs, Blade rhs) {
  const std::uint64_t diff = lhs.bits_ ^ rhs.bits_;
  if (diff == 0) return false;
  const int d = std::countr_zero(diff);
  const std::uint64_t above = (d == 63) ? 0 : (~std::uint64_t{0} << (d + 1));
  // The set holding index d+1 is smaller unless the other one stops there.
  if (lhs.contains(d + 1)) return (rhs.bits_ & above) != 0;
  return (lhs.bits_ & above) == 0;
}

std::pair<int, Blade> blade_product(Blade a, Blade b) {
  // Transpositions: each generator of b passes every generator of a with a
  // larger index. Repeated generators contribute e_j^2 = -1.
  int swaps = 0;
  for (std::uint64_t rest = b.bits(); rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    const std::uint64_t above = (j == 63) ? 0 : (~std::uint64_t{0} << (j + 1));
    swaps += std::popcount(a.bits() & above);
  }
  swaps += std::popcount(a.bits() & b.bits());
  return {(swaps % 2) ? -1 : 1, Blade{a.bits() ^ b.bits()}};
}

Multivector::Multivector(int dim) : dim_(dim) {
  if (dim < 0 || dim > kMaxGenerators) throw PreconditionError("invalid Clifford dimension");
}

Multivector::Multivector(int dim, Blade blade, Rational coeff) : Multivector(dim) {
  add(blade, coeff);
}

Multivector Multivector::scalar(int dim, Rational value) {
  return Multivector(dim, Blade::scalar(), std::move(value));
}

void Multivector::check_blade(Blade blade) const {
  if (blade.max_index() > dim_) {
    throw PreconditionError("blade " + blade.to_string() + " outside R_" + std::to_string(dim_));
  }
}

Rational Multivector::coefficient(Blade blade) const {
  auto it = terms_.find(blade);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Multivector::add(Blade blade, const Rational& c) {
  if (sgn(c) == 0) return;
  check_blade(blade);
  auto [it, inserted] = terms_.try_emplace(blade, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

Multivector& Multivector::operator+=(const Multivector& rhs) {
  if (rhs.dim_ != dim_) throw PreconditionError("multivector dimension mismatch");
  for (const auto& [blade, c] : rhs.terms_) add(blade, c);
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  if (rhs.dim_ != dim_) throw PreconditionError("multivector dimension mismatch");
  for (const auto& [blade, c] : rhs.terms_) add(blade, -c);
  return *this;
}

Multivector& Multivector::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [blade, value] : terms_) value *= c;
  return *this;
}

bool operator==(const Multivector& lhs, const Multivector& rhs) {
  return lhs.dim_ == rhs.dim_ && lhs.terms_ == rhs.terms_;
}

std::string Multivector::to_string() const {
  if (terms_.empty()) return "0";
  const bool bracketed = dim_ >= 10;
  std::ostringstream os;
  bool first = true;
  for (const auto& [blade, c] : terms_) {
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (blade == Blade::scalar()) {
      os << mag.get_str();
    } else {
      if (mag != 1) os << mag.get_str() << "*";
      os << blade.to_string(bracketed);
    }
  }
  return os.str();
}

Multivector geometric_product(const Multivector& a, const Multivector& b) {
  if (a.dim() != b.dim()) throw PreconditionError("multivector dimension mismatch");
  Multivector out(a.dim());
  for (const auto& [ba, ca] : a.terms()) {
    for (const auto& [bb, cb] : b.terms()) {
      auto [sign, blade] = blade_product(ba, bb);
      Rational c = ca * cb;
      if (sign < 0) c = -c;
      out.add(blade, c);
    }
  }
  return out;
}

ParitySplit parity_split(const Multivector& a) {
  ParitySplit out{Multivector(a.dim()), Multivector(a.dim())};
  for (const auto& [blade, c] : a.terms()) (blade.is_even() ? out.even : out.odd).add(blade, c);
  return out;
}

Multivector vector_embed(int dim, std::span<const Rational> coords) {
  if (static_cast<int>(coords.size()) != dim) {
    throw PreconditionError("vector has " + std::to_string(coords.size()) +
                            " coordinates, expected " + std::to_string(dim));
  }
  Multivector v(dim);
  for (int j = 0; j < dim; ++j) v.add(Blade::generator(j + 1), coords[j]);
  return v;
}

}  // namespace fueter
