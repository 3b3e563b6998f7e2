#include "fueter/radial_calc.hpp"

#include <sstream>

#include "fueter/errors.hpp"

namespace fueter {

BivariateRadial BivariateRadial::monomial(int a, int b, Rational c) {
  BivariateRadial f;
  f.add(a, b, c);
  return f;
}

Rational BivariateRadial::coefficient(int a, int b) const {
  auto it = terms_.find({a, b});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivariateRadial::add(int a, int b, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(Key{a, b}, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

BivariateRadial& BivariateRadial::operator+=(const BivariateRadial& rhs) {
  for (const auto& [k, c] : rhs.terms_) add(k.first, k.second, c);
  return *this;
}

BivariateRadial& BivariateRadial::operator-=(const BivariateRadial& rhs) {
  for (const auto& [k, c] : rhs.terms_) add(k.first, k.second, -c);
  return *this;
}

BivariateRadial& BivariateRadial::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& [k, v] : terms_) v *= c;
  }
  return *this;
}

BivariateRadial operator*(const BivariateRadial& f, const BivariateRadial& g) {
  BivariateRadial out;
  for (const auto& [kf, cf] : f.terms_) {
    for (const auto& [kg, cg] : g.terms_) out.add(kf.first + kg.first, kf.second + kg.second, cf * cg);
  }
  return out;
}

std::string BivariateRadial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    os << Rational(abs(c)).get_str() << " * r^" << k.first << " * rho^" << k.second;
  }
  return os.str();
}

BivariateRadial shift(const BivariateRadial& f, int da, int db) {
  BivariateRadial out;
  for (const auto& [k, c] : f.terms()) out.add(k.first + da, k.second + db, c);
  return out;
}

BivariateRadial partial(const BivariateRadial& f, RadialVar var) {
  BivariateRadial out;
  for (const auto& [k, c] : f.terms()) {
    if (var == RadialVar::R) {
      out.add(k.first - 1, k.second, c * k.first);
    } else {
      out.add(k.first, k.second - 1, c * k.second);
    }
  }
  return out;
}

namespace {

// Applies r^a -> (a + offset) r^(a-2) n times.
BivariateRadial apply_lowering(BivariateRadial f, int n, RadialVar var, int offset) {
  if (n < 0) throw PreconditionError("negative operator power");
  for (int i = 0; i < n && !f.is_zero(); ++i) {
    BivariateRadial next;
    for (const auto& [k, c] : f.terms()) {
      if (var == RadialVar::R) {
        next.add(k.first - 2, k.second, c * (k.first + offset));
      } else {
        next.add(k.first, k.second - 2, c * (k.second + offset));
      }
    }
    f = std::move(next);
  }
  return f;
}

}  // namespace

BivariateRadial op_xinv_d(const BivariateRadial& f, int n, RadialVar var) {
  return apply_lowering(f, n, var, 0);
}

BivariateRadial op_d_xinv(const BivariateRadial& f, int n, RadialVar var) {
  return apply_lowering(f, n, var, -1);
}

BivariateRadial delta2_power(const BivariateRadial& f, int n) {
  if (n < 0) throw PreconditionError("negative Laplacian power");
  BivariateRadial out = f;
  for (int i = 0; i < n && !out.is_zero(); ++i) {
    BivariateRadial next;
    for (const auto& [k, c] : out.terms()) {
      const auto [a, b] = k;
      next.add(a - 2, b, c * a * (a - 1));
      next.add(a, b - 2, c * b * (b - 1));
    }
    out = std::move(next);
  }
  return out;
}

Integer d_coeff(int j1, int j2, const BiaxialParams& params) {
  if (j1 < 0 || j2 < 0) throw PreconditionError("D indices must be nonnegative");
  Integer d = 1;
  for (int s = 1; s <= j1; ++s) d *= 2 * params.k + params.p - (2 * s - 1);
  for (int s = 1; s <= j2; ++s) d *= 2 * params.l + params.q - (2 * s - 1);
  return d;
}

Integer multinomial(int n, int j1, int j2) {
  if (n < 0 || j1 < 0 || j2 < 0 || j1 + j2 > n) {
    throw PreconditionError("multinomial requires 0 <= j1 + j2 <= n");
  }
  Integer a;
  Integer b;
  mpz_bin_uiui(a.get_mpz_t(), n, j1);
  mpz_bin_uiui(b.get_mpz_t(), n - j1, j2);
  return a * b;
}

Integer double_factorial(int n) {
  if (n < -1) throw PreconditionError("double factorial undefined below -1");
  Integer out = 1;
  for (int i = n; i > 1; i -= 2) out *= i;
  return out;
}

BivariateRadial w_term(const BivariateRadial& h, int n, int j1, int j2, int s1, int s2) {
  if (j1 < 0 || j2 < 0 || j1 + j2 > n) throw PreconditionError("W indices require j1 + j2 <= n");
  if ((s1 != 0 && s1 != 1) || (s2 != 0 && s2 != 1)) {
    throw PreconditionError("W parities must be 0 or 1");
  }
  BivariateRadial f = delta2_power(h, n - j1 - j2);
  f = s1 == 0 ? op_xinv_d(f, j1, RadialVar::R) : op_d_xinv(f, j1, RadialVar::R);
  f = s2 == 0 ? op_xinv_d(f, j2, RadialVar::Rho) : op_d_xinv(f, j2, RadialVar::Rho);
  return f;
}

BivariateRadial laplacian_power_rhs(const BivariateRadial& h, int n, int s1, int s2,
                           const BiaxialParams& params) {
  if (n < 1) throw PreconditionError("Laplacian power must be at least 1");
  BivariateRadial out;
  for (int j1 = 0; j1 <= n; ++j1) {
    for (int j2 = 0; j1 + j2 <= n; ++j2) {
      const Integer d = d_coeff(j1, j2, params);
      if (d == 0) continue;
      const Rational weight(multinomial(n, j1, j2) * d);
      out += w_term(h, n, j1, j2, s1, s2) * weight;
    }
  }
  return out;
}

RadialExpr to_radial_expr(const BivariateRadial& f, const AxisFrame& frame) {
  TermAccumulator acc(frame);
  for (const auto& [k, c] : f.terms()) acc.add(TermKey{{}, k.first, k.second, Blade::scalar()}, c);
  return std::move(acc).finish();
}

}  // namespace fueter
