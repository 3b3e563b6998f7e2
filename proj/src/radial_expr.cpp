#include "fueter/radial_expr.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>

#include "fueter/errors.hpp"

namespace fueter {

AxisFrame::AxisFrame(int p, int q, bool scalar_axis) : p_(p), q_(q), scalar_axis_(scalar_axis) {
  if (p < 1) throw PreconditionError("frame requires p >= 1");
  if (q < 0) throw PreconditionError("frame requires q >= 0");
  if (num_slots() > kMaxSlots) {
    throw PreconditionError("frame too large: at most " + std::to_string(kMaxSlots) +
                            " coordinates");
  }
}

bool AxisFrame::contains(Coord c) const {
  switch (c.group) {
    case Group::X:
      return c.index >= 1 && c.index <= p_;
    case Group::Y:
      return c.index >= 1 && c.index <= q_;
    case Group::Scalar:
      return scalar_axis_ && c.index == 0;
  }
  return false;
}

int AxisFrame::slot(Coord c) const {
  if (!contains(c)) throw PreconditionError("coordinate not in frame");
  switch (c.group) {
    case Group::X:
      return c.index - 1;
    case Group::Y:
      return p_ + c.index - 1;
    case Group::Scalar:
      return m();
  }
  return -1;
}

Group AxisFrame::group_of_slot(int s) const {
  if (s < p_) return Group::X;
  if (s < m()) return Group::Y;
  return Group::Scalar;
}

Coord AxisFrame::coord_at(int s) const {
  if (s < 0 || s >= num_slots()) throw PreconditionError("slot out of range");
  switch (group_of_slot(s)) {
    case Group::X:
      return Coord::x(s + 1);
    case Group::Y:
      return Coord::y(s - p_ + 1);
    case Group::Scalar:
      break;
  }
  return Coord::scalar_axis();
}

int AxisFrame::generator_index(Coord c) const {
  if (!contains(c) || c.group == Group::Scalar) {
    throw PreconditionError("coordinate has no Dirac generator");
  }
  return c.group == Group::X ? c.index : p_ + c.index;
}

std::string AxisFrame::coord_name(int s) const {
  const Coord c = coord_at(s);
  switch (c.group) {
    case Group::X:
      return "x" + std::to_string(c.index);
    case Group::Y:
      return "y" + std::to_string(c.index);
    case Group::Scalar:
      break;
  }
  return "X0";
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exps) d += e;
  return d;
}

bool operator<(const TermKey& lhs, const TermKey& rhs) {
  if (int c = std::memcmp(lhs.mono.exps.data(), rhs.mono.exps.data(), kMaxSlots); c != 0) {
    return c < 0;
  }
  if (lhs.a != rhs.a) return lhs.a < rhs.a;
  if (lhs.b != rhs.b) return lhs.b < rhs.b;
  return lhs.blade.bits() < rhs.blade.bits();
}

namespace {

void bump(Monomial& mono, int slot, int delta) {
  const int e = mono.exps[slot] + delta;
  if (e < 0 || e > std::numeric_limits<std::uint8_t>::max()) {
    throw PreconditionError("monomial exponent out of range");
  }
  mono.exps[slot] = static_cast<std::uint8_t>(e);
}

void check_key(const AxisFrame& frame, const TermKey& key) {
  if (key.blade.max_index() > frame.m()) {
    throw PreconditionError("blade " + key.blade.to_string() + " outside R_" +
                            std::to_string(frame.m()));
  }
  if (frame.q() == 0 && key.b != 0) throw PreconditionError("rho exponent in a q = 0 frame");
  for (int s = frame.num_slots(); s < kMaxSlots; ++s) {
    if (key.mono.exps[s] != 0) throw PreconditionError("monomial uses a slot outside the frame");
  }
}

// Raw first-derivative terms of c * key with respect to a slot.
template <typename Sink>
void differentiate_term(const AxisFrame& frame, const TermKey& key, const Rational& c, int slot,
                        Sink&& sink) {
  if (const int e = key.mono.exps[slot]; e > 0) {
    TermKey k = key;
    bump(k.mono, slot, -1);
    sink(k, c * e);
  }
  const Group g = frame.group_of_slot(slot);
  const int radial = g == Group::X ? key.a : (g == Group::Y ? key.b : 0);
  if (radial != 0) {
    // d/dx_j r^a = a x_j r^(a-2)
    TermKey k = key;
    bump(k.mono, slot, 1);
    (g == Group::X ? k.a : k.b) -= 2;
    sink(k, c * radial);
  }
}

std::vector<int> scope_slots(const AxisFrame& frame, DiracScope scope) {
  std::vector<int> slots;
  const bool x = scope != DiracScope::SecondGroup;
  const bool y = scope != DiracScope::FirstGroup;
  if (x) {
    for (int j = 0; j < frame.p(); ++j) slots.push_back(j);
  }
  if (y) {
    for (int j = 0; j < frame.q(); ++j) slots.push_back(frame.p() + j);
  }
  if (scope == DiracScope::CauchyRiemann) {
    if (!frame.has_scalar_axis()) {
      throw PreconditionError("Cauchy-Riemann operator needs a frame with scalar axis X0");
    }
    slots.push_back(frame.m());
  }
  return slots;
}

}  // namespace

RadialExpr::RadialExpr(AxisFrame frame) : frame_(frame) {}

RadialExpr RadialExpr::constant(const AxisFrame& frame, const Multivector& value) {
  if (value.dim() != frame.m()) throw PreconditionError("constant dimension differs from frame");
  TermAccumulator acc(frame);
  for (const auto& [blade, c] : value.terms()) acc.add(TermKey{{}, 0, 0, blade}, c);
  return std::move(acc).finish();
}

RadialExpr RadialExpr::scalar(const AxisFrame& frame, const Rational& value) {
  TermAccumulator acc(frame);
  acc.add(TermKey{}, value);
  return std::move(acc).finish();
}

RadialExpr RadialExpr::coordinate(const AxisFrame& frame, Coord c) {
  TermKey key;
  key.mono.exps[frame.slot(c)] = 1;
  TermAccumulator acc(frame);
  acc.add(key, 1);
  return std::move(acc).finish();
}

RadialExpr RadialExpr::radius(const AxisFrame& frame, Group group, int exponent) {
  TermKey key;
  if (group == Group::X) {
    key.a = exponent;
  } else if (group == Group::Y) {
    key.b = exponent;
  } else {
    throw PreconditionError("the scalar axis has no radius");
  }
  TermAccumulator acc(frame);
  acc.add(key, 1);
  return std::move(acc).finish();
}

RadialExpr RadialExpr::vector_variable(const AxisFrame& frame, Group group) {
  if (group == Group::Scalar) throw PreconditionError("no vector variable for the scalar axis");
  const int n = group == Group::X ? frame.p() : frame.q();
  TermAccumulator acc(frame);
  for (int j = 1; j <= n; ++j) {
    const Coord c{group, j};
    TermKey key;
    key.mono.exps[frame.slot(c)] = 1;
    key.blade = Blade::generator(frame.generator_index(c));
    acc.add(key, 1);
  }
  return std::move(acc).finish();
}

RadialExpr RadialExpr::constant_vector(const AxisFrame& frame, Group group,
                                       std::span<const Rational> values) {
  if (group == Group::Scalar) throw PreconditionError("no vector space for the scalar axis");
  const int n = group == Group::X ? frame.p() : frame.q();
  if (static_cast<int>(values.size()) != n) {
    throw PreconditionError("vector has " + std::to_string(values.size()) +
                            " components, group has " + std::to_string(n));
  }
  TermAccumulator acc(frame);
  for (int j = 1; j <= n; ++j) {
    TermKey key;
    key.blade = Blade::generator(frame.generator_index(Coord{group, j}));
    acc.add(key, values[j - 1]);
  }
  return std::move(acc).finish();
}

RadialExpr RadialExpr::inner_product(const AxisFrame& frame, Group group,
                                     std::span<const Rational> values) {
  if (group == Group::Scalar) throw PreconditionError("no vector space for the scalar axis");
  const int n = group == Group::X ? frame.p() : frame.q();
  if (static_cast<int>(values.size()) != n) {
    throw PreconditionError("vector has " + std::to_string(values.size()) +
                            " components, group has " + std::to_string(n));
  }
  TermAccumulator acc(frame);
  for (int j = 1; j <= n; ++j) {
    TermKey key;
    key.mono.exps[frame.slot(Coord{group, j})] = 1;
    acc.add(key, values[j - 1]);
  }
  return std::move(acc).finish();
}

std::vector<RadialTerm> RadialExpr::terms() const {
  std::vector<RadialTerm> out;
  for (const auto& [key, c] : terms_) {
    if (out.empty() || out.back().mono != key.mono || out.back().a != key.a ||
        out.back().b != key.b) {
      out.push_back(RadialTerm{key.mono, Multivector(frame_.m()), key.a, key.b});
    }
    out.back().coeff.add(key.blade, c);
  }
  return out;
}

RadialExpr& RadialExpr::operator+=(const RadialExpr& rhs) {
  if (!(rhs.frame_ == frame_)) throw PreconditionError("frame mismatch");
  for (const auto& [key, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

RadialExpr& RadialExpr::operator-=(const RadialExpr& rhs) {
  if (!(rhs.frame_ == frame_)) throw PreconditionError("frame mismatch");
  for (const auto& [key, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(key, -c);
    if (!inserted) {
      it->second -= c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }
  return *this;
}

RadialExpr& RadialExpr::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
  } else {
    for (auto& [key, value] : terms_) value *= c;
  }
  return *this;
}

TermAccumulator::TermAccumulator(AxisFrame frame) : frame_(frame) {}

void TermAccumulator::add(TermKey key, const Rational& c) {
  if (sgn(c) == 0) return;
  check_key(frame_, key);
  // x_p^2 -> r^2 - sum_{j<p} x_j^2, and likewise y_q^2 with rho.
  const int xs = frame_.p() - 1;
  if (key.mono.exps[xs] >= 2) {
    bump(key.mono, xs, -2);
    TermKey lifted = key;
    lifted.a += 2;
    add(lifted, c);
    for (int j = 0; j < xs; ++j) {
      TermKey k = key;
      bump(k.mono, j, 2);
      add(k, -c);
    }
    return;
  }
  if (frame_.q() > 0) {
    const int ys = frame_.m() - 1;
    if (key.mono.exps[ys] >= 2) {
      bump(key.mono, ys, -2);
      TermKey lifted = key;
      lifted.b += 2;
      add(lifted, c);
      for (int j = frame_.p(); j < ys; ++j) {
        TermKey k = key;
        bump(k.mono, j, 2);
        add(k, -c);
      }
      return;
    }
  }
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void TermAccumulator::add(const RadialExpr& f, const Rational& scale) {
  if (!(f.frame() == frame_)) throw PreconditionError("frame mismatch");
  for (const auto& [key, c] : f.flat_terms()) add(key, c * scale);
}

RadialExpr TermAccumulator::finish() && {
  RadialExpr out(frame_);
  out.terms_ = std::move(terms_);
  return out;
}

RadialExpr canonicalize(const AxisFrame& frame, std::span<const RadialTerm> raw) {
  TermAccumulator acc(frame);
  for (const auto& t : raw) {
    if (t.coeff.dim() != frame.m()) throw PreconditionError("term dimension differs from frame");
    for (const auto& [blade, c] : t.coeff.terms()) acc.add(TermKey{t.mono, t.a, t.b, blade}, c);
  }
  return std::move(acc).finish();
}

RadialExpr re_mul(const RadialExpr& f, const RadialExpr& g) {
  if (!(f.frame() == g.frame())) throw PreconditionError("frame mismatch");
  const AxisFrame& frame = f.frame();
  TermAccumulator acc(frame);
  for (const auto& [kf, cf] : f.flat_terms()) {
    for (const auto& [kg, cg] : g.flat_terms()) {
      TermKey k;
      for (int s = 0; s < frame.num_slots(); ++s) bump(k.mono, s, kf.mono.exps[s] + kg.mono.exps[s]);
      k.a = kf.a + kg.a;
      k.b = kf.b + kg.b;
      auto [sign, blade] = blade_product(kf.blade, kg.blade);
      k.blade = blade;
      acc.add(k, sign < 0 ? Rational(-(cf * cg)) : Rational(cf * cg));
    }
  }
  return std::move(acc).finish();
}

RadialExpr power(const RadialExpr& f, int n) {
  if (n < 0) throw PreconditionError("negative power of a general expression");
  RadialExpr out = RadialExpr::scalar(f.frame(), 1);
  for (int i = 0; i < n; ++i) out = re_mul(out, f);
  return out;
}

RadialExpr partial_derivative(const RadialExpr& f, Coord c) {
  const AxisFrame& frame = f.frame();
  const int slot = frame.slot(c);
  TermAccumulator acc(frame);
  for (const auto& [key, coeff] : f.flat_terms()) {
    differentiate_term(frame, key, coeff, slot,
                       [&](const TermKey& k, const Rational& v) { acc.add(k, v); });
  }
  return std::move(acc).finish();
}

RadialExpr dirac(const RadialExpr& f, DiracScope scope) {
  const AxisFrame& frame = f.frame();
  TermAccumulator acc(frame);
  for (int slot : scope_slots(frame, scope)) {
    const Coord c = frame.coord_at(slot);
    const bool unit = c.group == Group::Scalar;
    const Blade e = unit ? Blade::scalar() : Blade::generator(frame.generator_index(c));
    for (const auto& [key, coeff] : f.flat_terms()) {
      differentiate_term(frame, key, coeff, slot, [&](TermKey k, const Rational& v) {
        auto [sign, blade] = blade_product(e, k.blade);
        k.blade = blade;
        acc.add(k, sign < 0 ? Rational(-v) : v);
      });
    }
  }
  return std::move(acc).finish();
}

RadialExpr laplacian_power(const RadialExpr& f, int n, DiracScope scope) {
  if (n < 0) throw PreconditionError("negative Laplacian power");
  const AxisFrame& frame = f.frame();
  const auto slots = scope_slots(frame, scope);
  RadialExpr current = f;
  std::vector<std::pair<TermKey, Rational>> first;
  for (int step = 0; step < n && !current.is_zero(); ++step) {
    TermAccumulator acc(frame);
    for (const auto& [key, coeff] : current.flat_terms()) {
      for (int slot : slots) {
        first.clear();
        differentiate_term(frame, key, coeff, slot, [&](const TermKey& k, const Rational& v) {
          first.emplace_back(k, v);
        });
        for (const auto& [k1, c1] : first) {
          differentiate_term(frame, k1, c1, slot,
                             [&](const TermKey& k, const Rational& v) { acc.add(k, v); });
        }
      }
    }
    current = std::move(acc).finish();
  }
  return current;
}

bool is_monogenic(const RadialExpr& f, DiracScope scope) { return dirac(f, scope).is_zero(); }

std::optional<int> homogeneity_degree(const RadialExpr& f) {
  std::optional<int> degree;
  for (const auto& [key, c] : f.flat_terms()) {
    const int d = key.mono.degree() + key.a + key.b;
    if (degree && *degree != d) return std::nullopt;
    degree = d;
  }
  return degree;
}

RadialExpr euler_operator(const RadialExpr& f) {
  const AxisFrame& frame = f.frame();
  TermAccumulator acc(frame);
  for (int slot = 0; slot < frame.num_slots(); ++slot) {
    const RadialExpr coord = RadialExpr::coordinate(frame, frame.coord_at(slot));
    acc.add(re_mul(coord, partial_derivative(f, frame.coord_at(slot))));
  }
  return std::move(acc).finish();
}

bool is_polynomial(const RadialExpr& f) {
  return std::all_of(f.flat_terms().begin(), f.flat_terms().end(), [](const auto& kv) {
    const TermKey& k = kv.first;
    return k.a >= 0 && k.b >= 0 && k.a % 2 == 0 && k.b % 2 == 0;
  });
}

bool depends_only_on(const RadialExpr& f, Group group) {
  const AxisFrame& frame = f.frame();
  for (const auto& [key, c] : f.flat_terms()) {
    if ((key.a != 0 && group != Group::X) || (key.b != 0 && group != Group::Y)) return false;
    for (int s = 0; s < frame.num_slots(); ++s) {
      if (key.mono.exps[s] != 0 && frame.group_of_slot(s) != group) return false;
    }
  }
  return true;
}

bool values_in_group_algebra(const RadialExpr& f, Group group) {
  const AxisFrame& frame = f.frame();
  std::uint64_t mask = 0;
  if (group == Group::X) {
    for (int j = 1; j <= frame.p(); ++j) mask |= Blade::generator(j).bits();
  } else if (group == Group::Y) {
    for (int j = frame.p() + 1; j <= frame.m(); ++j) mask |= Blade::generator(j).bits();
  }
  return std::all_of(f.flat_terms().begin(), f.flat_terms().end(),
                     [mask](const auto& kv) { return (kv.first.blade.bits() & ~mask) == 0; });
}

std::vector<RadialTerm> sector_minimal_terms(const RadialExpr& f) {
  const AxisFrame& frame = f.frame();
  std::array<std::optional<std::pair<int, int>>, 4> minimal;
  for (const auto& [key, c] : f.flat_terms()) {
    // Start from the lowest nonnegative exponent of the sector's parity.
    auto& slot = minimal[key.sector()];
    if (!slot) slot = std::pair{key.a & 1, key.b & 1};
    slot->first = std::min(slot->first, key.a);
    slot->second = std::min(slot->second, key.b);
  }
  // Plain merge without x_p^2 folding.
  std::map<TermKey, Rational> merged;
  auto put = [&merged](const TermKey& k, const Rational& c) {
    auto [it, inserted] = merged.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) merged.erase(it);
    }
  };
  for (const auto& [key, c] : f.flat_terms()) {
    const auto [amin, bmin] = *minimal[key.sector()];
    std::vector<std::pair<TermKey, Rational>> work{{key, c}};
    auto expand = [&](int count, int first_slot, int n_slots) {
      for (int i = 0; i < count; ++i) {
        std::vector<std::pair<TermKey, Rational>> next;
        for (const auto& [k, v] : work) {
          for (int j = 0; j < n_slots; ++j) {
            TermKey nk = k;
            bump(nk.mono, first_slot + j, 2);
            next.emplace_back(nk, v);
          }
        }
        work = std::move(next);
      }
    };
    expand((key.a - amin) / 2, 0, frame.p());
    expand((key.b - bmin) / 2, frame.p(), frame.q());
    for (auto& [k, v] : work) {
      k.a = amin;
      k.b = bmin;
      put(k, v);
    }
  }
  std::vector<RadialTerm> out;
  for (const auto& [key, c] : merged) {
    if (out.empty() || out.back().mono != key.mono || out.back().a != key.a ||
        out.back().b != key.b) {
      out.push_back(RadialTerm{key.mono, Multivector(frame.m()), key.a, key.b});
    }
    out.back().coeff.add(key.blade, c);
  }
  return out;
}

std::map<Blade, double> evaluate(const AxisFrame& frame, std::span<const RadialTerm> terms,
                                 std::span<const double> point) {
  if (static_cast<int>(point.size()) != frame.num_slots()) {
    throw PreconditionError("evaluation point has the wrong number of coordinates");
  }
  double r2 = 0.0;
  double rho2 = 0.0;
  for (int j = 0; j < frame.p(); ++j) r2 += point[j] * point[j];
  for (int j = 0; j < frame.q(); ++j) rho2 += point[frame.p() + j] * point[frame.p() + j];
  const double r = std::sqrt(r2);
  const double rho = std::sqrt(rho2);
  std::map<Blade, double> out;
  for (const auto& t : terms) {
    double v = std::pow(r, t.a) * (frame.q() > 0 ? std::pow(rho, t.b) : 1.0);
    for (int s = 0; s < frame.num_slots(); ++s) v *= std::pow(point[s], t.mono.exps[s]);
    for (const auto& [blade, c] : t.coeff.terms()) out[blade] += v * c.get_d();
  }
  return out;
}

std::map<Blade, double> evaluate(const RadialExpr& f, std::span<const double> point) {
  const auto terms = f.terms();
  return evaluate(f.frame(), terms, point);
}

}  // namespace fueter
