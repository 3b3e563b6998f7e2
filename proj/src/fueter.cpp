#include "fueter/fueter.hpp"

#include <set>
#include <string>

#include "fueter/errors.hpp"
#include "fueter/linsolve.hpp"

namespace fueter {

namespace {

void require_odd_biaxial(const AxisFrame& frame) {
  if (frame.q() < 1) throw PreconditionError("biaxial map needs q >= 1");
  if (frame.p() % 2 == 0 || frame.q() % 2 == 0) {
    throw PreconditionError("biaxial map needs odd p and q (got p=" + std::to_string(frame.p()) +
                            ", q=" + std::to_string(frame.q()) + ")");
  }
}

const char* group_name(Group g) { return g == Group::X ? "x" : "y"; }

// Degree of a homogeneous polynomial factor in one group; -1 for zero.
int factor_degree(const RadialExpr& h, Group group, bool require_monogenic) {
  if (h.is_zero()) return -1;
  const std::string name = std::string("factor in ") + group_name(group);
  if (!depends_only_on(h, group) || !is_polynomial(h)) {
    throw PreconditionError(name + " must be a polynomial in its own group's coordinates");
  }
  if (!values_in_group_algebra(h, group)) {
    throw PreconditionError(name + " must take values in its group's Clifford algebra");
  }
  const auto degree = homogeneity_degree(h);
  if (!degree) throw PreconditionError(name + " is not homogeneous");
  if (require_monogenic) {
    const auto scope = group == Group::X ? DiracScope::FirstGroup : DiracScope::SecondGroup;
    if (!is_monogenic(h, scope)) throw PreconditionError(name + " is not monogenic");
  }
  return *degree;
}

RadialExpr assert_monogenic(RadialExpr f, DiracScope scope, const char* what) {
  if (!is_monogenic(f, scope)) {
    throw VerificationError(std::string(what) + " output failed its monogenicity check");
  }
  return f;
}

RadialExpr vector_over_radius(const AxisFrame& frame, Group group) {
  return RadialExpr::vector_variable(frame, group) * RadialExpr::radius(frame, group, -1);
}

// u(X0, R) as a BivariateRadial keyed (R exponent, X0 exponent).
BivariateRadial classical_lift(const RealBivarPoly& poly) {
  BivariateRadial out;
  for (const auto& [k, c] : poly.terms) out.add(k.second, k.first, c);
  return out;
}

RadialExpr classical_to_expr(const BivariateRadial& f, const AxisFrame& frame) {
  const int x0 = frame.slot(Coord::scalar_axis());
  TermAccumulator acc(frame);
  for (const auto& [k, c] : f.terms()) {
    if (k.second < 0) throw PreconditionError("negative X0 power");
    TermKey key;
    key.a = k.first;
    key.mono.exps[x0] = static_cast<std::uint8_t>(k.second);
    acc.add(key, c);
  }
  return std::move(acc).finish();
}

void require_classical_frame(const AxisFrame& frame) {
  if (frame.q() != 0 || !frame.has_scalar_axis()) {
    throw PreconditionError("classical map needs a single-axis frame with scalar axis X0");
  }
  if (frame.m() % 2 == 0) throw PreconditionError("classical map needs odd m");
}

}  // namespace

ExprParity parity_split(const RadialExpr& f) {
  TermAccumulator even(f.frame());
  TermAccumulator odd(f.frame());
  for (const auto& [key, c] : f.flat_terms()) (key.blade.is_even() ? even : odd).add(key, c);
  return {std::move(even).finish(), std::move(odd).finish()};
}

RadialExpr biaxial_integrand(const BivariateRadial& u, const BivariateRadial& v,
                             const RadialExpr& pk, const RadialExpr& pl, Variant variant) {
  const AxisFrame& frame = pk.frame();
  const RadialExpr ue = to_radial_expr(u, frame);
  const RadialExpr ve = to_radial_expr(v, frame);
  const RadialExpr omega = vector_over_radius(frame, Group::X);
  const RadialExpr nu = vector_over_radius(frame, Group::Y);
  const RadialExpr profile =
      variant == Variant::Plus ? ue + omega * nu * ve : omega * ue + nu * ve;
  return profile * pk * pl;
}

RadialExpr ft_biaxial(const SeedFunction& w, const RadialExpr& hk, const RadialExpr& hl,
                      Variant variant) {
  const AxisFrame& frame = hk.frame();
  if (!(hl.frame() == frame)) throw PreconditionError("frame mismatch");
  require_odd_biaxial(frame);
  if (!w.is_antiholomorphic()) {
    throw PreconditionError("seed is not antiholomorphic (order " + std::to_string(w.mu()) + ")");
  }
  const int k = factor_degree(hk, Group::X, false);
  const int l = factor_degree(hl, Group::Y, false);
  if (k < 0 || l < 0) return RadialExpr(frame);
  const auto [u, v] = split_uv(w.w());
  const RadialExpr integrand = biaxial_integrand(lift_to_radial(u), lift_to_radial(v), hk, hl, variant);
  const int exponent = k + l + (frame.m() - 2) / 2;
  return assert_monogenic(laplacian_power(integrand, exponent, DiracScope::Full), DiracScope::Full,
                          variant == Variant::Plus ? "Ft+" : "Ft-");
}

namespace {

struct MuInputs {
  int k;
  int l;
  int mu;
};

MuInputs check_mu_inputs(const SeedFunction& w, const RadialExpr& pk, const RadialExpr& pl,
                         std::optional<int> mu_override) {
  if (!(pl.frame() == pk.frame())) throw PreconditionError("frame mismatch");
  require_odd_biaxial(pk.frame());
  const int k = factor_degree(pk, Group::X, true);
  const int l = factor_degree(pl, Group::Y, true);
  int mu = w.mu();
  if (mu_override) {
    if (*mu_override < w.mu()) {
      throw PreconditionError("declared mu " + std::to_string(*mu_override) +
                              " is below the seed order " + std::to_string(w.mu()));
    }
    mu = *mu_override;
  }
  return {k, l, mu};
}

}  // namespace

RadialExpr ft_mu(const SeedFunction& w, const RadialExpr& pk, const RadialExpr& pl, Variant variant,
                 std::optional<int> mu_override) {
  const auto [k, l, mu] = check_mu_inputs(w, pk, pl, mu_override);
  const AxisFrame& frame = pk.frame();
  if (k < 0 || l < 0) return RadialExpr(frame);
  const auto [u, v] = split_uv(w.w());
  const RadialExpr integrand = biaxial_integrand(lift_to_radial(u), lift_to_radial(v), pk, pl, variant);
  const int exponent = mu + k + l + (frame.m() - 2) / 2;
  return assert_monogenic(laplacian_power(integrand, exponent, DiracScope::Full), DiracScope::Full,
                          "Ft^mu");
}

ClosedFormData closed_form_data(const SeedFunction& w, const BiaxialParams& params,
                                Variant variant, int mu) {
  if (params.p % 2 == 0 || params.q % 2 == 0) throw PreconditionError("closed form needs odd p, q");
  const int j1 = params.k + (params.p - 1) / 2;
  const int j2 = params.l + (params.q - 1) / 2;
  ClosedFormData out;
  out.mu = mu;
  out.exponent = mu + j1 + j2;
  out.constant = double_factorial(2 * params.k + params.p - 1) *
                 double_factorial(2 * params.l + params.q - 1) * multinomial(out.exponent, j1, j2);
  const auto [u, v] = split_uv(w.w());
  const BivariateRadial du = delta2_power(lift_to_radial(u), mu);
  const BivariateRadial dv = delta2_power(lift_to_radial(v), mu);
  out.components.kind = variant;
  if (variant == Variant::Plus) {
    out.components.first = op_xinv_d(op_xinv_d(du, j1, RadialVar::R), j2, RadialVar::Rho);
    out.components.second = op_d_xinv(op_d_xinv(dv, j1, RadialVar::R), j2, RadialVar::Rho);
  } else {
    out.components.first = op_xinv_d(op_d_xinv(du, j1, RadialVar::R), j2, RadialVar::Rho);
    out.components.second = op_d_xinv(op_xinv_d(dv, j1, RadialVar::R), j2, RadialVar::Rho);
  }
  return out;
}

RadialExpr ft_closed_form(const SeedFunction& w, const RadialExpr& pk, const RadialExpr& pl,
                          Variant variant, std::optional<int> mu_override) {
  const auto [k, l, mu] = check_mu_inputs(w, pk, pl, mu_override);
  const AxisFrame& frame = pk.frame();
  if (k < 0 || l < 0) return RadialExpr(frame);
  const ClosedFormData data = closed_form_data(w, {k, l, frame.p(), frame.q()}, variant, mu);
  const Rational c(data.constant);
  return biaxial_integrand(data.components.first * c, data.components.second * c, pk, pl, variant);
}

RadialExpr fueter_classical(const SeedFunction& w, const RadialExpr& pk) {
  const AxisFrame& frame = pk.frame();
  require_classical_frame(frame);
  if (!w.is_holomorphic()) throw PreconditionError("classical map needs a holomorphic seed");
  const int degree = factor_degree(pk, Group::X, true);
  if (degree < 0) return RadialExpr(frame);
  const auto [u, v] = split_uv(w.w());
  const RadialExpr ue = classical_to_expr(classical_lift(u), frame);
  const RadialExpr ve = classical_to_expr(classical_lift(v), frame);
  const RadialExpr integrand = (ue + vector_over_radius(frame, Group::X) * ve) * pk;
  const int exponent = degree + (frame.m() - 1) / 2;
  return assert_monogenic(laplacian_power(integrand, exponent, DiracScope::CauchyRiemann),
                          DiracScope::CauchyRiemann, "classical Fueter");
}

RadialExpr classical_closed_form(const SeedFunction& w, const RadialExpr& pk) {
  const AxisFrame& frame = pk.frame();
  require_classical_frame(frame);
  if (!w.is_holomorphic()) throw PreconditionError("classical map needs a holomorphic seed");
  const int degree = factor_degree(pk, Group::X, true);
  if (degree < 0) return RadialExpr(frame);
  const int n = degree + (frame.m() - 1) / 2;
  const auto [u, v] = split_uv(w.w());
  const BivariateRadial a = op_xinv_d(classical_lift(u), n, RadialVar::R);
  const BivariateRadial b = op_d_xinv(classical_lift(v), n, RadialVar::R);
  const Rational c(double_factorial(2 * degree + frame.m() - 1));
  const RadialExpr profile =
      classical_to_expr(a, frame) + vector_over_radius(frame, Group::X) * classical_to_expr(b, frame);
  return c * (profile * pk);
}

namespace {

// H = sum_i R^{2i} S_{K-2i} with harmonic S; returns S_K, S_{K-2}, ...
std::vector<RadialExpr> harmonic_parts(const RadialExpr& h, int degree, Group group) {
  if (degree < 2 || h.is_zero()) return {h};
  const AxisFrame& frame = h.frame();
  const auto scope = group == Group::X ? DiracScope::FirstGroup : DiracScope::SecondGroup;
  const int dim = group == Group::X ? frame.p() : frame.q();
  const auto lower = harmonic_parts(laplacian_power(h, 1, scope), degree - 2, group);
  std::vector<RadialExpr> parts{h};
  for (std::size_t i = 0; i < lower.size(); ++i) {
    // Delta(R^{2a} S_j) = 2a (2a + 2j + dim - 2) R^{2a-2} S_j
    const int a = static_cast<int>(i) + 1;
    const int j = degree - 2 * a;
    const Rational c(2 * a * (2 * a + 2 * j + dim - 2));
    RadialExpr s = lower[i] * Rational(1 / c);
    parts[0] -= RadialExpr::radius(frame, group, 2 * a) * s;
    parts.push_back(std::move(s));
  }
  return parts;
}

}  // namespace

std::vector<FischerLayer> fischer_decompose(const RadialExpr& h, Group group) {
  if (group == Group::Scalar) throw PreconditionError("Fischer decomposition needs x or y");
  const AxisFrame& frame = h.frame();
  if (h.is_zero()) return {FischerLayer{0, RadialExpr(frame)}};
  if (!depends_only_on(h, group) || !is_polynomial(h)) {
    throw PreconditionError("Fischer input must be a polynomial in the group's coordinates");
  }
  const auto degree = homogeneity_degree(h);
  if (!degree) throw PreconditionError("Fischer input is not homogeneous");
  const int big_k = *degree;
  const auto scope = group == Group::X ? DiracScope::FirstGroup : DiracScope::SecondGroup;
  const int dim = group == Group::X ? frame.p() : frame.q();
  const RadialExpr vec = RadialExpr::vector_variable(frame, group);

  std::vector<FischerLayer> layers;
  for (int n = 0; n <= big_k; ++n) layers.push_back({n, RadialExpr(frame)});
  const auto parts = harmonic_parts(h, big_k, group);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    // R^{2i} = (-1)^i x^{2i}; S_j = P_j + x P_{j-1}, P_{j-1} = -dS_j / (dim + 2j - 2)
    const int j = big_k - 2 * static_cast<int>(i);
    const Rational sign = (i % 2 == 0) ? 1 : -1;
    const RadialExpr& s = parts[i];
    if (j == 0) {
      layers[2 * i].component = sign * s;
      continue;
    }
    const RadialExpr lower = dirac(s, scope) * Rational(Rational(-1) / (dim + 2 * j - 2));
    layers[2 * i].component = sign * (s - vec * lower);
    layers[2 * i + 1].component = sign * lower;
  }

  RadialExpr rebuilt(frame);
  RadialExpr vec_power = RadialExpr::scalar(frame, 1);
  for (const auto& layer : layers) {
    rebuilt += vec_power * layer.component;
    vec_power = vec_power * vec;
    if (layer.component.is_zero()) continue;
    if (!is_monogenic(layer.component, scope)) {
      throw VerificationError("Fischer layer " + std::to_string(layer.n) + " is not monogenic");
    }
    if (homogeneity_degree(layer.component) != big_k - layer.n) {
      throw VerificationError("Fischer layer " + std::to_string(layer.n) + " has the wrong degree");
    }
  }
  if (!(rebuilt == h)) throw VerificationError("Fischer layers do not reconstruct the input");
  return layers;
}

RadialExpr ft_general_via_fischer(const SeedFunction& w, const RadialExpr& hk,
                                  const RadialExpr& hl, Variant variant) {
  const AxisFrame& frame = hk.frame();
  if (!(hl.frame() == frame)) throw PreconditionError("frame mismatch");
  require_odd_biaxial(frame);
  if (!w.is_antiholomorphic()) throw PreconditionError("seed is not antiholomorphic");
  if (factor_degree(hk, Group::X, false) < 0 || factor_degree(hl, Group::Y, false) < 0) {
    return RadialExpr(frame);
  }
  const auto x_layers = fischer_decompose(hk, Group::X);
  const auto y_layers = fischer_decompose(hl, Group::Y);
  RadialExpr total(frame);
  for (const auto& xl : x_layers) {
    if (xl.component.is_zero()) continue;
    const ExprParity split = parity_split(xl.component);
    for (const auto& yl : y_layers) {
      if (yl.component.is_zero()) continue;
      const RouteFactor route = route_factor(xl.n, yl.n, variant);
      const SeedFunction seed(w.w() * route.factor);
      // y^{n2} commutes with even-valued factors and anticommutes n2 times
      // with odd-valued ones.
      const Rational odd_sign = yl.n % 2 == 0 ? 1 : -1;
      if (!split.even.is_zero()) {
        total += ft_mu(seed, split.even, yl.component, route.target, xl.n + yl.n);
      }
      if (!split.odd.is_zero()) {
        total += odd_sign * ft_mu(seed, split.odd, yl.component, route.target, xl.n + yl.n);
      }
    }
  }
  return total;
}

BiaxialComponents extract_components(const RadialExpr& f, const RadialExpr& pk,
                                     const RadialExpr& pl, Variant kind) {
  const AxisFrame& frame = f.frame();
  if (!(pk.frame() == frame) || !(pl.frame() == frame)) throw PreconditionError("frame mismatch");
  const RadialExpr base = pk * pl;
  if (base.is_zero()) throw PreconditionError("Pk Pl vanishes; components are undetermined");
  BiaxialComponents out;
  out.kind = kind;
  if (f.is_zero()) return out;

  const RadialExpr omega = vector_over_radius(frame, Group::X);
  const RadialExpr nu = vector_over_radius(frame, Group::Y);
  const RadialExpr shape1 = kind == Variant::Plus ? base : omega * base;
  const RadialExpr shape2 = kind == Variant::Plus ? omega * nu * base : nu * base;
  const RadialExpr* shapes[2] = {&shape1, &shape2};

  // Multiplying a canonical expression by r^a rho^b only shifts exponents, so
  // each unknown coefficient c_ab contributes a shifted copy of its shape.
  struct Unknown {
    int shape;
    int a;
    int b;
  };
  std::vector<Unknown> unknowns;
  for (int s = 0; s < 2; ++s) {
    std::set<std::pair<int, int>> shifts;
    for (const auto& [kf, cf] : f.flat_terms()) {
      for (const auto& [ks, cs] : shapes[s]->flat_terms()) {
        if (kf.mono == ks.mono && kf.blade == ks.blade) shifts.emplace(kf.a - ks.a, kf.b - ks.b);
      }
    }
    for (const auto& [a, b] : shifts) unknowns.push_back({s, a, b});
  }
  auto shifted = [](TermKey k, int a, int b) {
    k.a += a;
    k.b += b;
    return k;
  };
  std::map<TermKey, std::size_t> rows;
  for (const auto& [key, c] : f.flat_terms()) rows.try_emplace(key, rows.size());
  for (const auto& u : unknowns) {
    for (const auto& [ks, cs] : shapes[u.shape]->flat_terms()) {
      rows.try_emplace(shifted(ks, u.a, u.b), rows.size());
    }
  }
  std::vector<std::vector<Rational>> matrix(rows.size(), std::vector<Rational>(unknowns.size()));
  std::vector<Rational> rhs(rows.size());
  for (const auto& [key, c] : f.flat_terms()) rhs[rows.at(key)] = c;
  for (std::size_t col = 0; col < unknowns.size(); ++col) {
    const auto& u = unknowns[col];
    for (const auto& [ks, cs] : shapes[u.shape]->flat_terms()) {
      matrix[rows.at(shifted(ks, u.a, u.b))][col] += cs;
    }
  }
  const auto solution = solve_exact(std::move(matrix), std::move(rhs));
  if (!solution) {
    throw PreconditionError(std::string("expression is not of the biaxial ") +
                            (kind == Variant::Plus ? "(A + omega nu B)" : "(omega C + nu D)") +
                            " P_k P_l shape");
  }
  for (std::size_t col = 0; col < unknowns.size(); ++col) {
    const auto& u = unknowns[col];
    (u.shape == 0 ? out.first : out.second).add(u.a, u.b, solution->x[col]);
  }
  return out;
}

bool vekua_check(const BiaxialComponents& comp, const BiaxialParams& params) {
  const Rational kp(2 * params.k + params.p - 1);
  const Rational lq(2 * params.l + params.q - 1);
  const auto dr = [](const BivariateRadial& f) { return partial(f, RadialVar::R); };
  const auto drho = [](const BivariateRadial& f) { return partial(f, RadialVar::Rho); };
  if (comp.kind == Variant::Plus) {
    const BivariateRadial& a = comp.first;
    const BivariateRadial& b = comp.second;
    const BivariateRadial eq1 = dr(a) + drho(b) + lq * shift(b, 0, -1);
    const BivariateRadial eq2 = drho(a) - dr(b) - kp * shift(b, -1, 0);
    return eq1.is_zero() && eq2.is_zero();
  }
  const BivariateRadial& c = comp.first;
  const BivariateRadial& d = comp.second;
  const BivariateRadial eq1 = dr(c) + drho(d) + kp * shift(c, -1, 0) + lq * shift(d, 0, -1);
  const BivariateRadial eq2 = drho(c) - dr(d);
  return eq1.is_zero() && eq2.is_zero();
}

}  // namespace fueter
