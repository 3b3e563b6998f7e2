#include "fueter/suites.hpp"

#include <chrono>
#include <cmath>
#include <exception>
#include <sstream>

#include "fueter/errors.hpp"
#include "fueter/fueter.hpp"
#include "fueter/golden.hpp"
#include "fueter/radial_calc.hpp"
#include "fueter/seed.hpp"

namespace fueter {

namespace {

class Tally {
 public:
  explicit Tally(std::string name) : start_(std::chrono::steady_clock::now()) {
    result_.name = std::move(name);
  }

  void record(bool ok, const std::string& what) {
    ++result_.cases;
    if (!ok) fail(what);
  }

  // Runs body; an exception counts as a failed case.
  template <typename F>
  void run(const std::string& what, F&& body) {
    try {
      record(body(), what);
    } catch (const std::exception& e) {
      ++result_.cases;
      fail(what + ": " + e.what());
    }
  }

  void note(const std::string& text) { notes_ << text; }

  CheckResult finish() {
    result_.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    const std::string extra = notes_.str();
    if (result_.failures == 0) {
      result_.detail = std::to_string(result_.cases) + " cases" + (extra.empty() ? "" : "; " + extra);
    } else if (!extra.empty()) {
      result_.detail += "; " + extra;
    }
    return result_;
  }

 private:
  void fail(const std::string& what) {
    if (result_.failures++ == 0) result_.detail = "first failure: " + what;
  }

  CheckResult result_;
  std::ostringstream notes_;
  std::chrono::steady_clock::time_point start_;
};

RadialExpr blade_expr(const AxisFrame& frame, int j) {
  return RadialExpr::constant(frame, Multivector(frame.m(), Blade::generator(j)));
}

RadialExpr coord(const AxisFrame& frame, Coord c) { return RadialExpr::coordinate(frame, c); }

// x1 e1 - x2 e2, monogenic in the first group.
RadialExpr monogenic_x(const AxisFrame& frame) {
  return coord(frame, Coord::x(1)) * blade_expr(frame, 1) -
         coord(frame, Coord::x(2)) * blade_expr(frame, 2);
}

// y1 e_{p+1} - y2 e_{p+2}, monogenic in the second group.
RadialExpr monogenic_y(const AxisFrame& frame) {
  return coord(frame, Coord::y(1)) * blade_expr(frame, frame.p() + 1) -
         coord(frame, Coord::y(2)) * blade_expr(frame, frame.p() + 2);
}

RadialExpr one(const AxisFrame& frame) { return RadialExpr::scalar(frame, 1); }

SeedFunction seed_of(const ComplexBivarPoly& w) { return SeedFunction(w); }

ComplexBivarPoly zbar_z(int n, int m) {
  return pow(ComplexBivarPoly::zbar(), n) * pow(ComplexBivarPoly::z(), m);
}

const char* variant_name(Variant v) { return v == Variant::Plus ? "plus" : "minus"; }

std::string frame_name(const AxisFrame& f) {
  return "(" + std::to_string(f.p()) + "," + std::to_string(f.q()) + ")";
}

}  // namespace

Rational random_rational(Rng& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

std::vector<Rational> random_vector(Rng& rng, int n) {
  std::vector<Rational> v(n);
  for (;;) {
    bool nonzero = false;
    for (auto& c : v) {
      c = random_rational(rng);
      nonzero = nonzero || sgn(c) != 0;
    }
    if (nonzero) return v;
  }
}

CheckResult check_worked_examples(Rng& rng, int trials) {
  Tally tally("worked-examples");
  std::ostringstream ratios;
  for (const auto& ex : golden_examples()) {
    std::optional<Rational> seen;
    bool consistent = true;
    for (int trial = 0; trial < trials; ++trial) {
      const auto t = random_vector(rng, 3);
      const auto s = random_vector(rng, 3);
      tally.run(ex.name, [&] {
        const GoldenOutcome out = run_golden(ex, t, s);
        if (!out.ratio) {
          consistent = false;
        } else if (seen && *seen != *out.ratio) {
          consistent = false;
        } else {
          seen = out.ratio;
        }
        return out.exact;
      });
    }
    ratios << (ratios.tellp() > 0 ? ", " : "") << ex.name << ": "
           << (consistent && seen ? "engine = " + seen->get_str() + " x printed"
                                  : std::string("not proportional"));
  }
  tally.note(ratios.str());
  return tally.finish();
}

CheckResult check_monogenicity_sweep(Rng& rng) {
  Tally tally("monogenicity-sweep");
  for (auto [p, q] : {std::pair{3, 3}, {3, 5}, {5, 3}}) {
    const AxisFrame frame(p, q);
    std::vector<ComplexBivarPoly> seeds;
    for (int n = 0; n <= 11; ++n) seeds.push_back(zbar_z(n, 0));
    for (int n = 0; n <= 6; ++n) seeds.push_back(zbar_z(n, 0) * ComplexRational{0, 1});
    for (std::size_t si = 0; si < seeds.size(); ++si) {
      const SeedFunction w = seed_of(seeds[si]);
      const auto t = random_vector(rng, p);
      const auto s = random_vector(rng, q);
      const RadialExpr xt = RadialExpr::inner_product(frame, Group::X, t);
      const RadialExpr ys = RadialExpr::inner_product(frame, Group::Y, s);
      const std::vector<RadialExpr> hks = {one(frame), xt, xt * xt, monogenic_x(frame)};
      const std::vector<RadialExpr> hls = {one(frame), ys, monogenic_y(frame)};
      for (std::size_t a = 0; a < hks.size(); ++a) {
        for (std::size_t b = 0; b < hls.size(); ++b) {
          for (Variant v : {Variant::Plus, Variant::Minus}) {
            const std::string what = frame_name(frame) + " seed " + seeds[si].to_string() + " H#" +
                                     std::to_string(a) + std::to_string(b) + " " + variant_name(v);
            tally.run(what, [&] {
              return is_monogenic(ft_biaxial(w, hks[a], hls[b], v), DiracScope::Full);
            });
          }
        }
      }
    }
    // A seed of order 1 through the higher-order map.
    const SeedFunction w = seed_of(zbar_z(5, 1));
    for (const auto& pk : {one(frame), monogenic_x(frame)}) {
      for (const auto& pl : {one(frame), monogenic_y(frame)}) {
        for (Variant v : {Variant::Plus, Variant::Minus}) {
          tally.run(frame_name(frame) + " seed zbar^5 z " + variant_name(v), [&] {
            return is_monogenic(ft_mu(w, pk, pl, v), DiracScope::Full);
          });
        }
      }
    }
  }
  return tally.finish();
}

CheckResult check_laplacian_power() {
  Tally tally("laplacian-power-expansion");
  const AxisFrame frame(3, 3);
  const RadialExpr omega =
      RadialExpr::vector_variable(frame, Group::X) * RadialExpr::radius(frame, Group::X, -1);
  const RadialExpr nu =
      RadialExpr::vector_variable(frame, Group::Y) * RadialExpr::radius(frame, Group::Y, -1);
  const std::vector<std::pair<RadialExpr, int>> pks = {{one(frame), 0}, {monogenic_x(frame), 1}};
  const std::vector<std::pair<RadialExpr, int>> pls = {{one(frame), 0}, {monogenic_y(frame), 1}};
  for (int a = -1; a <= 3; ++a) {
    for (int b = -1; b <= 3; ++b) {
      const BivariateRadial h = BivariateRadial::monomial(a, b);
      for (int s1 = 0; s1 <= 1; ++s1) {
        for (int s2 = 0; s2 <= 1; ++s2) {
          for (const auto& [pk, k] : pks) {
            for (const auto& [pl, l] : pls) {
              RadialExpr tail = one(frame);
              if (s1) tail = tail * omega;
              if (s2) tail = tail * nu;
              tail = tail * pk * pl;
              const RadialExpr f = to_radial_expr(h, frame) * tail;
              RadialExpr lhs = f;
              for (int n = 1; n <= 3; ++n) {
                lhs = laplacian_power(lhs, 1, DiracScope::Full);
                const std::string what = "h=r^" + std::to_string(a) + " rho^" + std::to_string(b) +
                                         " n=" + std::to_string(n) + " s=(" + std::to_string(s1) +
                                         "," + std::to_string(s2) + ") k=" + std::to_string(k) +
                                         " l=" + std::to_string(l);
                tally.run(what, [&] {
                  const BivariateRadial rhs = laplacian_power_rhs(h, n, s1, s2, {k, l, 3, 3});
                  return lhs == to_radial_expr(rhs, frame) * tail;
                });
              }
            }
          }
        }
      }
    }
  }
  return tally.finish();
}

CheckResult check_radial_identities() {
  Tally tally("radial-operator-identities");
  const RadialVar x = RadialVar::R;
  auto d = [&](const BivariateRadial& f) { return partial(f, x); };
  auto xinv = [](const BivariateRadial& f) { return shift(f, -1, 0); };
  for (int a = -3; a <= 5; ++a) {
    const BivariateRadial f = BivariateRadial::monomial(a, 0);
    for (int n = 0; n <= 4; ++n) {
      const std::string tag = "f=x^" + std::to_string(a) + " n=" + std::to_string(n);
      const Rational two_n(2 * n);
      tally.run("(i) " + tag, [&] {
        return d(d(op_xinv_d(f, n, x))) == op_xinv_d(d(d(f)), n, x) - two_n * op_xinv_d(f, n + 1, x);
      });
      tally.run("(ii) " + tag, [&] {
        return d(d(op_d_xinv(f, n, x))) == op_d_xinv(d(d(f)), n, x) - two_n * op_d_xinv(f, n + 1, x);
      });
      tally.run("(iii) " + tag, [&] { return op_d_xinv(d(f), n, x) == d(op_xinv_d(f, n, x)); });
      tally.run("(iv) " + tag, [&] {
        return op_xinv_d(d(f), n, x) - d(op_d_xinv(f, n, x)) == two_n * xinv(op_d_xinv(f, n, x));
      });
    }
  }
  return tally.finish();
}

namespace {

struct ClosedFormCase {
  std::string what;
  SeedFunction w;
  RadialExpr pk;
  RadialExpr pl;
  Variant variant;
};

std::vector<ClosedFormCase> closed_form_grid() {
  std::vector<ClosedFormCase> out;
  for (auto [p, q] : {std::pair{3, 3}, {3, 5}, {5, 3}}) {
    const AxisFrame frame(p, q);
    for (int mu = 0; mu <= 2; ++mu) {
      for (int n : {4, 7}) {
        for (bool imag : {false, true}) {
          ComplexBivarPoly w = zbar_z(n, mu);
          if (imag) w = w * ComplexRational{0, 1};
          const SeedFunction seed = seed_of(w);
          for (const auto& pk : {one(frame), monogenic_x(frame)}) {
            for (const auto& pl : {one(frame), monogenic_y(frame)}) {
              for (Variant v : {Variant::Plus, Variant::Minus}) {
                const std::string what = frame_name(frame) + " seed " + w.to_string() + " P(" +
                                         std::to_string(pk.size() > 1) + "," +
                                         std::to_string(pl.size() > 1) + ") " + variant_name(v);
                out.push_back({what, seed, pk, pl, v});
              }
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

CheckResult check_closed_form() {
  Tally tally("closed-form-equality");
  for (const auto& c : closed_form_grid()) {
    tally.run(c.what + " mu=" + std::to_string(c.w.mu()), [&] {
      return ft_mu(c.w, c.pk, c.pl, c.variant) == ft_closed_form(c.w, c.pk, c.pl, c.variant);
    });
  }
  return tally.finish();
}

CheckResult check_vekua() {
  Tally tally("vekua-systems");
  for (const auto& c : closed_form_grid()) {
    tally.run(c.what, [&] {
      const RadialExpr f = ft_closed_form(c.w, c.pk, c.pl, c.variant);
      const AxisFrame& frame = f.frame();
      const BiaxialParams params{*homogeneity_degree(c.pk), *homogeneity_degree(c.pl), frame.p(),
                                 frame.q()};
      const BiaxialComponents comp = extract_components(f, c.pk, c.pl, c.variant);
      const ClosedFormData data = closed_form_data(c.w, params, c.variant, c.w.mu());
      const Rational k(data.constant);
      const bool matches = comp.first == data.components.first * k &&
                           comp.second == data.components.second * k;
      return matches && vekua_check(comp, params);
    });
  }
  return tally.finish();
}

CheckResult check_fischer(Rng& rng, int count) {
  Tally tally("fischer-decomposition");
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < count; ++trial) {
    const int p = coin(rng) ? 3 : 5;
    const Group group = coin(rng) ? Group::X : Group::Y;
    const AxisFrame frame = group == Group::X ? AxisFrame(p, 1) : AxisFrame(3, p);
    const int offset = group == Group::X ? 0 : 3;
    const int degree = std::uniform_int_distribution<int>(1, 3)(rng);
    std::uniform_int_distribution<int> pick(1, p);
    std::uniform_int_distribution<int> blade_bits(0, (1 << p) - 1);
    RadialExpr h(frame);
    const int nterms = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int t = 0; t < nterms; ++t) {
      RadialExpr term = RadialExpr::scalar(frame, random_rational(rng));
      for (int d = 0; d < degree; ++d) {
        term = term * coord(frame, {group, pick(rng)});
      }
      const int bits = blade_bits(rng);
      Multivector mv = Multivector::scalar(frame.m(), 1);
      for (int j = 1; j <= p; ++j) {
        if (bits & (1 << (j - 1))) mv = mv * Multivector(frame.m(), Blade::generator(offset + j));
      }
      h += term * RadialExpr::constant(frame, mv);
    }
    if (h.is_zero()) h = coord(frame, {group, 1}) * RadialExpr::scalar(frame, 1);
    if (homogeneity_degree(h) != degree) h = power(coord(frame, {group, 1}), degree);
    const std::string what = frame_name(frame) + " H=" + std::to_string(trial);
    const auto scope = group == Group::X ? DiracScope::FirstGroup : DiracScope::SecondGroup;
    tally.run(what, [&] {
      const auto layers = fischer_decompose(h, group);
      RadialExpr rebuilt(frame);
      bool ok = true;
      for (const auto& layer : layers) {
        ok = ok && is_monogenic(layer.component, scope);
        if (!layer.component.is_zero()) ok = ok && homogeneity_degree(layer.component) == degree - layer.n;
        rebuilt += power(RadialExpr::vector_variable(frame, group), layer.n) * layer.component;
      }
      ok = ok && rebuilt == h;
      // The top layer is monogenic, so decomposing it returns it unchanged.
      const RadialExpr& top = layers.front().component;
      if (!top.is_zero()) {
        const auto again = fischer_decompose(top, group);
        for (const auto& layer : again) {
          ok = ok && (layer.n == 0 ? layer.component == top : layer.component.is_zero());
        }
      }
      return ok;
    });
  }
  return tally.finish();
}

CheckResult check_pipeline(Rng& rng, int trials) {
  Tally tally("fischer-route-equivalence");
  const AxisFrame frame(3, 3);
  for (int n : {5, 8, 9, 10, 11}) {
    const SeedFunction w = seed_of(zbar_z(n, 0));
    for (int k = 1; k <= 2; ++k) {
      for (Variant v : {Variant::Plus, Variant::Minus}) {
        for (int trial = 0; trial < trials; ++trial) {
          const RadialExpr hk = power(RadialExpr::inner_product(frame, Group::X, random_vector(rng, 3)), k);
          const RadialExpr hl = RadialExpr::inner_product(frame, Group::Y, random_vector(rng, 3));
          tally.run("zbar^" + std::to_string(n) + " k=" + std::to_string(k) + " " + variant_name(v),
                    [&] { return ft_general_via_fischer(w, hk, hl, v) == ft_biaxial(w, hk, hl, v); });
        }
      }
    }
  }
  return tally.finish();
}

CheckResult check_classical() {
  Tally tally("classical-map");
  const AxisFrame frame(3, 0, true);
  tally.run("w=z^2 K=0 hand value", [&] {
    const RadialExpr out = fueter_classical(seed_of(zbar_z(0, 2)), one(frame));
    return out == RadialExpr::scalar(frame, -4);
  });
  const RadialExpr p1 = monogenic_x(frame);
  const RadialExpr p2 = coord(frame, Coord::x(2)) * blade_expr(frame, 2) -
                        coord(frame, Coord::x(3)) * blade_expr(frame, 3);
  for (int n = 2; n <= 4; ++n) {
    const SeedFunction w = seed_of(zbar_z(0, n));
    for (const auto& pk : {one(frame), p1, p2}) {
      tally.run("w=z^" + std::to_string(n) + " K=" + std::to_string(*homogeneity_degree(pk)), [&] {
        const RadialExpr out = fueter_classical(w, pk);
        return is_monogenic(out, DiracScope::CauchyRiemann) && out == classical_closed_form(w, pk);
      });
    }
  }
  return tally.finish();
}

namespace {

Multivector random_multivector(Rng& rng, int dim) {
  Multivector out(dim);
  const int nterms = std::uniform_int_distribution<int>(1, 4)(rng);
  std::uniform_int_distribution<std::uint64_t> bits(0, (std::uint64_t{1} << dim) - 1);
  for (int k = 0; k < nterms; ++k) out += Multivector(dim, Blade(bits(rng)), random_rational(rng));
  return out;
}

Multivector random_parity(Rng& rng, int dim, bool even) {
  const ParitySplit split = parity_split(random_multivector(rng, dim));
  return even ? split.even : split.odd;
}

bool has_parity(const Multivector& a, bool even) {
  for (const auto& [blade, c] : a.terms()) {
    if (blade.is_even() != even) return false;
  }
  return true;
}

std::vector<double> random_point(Rng& rng, int n) {
  std::uniform_real_distribution<double> mag(0.3, 2.0);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<double> pt(n);
  for (auto& v : pt) v = mag(rng) * (sign(rng) ? 1 : -1);
  return pt;
}

double max_abs(const std::map<Blade, double>& values) {
  double m = 0;
  for (const auto& [b, v] : values) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

CheckResult check_algebra_core(Rng& rng) {
  Tally tally("algebra-core");
  std::uniform_int_distribution<int> dims(1, 6);
  for (int i = 0; i < 400; ++i) {
    const int m = dims(rng);
    const Multivector a = random_multivector(rng, m);
    const Multivector b = random_multivector(rng, m);
    const Multivector c = random_multivector(rng, m);
    tally.record((a * b) * c == a * (b * c), "associativity in R_" + std::to_string(m));
  }
  for (int m = 1; m <= 6; ++m) {
    for (int j = 1; j <= m; ++j) {
      for (int k = 1; k <= m; ++k) {
        const Multivector ej(m, Blade::generator(j));
        const Multivector ek(m, Blade::generator(k));
        const Multivector expected = j == k ? Multivector::scalar(m, -2) : Multivector(m);
        tally.record(ej * ek + ek * ej == expected,
                     "e" + std::to_string(j) + " e" + std::to_string(k) + " relation");
      }
    }
  }
  for (int i = 0; i < 300; ++i) {
    const int m = dims(rng);
    const auto coords = random_vector(rng, m);
    Rational norm = 0;
    for (const auto& c : coords) norm += c * c;
    const Multivector v = vector_embed(m, coords);
    tally.record(v * v == Multivector::scalar(m, -norm), "vector square");
  }
  for (int i = 0; i < 300; ++i) {
    const int m = dims(rng);
    const bool ea = i % 2;
    const bool eb = (i / 2) % 2;
    const Multivector a = random_parity(rng, m, ea);
    const Multivector b = random_parity(rng, m, eb);
    tally.record(has_parity(a * b, ea == eb), "parity grading");
  }
  for (int i = 0; i < 100; ++i) {
    const Multivector a = random_multivector(rng, dims(rng));
    const ParitySplit s = parity_split(a);
    const ParitySplit again = parity_split(s.even);
    tally.record(s.even + s.odd == a && again.even == s.even && again.odd.is_zero(), "parity split");
  }

  // Zero-test smoke test: raw term lists that cancel through r^2 = sum x_j^2
  // must canonicalize to zero and evaluate to zero numerically; nonzero
  // canonical forms must not vanish on every sample.
  const AxisFrame frame(3, 3);
  std::uniform_int_distribution<int> exps(-3, 3);
  std::uniform_int_distribution<int> small(0, 2);
  std::uniform_int_distribution<std::uint64_t> bits(0, (1u << frame.m()) - 1);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<RadialTerm> raw;
    std::vector<RadialTerm> nonzero;
    for (int t = 0; t < 3; ++t) {
      RadialTerm term;
      for (int s = 0; s < frame.num_slots(); ++s) term.mono.exps[s] = static_cast<std::uint8_t>(small(rng) == 2);
      term.coeff = Multivector(frame.m(), Blade(bits(rng)), random_rational(rng) + 6);
      term.a = exps(rng);
      term.b = exps(rng);
      nonzero.push_back(term);
      raw.push_back(term);
      const Group g = t % 2 ? Group::Y : Group::X;
      const int n = g == Group::X ? frame.p() : frame.q();
      for (int j = 1; j <= n; ++j) {
        RadialTerm unfolded = term;
        unfolded.mono.exps[frame.slot({g, j})] += 2;
        (g == Group::X ? unfolded.a : unfolded.b) -= 2;
        unfolded.coeff *= Rational(-1);
        raw.push_back(unfolded);
      }
    }
    const RadialExpr canon = canonicalize(frame, raw);
    const RadialExpr nz = canonicalize(frame, nonzero);
    double worst = 0;
    double best_nonzero = 0;
    for (int k = 0; k < 20; ++k) {
      const auto pt = random_point(rng, frame.num_slots());
      worst = std::max(worst, max_abs(evaluate(frame, raw, pt)));
      best_nonzero = std::max(best_nonzero, max_abs(evaluate(nz, pt)));
    }
    tally.record(canon.is_zero() && worst < 1e-8, "zero-test cancellation sample " + std::to_string(trial));
    tally.record(nz.is_zero() == (best_nonzero < 1e-8), "zero-test nonzero sample " + std::to_string(trial));
  }
  return tally.finish();
}

std::vector<NamedCheck> acceptance_checks() {
  return {
      {"worked-examples", [](Rng& rng) { return check_worked_examples(rng, 3); }},
      {"monogenicity-sweep", [](Rng& rng) { return check_monogenicity_sweep(rng); }},
      {"laplacian-power-expansion", [](Rng&) { return check_laplacian_power(); }},
      {"radial-operator-identities", [](Rng&) { return check_radial_identities(); }},
      {"closed-form-equality", [](Rng&) { return check_closed_form(); }},
      {"fischer-decomposition", [](Rng& rng) { return check_fischer(rng, 50); }},
      {"fischer-route-equivalence", [](Rng& rng) { return check_pipeline(rng, 2); }},
      {"vekua-systems", [](Rng&) { return check_vekua(); }},
      {"classical-map", [](Rng&) { return check_classical(); }},
      {"algebra-core", [](Rng& rng) { return check_algebra_core(rng); }},
  };
}

}  // namespace fueter
