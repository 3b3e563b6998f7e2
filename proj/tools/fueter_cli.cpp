// Command-line front end: apply Fueter maps, check monogenicity, decompose
// polynomials, evaluate the radial Laplacian expansion and run the checks.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fueter/errors.hpp"
#include "fueter/fueter.hpp"
#include "fueter/golden.hpp"
#include "fueter/suites.hpp"
#include "fueter/text_io.hpp"

using namespace fueter;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240601;

std::uint64_t rng_seed() {
  if (const char* env = std::getenv("FUETER_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw PreconditionError(std::string("FUETER_SEED is not an unsigned integer: ") + env);
    }
  }
  return kDefaultSeed;
}

TextStyle parse_style(const std::string& name) {
  if (name == "plain") return TextStyle::Plain;
  if (name == "json") return TextStyle::Json;
  if (name == "latex") return TextStyle::Latex;
  throw PreconditionError("unknown format '" + name + "'");
}

Variant parse_variant(const std::string& name) {
  if (name == "plus") return Variant::Plus;
  if (name == "minus") return Variant::Minus;
  throw PreconditionError("unknown variant '" + name + "'");
}

Group parse_group(const std::string& name) {
  if (name == "x") return Group::X;
  if (name == "y") return Group::Y;
  throw PreconditionError("group must be x or y");
}

// "random" draws from the seeded generator; anything else is a rational list.
std::vector<Rational> vector_arg(const std::string& text, int n, Rng& rng) {
  if (text == "random") return random_vector(rng, n);
  return parse_rational_list(text);
}

struct ApplyArgs {
  int p = 3;
  int q = 3;
  std::string variant = "plus";
  std::string mu = "auto";
  std::string seed;
  std::string hk = "1";
  std::string hl = "1";
  std::string t;
  std::string s;
  std::string format = "plain";
};

int run_apply(const ApplyArgs& a) {
  const AxisFrame frame(a.p, a.q);
  Rng rng(rng_seed());
  VectorBindings vars;
  if (!a.t.empty()) vars["t"] = {Group::X, vector_arg(a.t, a.p, rng)};
  if (!a.s.empty()) vars["s"] = {Group::Y, vector_arg(a.s, a.q, rng)};
  if (a.t == "random" || a.s == "random") std::cerr << "rng seed " << rng_seed() << "\n";
  const SeedFunction w(parse_seed(a.seed));
  const RadialExpr hk = parse_expression(a.hk, frame, vars);
  const RadialExpr hl = parse_expression(a.hl, frame, vars);
  const Variant variant = parse_variant(a.variant);
  RadialExpr out(frame);
  if (a.mu == "auto") {
    out = w.is_antiholomorphic() ? ft_biaxial(w, hk, hl, variant) : ft_mu(w, hk, hl, variant);
  } else {
    int mu = 0;
    try {
      mu = std::stoi(a.mu);
    } catch (const std::exception&) {
      throw PreconditionError("--mu must be auto or a nonnegative integer");
    }
    out = ft_mu(w, hk, hl, variant, mu);
  }
  std::cout << format_expression(out, parse_style(a.format)) << "\n";
  return 0;
}

int run_check_monogenic(int p, int q, bool scalar_axis, const std::string& expr,
                        const std::string& scope_name) {
  const AxisFrame frame(p, q, scalar_axis);
  DiracScope scope = DiracScope::Full;
  if (scope_name == "x") {
    scope = DiracScope::FirstGroup;
  } else if (scope_name == "y") {
    scope = DiracScope::SecondGroup;
  } else if (scope_name == "cr") {
    scope = DiracScope::CauchyRiemann;
  } else if (scope_name != "full") {
    throw PreconditionError("scope must be full, x, y or cr");
  }
  std::cout << (is_monogenic(parse_expression(expr, frame), scope) ? "true" : "false") << "\n";
  return 0;
}

int run_fischer(int p, const std::string& group_name, const std::string& h_text,
                const std::string& format) {
  const Group group = parse_group(group_name);
  const AxisFrame frame = group == Group::X ? AxisFrame(p, 0) : AxisFrame(1, p);
  const auto layers = fischer_decompose(parse_expression(h_text, frame), group);
  const TextStyle style = parse_style(format);
  for (const auto& layer : layers) {
    std::cout << "n=" << layer.n << ": " << format_expression(layer.component, style) << "\n";
  }
  return 0;
}

struct LaplacianArgs {
  std::string h;
  int n = 1;
  int s1 = 0;
  int s2 = 0;
  int k = 0;
  int l = 0;
  int p = 3;
  int q = 3;
  std::string format = "plain";
};

int run_laplacian_power(const LaplacianArgs& a) {
  if (a.s1 < 0 || a.s1 > 1 || a.s2 < 0 || a.s2 > 1) throw PreconditionError("s1, s2 must be 0 or 1");
  if (a.k < 0 || a.l < 0) throw PreconditionError("k, l must be nonnegative");
  const BivariateRadial h = parse_bivariate(a.h);
  const BivariateRadial rhs = laplacian_power_rhs(h, a.n, a.s1, a.s2, {a.k, a.l, a.p, a.q});
  std::cout << format_bivariate(rhs, parse_style(a.format)) << "\n";

  // Cross-check against the Laplacian applied directly, with monogenic
  // factors of degrees k and l taken from the top Fischer layer of x1^k, y1^l.
  const AxisFrame frame(a.p, a.q);
  auto factor = [&](Group g, int degree) {
    const RadialExpr base = power(RadialExpr::coordinate(frame, {g, 1}), degree);
    return fischer_decompose(base, g).front().component;
  };
  RadialExpr tail = factor(Group::X, a.k) * factor(Group::Y, a.l);
  if (a.s2) {
    tail = RadialExpr::vector_variable(frame, Group::Y) * RadialExpr::radius(frame, Group::Y, -1) * tail;
  }
  if (a.s1) {
    tail = RadialExpr::vector_variable(frame, Group::X) * RadialExpr::radius(frame, Group::X, -1) * tail;
  }
  const RadialExpr direct = laplacian_power(to_radial_expr(h, frame) * tail, a.n, DiracScope::Full);
  const bool agree = direct == to_radial_expr(rhs, frame) * tail;
  std::cout << "direct check: " << (agree ? "agree" : "DISAGREE") << "\n";
  return agree ? 0 : 3;
}

int run_examples(int trials, const std::string& t_text, const std::string& s_text) {
  const std::uint64_t seed = rng_seed();
  Rng rng(seed);
  std::cout << "rng seed " << seed << "\n";
  int passed = 0;
  for (const auto& ex : golden_examples()) {
    bool ok = true;
    std::optional<Rational> ratio;
    bool proportional = true;
    for (int trial = 0; trial < trials; ++trial) {
      const auto t = t_text.empty() ? random_vector(rng, 3) : parse_rational_list(t_text);
      const auto s = s_text.empty() ? random_vector(rng, 3) : parse_rational_list(s_text);
      const GoldenOutcome out = run_golden(ex, t, s);
      ok = ok && out.exact;
      if (!out.ratio || (ratio && *ratio != *out.ratio)) proportional = false;
      if (out.ratio && !ratio) ratio = out.ratio;
    }
    if (ok) {
      ++passed;
      std::cout << "PASS " << ex.name << "\n";
    } else if (proportional && ratio) {
      std::cout << "FAIL " << ex.name << ": engine = " << ratio->get_str() << " x printed formula\n";
    } else {
      std::cout << "FAIL " << ex.name << ": engine output is not a multiple of the printed formula\n";
    }
  }
  std::cout << passed << "/" << golden_examples().size() << " PASS\n";
  return passed == static_cast<int>(golden_examples().size()) ? 0 : 3;
}

int run_selftest() {
  const std::uint64_t seed = rng_seed();
  Rng rng(seed);
  std::cout << "rng seed " << seed << "\n";
  bool all = true;
  for (const auto& check : acceptance_checks()) {
    const CheckResult r = check.run(rng);
    all = all && r.passed();
    std::cout << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.cases << " cases, "
              << r.failures << " failed): " << r.detail << "\n";
  }
  return all ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact biaxial Fueter map engine"};
  app.require_subcommand(1);

  ApplyArgs apply_args;
  auto* apply = app.add_subcommand("apply", "Compute a biaxial Fueter map");
  apply->add_option("--p", apply_args.p, "dimension of the x group")->capture_default_str();
  apply->add_option("--q", apply_args.q, "dimension of the y group")->capture_default_str();
  apply->add_option("--variant", apply_args.variant, "plus or minus")->capture_default_str();
  apply->add_option("--mu", apply_args.mu, "auto or an explicit order")->capture_default_str();
  apply->add_option("--seed", apply_args.seed, "seed polynomial in z, zbar")->required();
  apply->add_option("--Hk", apply_args.hk, "factor in the x group")->capture_default_str();
  apply->add_option("--Hl", apply_args.hl, "factor in the y group")->capture_default_str();
  apply->add_option("--t", apply_args.t, "vector t (rationals or 'random')");
  apply->add_option("--s", apply_args.s, "vector s (rationals or 'random')");
  apply->add_option("--format", apply_args.format, "plain, json or latex")->capture_default_str();

  int cm_p = 3;
  int cm_q = 3;
  bool cm_x0 = false;
  std::string cm_expr;
  std::string cm_scope = "full";
  auto* check = app.add_subcommand("check-monogenic", "Test an expression for monogenicity");
  check->add_option("--p", cm_p)->capture_default_str();
  check->add_option("--q", cm_q)->capture_default_str();
  check->add_flag("--scalar-axis", cm_x0, "add the X0 coordinate");
  check->add_option("--scope", cm_scope, "full, x, y or cr")->capture_default_str();
  check->add_option("--expr", cm_expr)->required();

  int fi_p = 3;
  std::string fi_group = "x";
  std::string fi_h;
  std::string fi_format = "plain";
  auto* fischer = app.add_subcommand("fischer", "Fischer decomposition of a homogeneous polynomial");
  fischer->add_option("--p", fi_p, "dimension of the group")->capture_default_str();
  fischer->add_option("--group", fi_group, "x or y")->capture_default_str();
  fischer->add_option("--H", fi_h)->required();
  fischer->add_option("--format", fi_format)->capture_default_str();

  LaplacianArgs lp;
  auto* lap = app.add_subcommand("laplacian-power", "Expand a power of the Laplacian on a radial profile");
  lap->set_help_flag("--help", "Print this help message and exit");
  lap->add_option("--h", lp.h, "Laurent polynomial in r, rho")->required();
  lap->add_option("--n", lp.n)->capture_default_str();
  lap->add_option("--s1", lp.s1)->capture_default_str();
  lap->add_option("--s2", lp.s2)->capture_default_str();
  lap->add_option("--k", lp.k)->capture_default_str();
  lap->add_option("--l", lp.l)->capture_default_str();
  lap->add_option("--p", lp.p)->capture_default_str();
  lap->add_option("--q", lp.q)->capture_default_str();
  lap->add_option("--format", lp.format)->capture_default_str();

  int ex_trials = 3;
  std::string ex_t;
  std::string ex_s;
  auto* examples = app.add_subcommand("examples", "Compare the six worked examples");
  examples->add_option("--trials", ex_trials)->capture_default_str()->check(CLI::PositiveNumber);
  examples->add_option("--t", ex_t, "fixed t instead of random draws");
  examples->add_option("--s", ex_s, "fixed s instead of random draws");

  auto* selftest = app.add_subcommand("selftest", "Run the full invariant suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*apply) return run_apply(apply_args);
    if (*check) return run_check_monogenic(cm_p, cm_q, cm_x0, cm_expr, cm_scope);
    if (*fischer) return run_fischer(fi_p, fi_group, fi_h, fi_format);
    if (*lap) return run_laplacian_power(lp);
    if (*examples) return run_examples(ex_trials, ex_t, ex_s);
    if (*selftest) return run_selftest();
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const VerificationError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
