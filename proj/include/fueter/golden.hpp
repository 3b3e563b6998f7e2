#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "fueter/fueter.hpp"
#include "fueter/text_io.hpp"

namespace fueter {

/// One worked biaxial example in p = q = 3 with Hk = <x,t>^k, Hl = <y,s>.
struct GoldenExample {
  std::string name;
  Variant variant;
  std::string seed;
  std::string hk;
  std::string hl;
  std::string formula;  // expected output in the expression grammar
};

const std::array<GoldenExample, 6>& golden_examples();

struct GoldenOutcome {
  bool exact = false;
  /// engine == ratio * expected, when the two are proportional.
  std::optional<Rational> ratio;
  RadialExpr engine;
  RadialExpr expected;
};

GoldenOutcome run_golden(const GoldenExample& ex, const std::vector<Rational>& t,
                         const std::vector<Rational>& s);

/// c with f == c * g, if one exists (g nonzero).
std::optional<Rational> proportionality(const RadialExpr& f, const RadialExpr& g);

}  // namespace fueter
