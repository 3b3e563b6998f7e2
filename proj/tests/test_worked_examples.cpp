// The six worked p = q = 3 examples, compared exactly against the printed
// formulas, plus the measured proportionality constants.

#include <doctest.h>

#include "fueter/golden.hpp"

using namespace fueter;

namespace {

const std::vector<std::pair<std::vector<Rational>, std::vector<Rational>>> kDraws = {
    {{1, 0, 0}, {0, 1, 0}},
    {{2, -1, 3}, {-3, 1, Rational(2, 7)}},
    {{Rational(1, 2), 5, -2}, {1, 1, 1}},
};

}  // namespace

TEST_CASE("engine output is a fixed multiple of each printed formula") {
  const std::vector<Rational> constants = {-1536, 172032, 110592, -9216, 1548288, 12165120};
  for (std::size_t i = 0; i < golden_examples().size(); ++i) {
    for (const auto& [t, s] : kDraws) {
      const GoldenOutcome out = run_golden(golden_examples()[i], t, s);
      REQUIRE(out.ratio.has_value());
      CHECK_MESSAGE(*out.ratio == constants[i], golden_examples()[i].name);
    }
  }
}

TEST_CASE("engine output equals each printed formula exactly") {
  for (const auto& ex : golden_examples()) {
    for (const auto& [t, s] : kDraws) {
      const GoldenOutcome out = run_golden(ex, t, s);
      CHECK_MESSAGE(out.exact, ex.name << ": engine = "
                                       << (out.ratio ? out.ratio->get_str() : std::string("?"))
                                       << " x printed");
    }
  }
}
