#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fueter/radial_expr.hpp"

namespace fueter {

/// Outcome of one verification suite.
struct CheckResult {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string detail;  // first failure, or a short summary
  double seconds = 0;
  bool passed() const { return cases > 0 && failures == 0; }
};

using Rng = std::mt19937_64;

/// Small random rational n/d with |n| <= 5, 1 <= d <= 4.
Rational random_rational(Rng& rng);
/// Random rational vector of length n, never all zero.
std::vector<Rational> random_vector(Rng& rng, int n);

CheckResult check_worked_examples(Rng& rng, int trials = 3);
CheckResult check_monogenicity_sweep(Rng& rng);
CheckResult check_laplacian_power();
CheckResult check_radial_identities();
CheckResult check_closed_form();
CheckResult check_fischer(Rng& rng, int count = 50);
CheckResult check_pipeline(Rng& rng, int trials = 2);
CheckResult check_vekua();
CheckResult check_classical();
CheckResult check_algebra_core(Rng& rng);

struct NamedCheck {
  std::string name;
  std::function<CheckResult(Rng&)> run;
};

/// The ten acceptance checks in order.
std::vector<NamedCheck> acceptance_checks();

}  // namespace fueter
