// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any criterion fails.

#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "fueter/suites.hpp"

int main() {
  std::uint64_t seed = 20240601;
  if (const char* env = std::getenv("FUETER_SEED")) seed = std::strtoull(env, nullptr, 10);
  fueter::Rng rng(seed);
  std::cout << "rng seed " << seed << "\n";
  int index = 0;
  int failed = 0;
  for (const auto& check : fueter::acceptance_checks()) {
    const fueter::CheckResult r = check.run(rng);
    ++index;
    if (!r.passed()) ++failed;
    std::cout << std::setw(2) << index << ". " << (r.passed() ? "PASS" : "FAIL") << "  " << r.name
              << "  [" << r.cases << " cases, " << r.failures << " failed, " << std::fixed
              << std::setprecision(2) << r.seconds << " s]  " << r.detail << std::endl;
  }
  std::cout << (index - failed) << "/" << index << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
