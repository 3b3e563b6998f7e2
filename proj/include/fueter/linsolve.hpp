#pragma once

#include <optional>
#include <vector>

#include "fueter/rational.hpp"

namespace fueter {

struct ExactSolution {
  std::vector<Rational> x;  // free variables set to zero
  int rank = 0;
};

/// Exact Gauss-Jordan elimination for A x = b. Returns nullopt when the
/// system is inconsistent.
std::optional<ExactSolution> solve_exact(std::vector<std::vector<Rational>> a,
                                         std::vector<Rational> b);

}  // namespace fueter
