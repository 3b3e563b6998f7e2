#include "fueter/linsolve.hpp"

#include <utility>

#include "fueter/errors.hpp"

namespace fueter {

std::optional<ExactSolution> solve_exact(std::vector<std::vector<Rational>> a,
                                         std::vector<Rational> b) {
  const std::size_t rows = a.size();
  if (b.size() != rows) throw PreconditionError("right-hand side length differs from row count");
  const std::size_t cols = rows ? a.front().size() : 0;
  for (const auto& row : a) {
    if (row.size() != cols) throw PreconditionError("ragged coefficient matrix");
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && sgn(a[pivot][c]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[r]);
    std::swap(b[pivot], b[r]);
    const Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a[i][c]) == 0) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (sgn(a[r][j]) != 0) a[i][j] -= f * a[r][j];
      }
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (sgn(b[i]) != 0) return std::nullopt;
  }
  ExactSolution out;
  out.x.assign(cols, Rational(0));
  out.rank = static_cast<int>(r);
  for (std::size_t i = 0; i < r; ++i) out.x[pivot_col[i]] = b[i];
  return out;
}

}  // namespace fueter
