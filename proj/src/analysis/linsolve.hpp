#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cpl/algebra/bigint.hpp"

namespace cpl::analysis::detail {

using RatRow = std::vector<BigRational>;

struct ExactSolve {
  bool consistent = false;
  /// Number of free unknowns when consistent.
  std::size_t nullity = 0;
  /// Particular solution with free unknowns set to 0.
  RatRow x;
};

/// Gauss-Jordan over Q on rows [A | b], k unknowns.
inline ExactSolve solve_exact(std::vector<RatRow> rows, std::size_t k) {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < k && rank < rows.size(); ++col) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][col] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[rank], rows[p]);
    BigRational inv = 1 / rows[rank][col];
    for (auto& v : rows[rank]) v *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      BigRational f = rows[r][col];
      for (std::size_t c = col; c <= k; ++c) rows[r][c] -= f * rows[rank][c];
    }
    pivots.push_back(col);
    ++rank;
  }
  ExactSolve out;
  for (std::size_t r = rank; r < rows.size(); ++r)
    if (rows[r][k] != 0) return out;
  out.consistent = true;
  out.nullity = k - rank;
  out.x.assign(k, BigRational(0));
  for (std::size_t r = 0; r < rank; ++r) out.x[pivots[r]] = rows[r][k];
  return out;
}

}  // namespace cpl::analysis::detail
