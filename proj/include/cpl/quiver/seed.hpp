#pragma once

#include <cstddef>
#include <vector>

#include "cpl/algebra/bigint.hpp"
#include "cpl/quiver/exchange_matrix.hpp"

namespace cpl::quiver {


/// Seed with coefficients in the positive rationals (semifield sum = +).
struct Seed {
  ExchangeMatrix b;
  std::vector<BigRational> x;
  std::vector<BigRational> y;

  /// Throws Errc::NonPositiveInitial unless every x_i, y_i > 0 and sizes match.
  void validate() const;
  bool operator==(const Seed& o) const = default;
};

/// Mutation at node k in [0, N) of matrix, cluster and coefficients.
Seed mutate_seed(const Seed& s, std::size_t k);

/// Coefficient part of mutate_seed alone.
std::vector<BigRational> mutate_coefficients(const ExchangeMatrix& b, const std::vector<BigRational>& y, std::size_t k);

}  // namespace cpl::quiver
