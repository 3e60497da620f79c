#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "cpl/algebra/int_matrix.hpp"
#include "cpl/quiver/exchange_matrix.hpp"

namespace cpl::reduction {

using algebra::IntMatrix;
using algebra::IntVector;
using quiver::ExchangeMatrix;

/// Shift-generated Z-basis of im B. Row i of `vectors` is s^i(generator);
/// the generator has palindromic support [0, N-r], gcd 1 and a positive
/// first entry.
struct PalindromicBasis {
  IntVector generator;
  std::size_t r = 0;
  IntMatrix vectors;
  /// Passes through the repair loop of the construction.
  std::size_t repair_rounds = 0;

  std::size_t n() const noexcept { return generator.size(); }
  std::size_t support_length() const noexcept { return n() - r + 1; }
};

/// Throws Errc::NotPeriod1, Errc::DomainError for B = 0, and
/// Errc::EliminationFailed if the construction disagrees with the
/// independent echelon route or with image_lattice_basis.
PalindromicBasis palindromic_basis(const ExchangeMatrix& b);

/// U_i = prod_j x_j^{(v_i)_j}. Throws Errc::ZeroComponent.
std::vector<BigRational> project(const PalindromicBasis& basis, std::span<const BigRational> x);

/// U_m = prod_j x_{m+j}^{v_j} along a scalar orbit, for every m with a full window.
std::vector<BigRational> project_orbit(const PalindromicBasis& basis, std::span<const BigRational> orbit);

}  // namespace cpl::reduction
