#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cpl/algebra/bigint.hpp"
#include "cpl/quiver/exchange_matrix.hpp"
#include "cpl/tsystem/tsystem.hpp"

namespace cpl::analysis {

using quiver::PalindromicTuple;

/// d_n >= 0 for n < size(); `definition` names how the values were produced.
struct DegreeSequence {
  std::vector<BigInt> d;
  std::string definition;

  std::size_t size() const noexcept { return d.size(); }
};

/// Which initial variable to track; empty means the sum over x0..x{N-1}.
struct DegreeMode {
  std::optional<std::size_t> variable;

  static DegreeMode total() { return {}; }
  static DegreeMode of(std::size_t i) { return {i}; }
};

/// d_n^{(i)} = max(0, -min exponent of x_i in x_n). Coefficient symbols in the
/// orbit's variable list are ignored. Throws Errc::IndexOutOfRange.
DegreeSequence degree_sequence(const tsys::SymbolicOrbit& orbit, DegreeMode mode = DegreeMode::total());

/// Max-plus shadow X_{n+N} = max(sum_j [a_j]_+ X_{n+j}, sum_j [-a_j]_+ X_{n+j}) - X_n,
/// returned without flooring (entries may be negative). Output has N + steps
/// entries. Throws Errc::IndexOutOfRange when init.size() != N.
std::vector<BigInt> tropical_orbit(const PalindromicTuple& a, const std::vector<BigInt>& init, std::size_t steps);

/// tropical_orbit wrapped as a DegreeSequence, each entry floored at 0.
DegreeSequence tropical_iterate(const PalindromicTuple& a, const std::vector<BigInt>& init, std::size_t steps);

/// Pole order of x_i: X_i = -1, all other initial entries 0. With positive
/// coefficients there is no cancellation, so tropical_iterate on this init
/// reproduces d^{(i)} of the symbolic orbit.
std::vector<BigInt> pole_init(std::size_t n, std::size_t i);

/// Sum over i of the floored per-variable tropical degrees.
DegreeSequence tropical_total_degree(const PalindromicTuple& a, std::size_t steps);

/// Entries of a Z exponent sequence as integers; Errc::DomainError if one is
/// not integral.
DegreeSequence exponent_degrees(const std::vector<BigRational>& exponents);

/// d_{n+1}/d_n; Errc::DomainError when d_n = 0.
BigRational growth_ratio(const DegreeSequence& d, std::size_t n);

/// "n,d" lines with a header.
std::string to_csv(const DegreeSequence& d);

}  // namespace cpl::analysis
