#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cpl/algebra/laurent.hpp"
#include "cpl/reduction/palindromic.hpp"
#include "cpl/zsystem/z_sequence.hpp"

namespace cpl::reduction {

using algebra::LaurentPoly;

/// U_{n+r} U_n = [Z_n^z_power] F(U_{n+1}, ..., U_{n+r-1}).
/// Variables of F are named "U(n+1)" .. "U(n+r-1)"; F = numerator / denominator
/// with numerator a polynomial and denominator a monomial.
struct USystemSpec {
  PalindromicBasis basis;
  std::size_t r = 0;
  LaurentPoly f;
  LaurentPoly numerator;
  LaurentPoly denominator;
  bool z_flag = false;
  /// Power of Z_n; equals the first generator entry.
  unsigned long z_power = 1;

  /// Canonical text, e.g. "U(n+2)*U(n) = (U(n+1) + 1)/U(n+1)^2".
  std::string to_string() const;
};

/// Throws Errc::NotPeriod1 and Errc::EliminationFailed.
USystemSpec derive_usystem(const ExchangeMatrix& b);
USystemSpec derive_uzsystem(const ExchangeMatrix& b);

/// Iterates the U-system (or U_z-system when z is given) from r initial
/// values. Throws Errc::ZeroEncountered on a zero divisor.
std::vector<BigRational> iterate_usystem(const USystemSpec& spec, const std::vector<BigRational>& init,
                                         std::size_t steps, const zsys::ZSequence* z = nullptr);

/// Components of one step (U_1, ..., U_r) -> (U_2, ..., U_r, F / U_1) as
/// Laurent polynomials in "U1" .. "Ur".
std::vector<LaurentPoly> usystem_map(const USystemSpec& spec);

struct ConjugacyReport {
  bool holds = false;
  /// First index m where the projected orbit and the U-orbit differ.
  std::optional<std::size_t> mismatch_at;
  std::vector<BigRational> projected;
  std::vector<BigRational> reduced;
};

/// Compares project(phi^n x) with phihat^n(project x) for n <= steps,
/// on the T-system or, with z, the T_z-system.
ConjugacyReport verify_conjugacy(const ExchangeMatrix& b, const PalindromicBasis& basis,
                                 const std::vector<BigRational>& init, std::size_t steps,
                                 const zsys::ZSequence* z = nullptr);

}  // namespace cpl::reduction
