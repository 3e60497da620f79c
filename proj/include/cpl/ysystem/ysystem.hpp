#pragma once

#include <cstddef>
#include <vector>

#include "cpl/quiver/exchange_matrix.hpp"
#include "cpl/tsystem/tsystem.hpp"
#include "cpl/zsystem/z_sequence.hpp"

namespace cpl::ysys {

using quiver::ExchangeMatrix;
using quiver::PalindromicTuple;

/// y_{n+N} y_n = prod_j (1 + y_{n+j})^{[-a_j]+} / prod_j (1 + 1/y_{n+j})^{[a_j]+}
/// for j in [1, N-1]; values are 0-based from the first initial value.
struct YOrbit {
  std::vector<long> stencil;
  std::vector<BigRational> values;
};

/// Throws Errc::NonPositiveInitial.
YOrbit iterate_y(const PalindromicTuple& a, const std::vector<BigRational>& init, std::size_t steps);

/// Residual-free test of the Y-system at index n of a sequence.
bool satisfies_ysystem_at(const PalindromicTuple& a, const std::vector<BigRational>& y, std::size_t n);

/// ybar_n = prod_j x_{n+j}^{-a_j}, one value per full window. Throws
/// Errc::InsufficientWindow when the orbit is shorter than N and
/// Errc::ZeroEncountered on a zero cluster value.
YOrbit ybar_from_orbit(const PalindromicTuple& a, const std::vector<BigRational>& x);

struct TzCorrespondence {
  /// ybar satisfies the Y-system at n.
  std::vector<bool> y_holds;
  /// prod_j Z_{n+j}^{-a_j} = 1.
  std::vector<bool> z_holds;
  bool coincide() const { return y_holds == z_holds; }
};

/// Index-by-index comparison of the two criteria on a T_z orbit, for
/// n < count. Throws Errc::ConfigInvalid if the orbit does not solve the
/// T_z-system with z, and Errc::InsufficientWindow for a short orbit.
TzCorrespondence verify_tz_correspondence(const PalindromicTuple& a, const tsys::RationalOrbit& orbit,
                                          const zsys::ZSequence& z, std::size_t count);

/// y_{n+2} y_n = beta q^n (1 + y_{n+1}) / y_{n+1}^2. Throws
/// Errc::NonPositiveParameter and Errc::NonPositiveInitial.
YOrbit qp1_iterate(const BigRational& beta, const BigRational& q, const std::vector<BigRational>& init,
                   std::size_t steps);

/// Z_n = y_{n+2} y_{n+1}^2 y_n / (1 + y_{n+1}) along a sequence.
std::vector<BigRational> somos4_z_invariant(const std::vector<BigRational>& y);

/// Mutates coefficients at nodes 0, 1, 2, ... (node u mod N at step u) and
/// records the coefficient of the node about to be mutated; the result has
/// N + steps entries. Throws Errc::NotPeriod1 and Errc::NonPositiveInitial.
YOrbit y_from_seed_dynamics(const ExchangeMatrix& b, const std::vector<BigRational>& y_init, std::size_t steps);

}  // namespace cpl::ysys
