#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cpl/algebra/int_poly.hpp"
#include "cpl/algebra/laurent.hpp"
#include "cpl/quiver/exchange_matrix.hpp"
#include "cpl/zsystem/z_sequence.hpp"

namespace cpl::tsys {

using algebra::LaurentPoly;
using quiver::PalindromicTuple;

/// x_{n+N} x_n = Z_n (prod_j x_{n+j}^{[a_j]_+} + prod_j x_{n+j}^{[-a_j]_+}).
class TStencil {
 public:
  explicit TStencil(PalindromicTuple a);
  /// Reads a from the first row; throws Errc::NotPeriod1.
  static TStencil from_matrix(const quiver::ExchangeMatrix& b);

  std::size_t order() const noexcept { return a_.order(); }
  const PalindromicTuple& tuple() const noexcept { return a_; }
  /// Exponent of x_{n+j} in the two monomials, indexed j-1.
  const std::vector<long>& plus() const noexcept { return plus_; }
  const std::vector<long>& minus() const noexcept { return minus_; }
  /// The monomial holding the lowest shifted variable (x_{n+1} unless a_1 = 0)
  /// is "first"; true when that is the [a]_+ monomial.
  bool first_is_plus() const noexcept { return first_is_plus_; }

 private:
  PalindromicTuple a_;
  std::vector<long> plus_, minus_;
  bool first_is_plus_ = false;
};

struct RationalOrbit {
  std::vector<long> stencil;
  std::vector<BigRational> values;
  /// Z_n used at step n; empty for coefficient-free orbits.
  std::vector<BigRational> coefficients;
};

struct SymbolicOrbit {
  std::vector<long> stencil;
  /// x0..x{N-1} followed by the coefficient symbols.
  algebra::VarList vars;
  std::vector<LaurentPoly> values;
};

struct SymbolicOptions {
  /// Largest index n for which x_n may be produced.
  std::size_t max_index = 30;
  /// Per-iterate term budget.
  std::size_t term_limit = 1'000'000;
};

/// Throws Errc::ZeroEncountered if an initial value is zero or an iterate
/// vanishes before it is needed as a divisor.
RationalOrbit iterate_t(const TStencil& st, const std::vector<BigRational>& init, std::size_t steps);
RationalOrbit iterate_tz(const TStencil& st, const std::vector<BigRational>& init, const zsys::ZSequence& z,
                         std::size_t steps);

/// Each new value is certified Laurent by exact division (Errc::NonLaurentIterate
/// otherwise); Errc::TermLimitExceeded enforces the depth and size guards.
SymbolicOrbit iterate_t_symbolic(const TStencil& st, std::size_t steps, const SymbolicOptions& opts = {});
/// z must have symbolic access with integer exponents (Errc::AlgebraicZCase).
SymbolicOrbit iterate_tz_symbolic(const TStencil& st, const zsys::ZSequence& z, std::size_t steps,
                                  const SymbolicOptions& opts = {});

/// Z_n as a Laurent monomial in vars, which must contain z.symbols().
LaurentPoly z_monomial(const zsys::ZMonomial& m, const std::vector<std::string>& symbols, const algebra::VarList& vars);

/// Recurrence check at every index where the window is complete.
bool satisfies_recurrence(const TStencil& st, const RationalOrbit& orb);

struct ScaledOrbit {
  RationalOrbit orbit;
  bool satisfies_recurrence = false;
};

/// x_n -> lambda mu^n x_n. Throws Errc::ZeroScale.
ScaledOrbit scale_orbit(const TStencil& st, const RationalOrbit& orb, const BigRational& lambda, const BigRational& mu);

enum class GaugeTarget { First, Second };

/// Monomial gauge x_n = G_n x'_n after which the target monomial carries the
/// whole coefficient A_n and the other monomial carries the constant kappa.
/// Exponent vectors are over the symbols of the Z-sequence.
struct GaugeResult {
  std::vector<std::string> symbols;
  GaugeTarget target = GaugeTarget::First;
  std::vector<BigInt> kappa;
  std::vector<std::vector<BigInt>> gauge;
  std::vector<std::vector<BigInt>> coefficient;
};

/// G_0 = .. = G_{N-1} = 1 and G_{n+N} G_n = Z_n kappa^{-1} prod G_{n+j}^{other_j}.
/// Throws Errc::AlgebraicZCase when Z has fractional exponents.
GaugeResult gauge_normalize(const TStencil& st, const zsys::ZSequence& z, GaugeTarget target, std::size_t count,
                            std::optional<std::vector<BigInt>> kappa = std::nullopt);

/// (sum_k p_k S^k) applied to a sequence of exponent vectors; entry n is
/// sum_k p_k seq[n+k].
std::vector<std::vector<BigInt>> apply_shift_operator(const algebra::IntPoly& op,
                                                      const std::vector<std::vector<BigInt>>& seq);

}  // namespace cpl::tsys
