#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cpl/algebra/int_poly.hpp"
#include "cpl/quiver/exchange_matrix.hpp"
#include "cpl/zsystem/z_sequence.hpp"

namespace cpl::zsys {

/// Multiplicative constraint prod_{j=1}^{N-1} Z_{n+j}^{e_j} = 1, e_j = -a_j.
/// After trimming zero ends it reads prod_{i=0}^{r} Z_{m+i}^{c_i} = 1 with
/// m = n + offset; c_0 = c_r since the tuple is palindromic.
struct ZStencil {
  std::vector<long> exponents;  // e_j at index j-1
  std::size_t offset = 0;       // smallest j with e_j != 0
  std::vector<long> c;          // trimmed, size r+1

  std::size_t order() const noexcept { return c.size() - 1; }
  long leading() const { return c.back(); }
};

/// Throws Errc::ZeroTuple for the zero tuple.
ZStencil z_stencil_from_tuple(const quiver::PalindromicTuple& a);

/// prod_i Z_{m+i}^{c_i} for the trimmed constraint at base index m.
BigRational constraint_value(const ZStencil& st, const ZSequence& z, std::size_t m);
/// Constraint attached to T_z index n, i.e. base index m = n + offset.
bool constraint_holds_at(const ZStencil& st, const ZSequence& z, std::size_t n);

struct ClosedForm {
  /// Z_n = beta_{n mod period} q^n.
  std::size_t period = 1;
  /// Parameter values when they are rational for the given initial data.
  std::optional<std::vector<BigRational>> betas;
  std::optional<BigRational> q;
  std::string formula;
};

/// Solution of the Z-system from initial data Z_0..Z_{r-1}, tabulated for
/// n < count. Z_n = sign * prod_k Z_k^{d_n^{(k)}} with rational d.
class ZSolution {
 public:
  const ZStencil& stencil() const noexcept { return st_; }
  std::size_t count() const noexcept { return exps_.size(); }
  /// d_n^{(k)}.
  const std::vector<BigRational>& exponents(std::size_t n) const { return exps_.at(n); }
  /// Exponent sequence d^{(k)}_0 .. d^{(k)}_{count-1}.
  std::vector<BigRational> exponent_sequence(std::size_t k) const;
  /// Set when |leading exponent| > 1: a root was taken and the sign fixed to +.
  bool algebraic_ambiguity() const noexcept { return ambiguous_; }
  int sign(std::size_t) const noexcept { return 1; }
  const std::optional<ClosedForm>& closed_form() const noexcept { return closed_; }
  const std::optional<std::vector<BigRational>>& initial_values() const noexcept { return init_; }

  /// Numeric Z_n; throws Errc::AlgebraicZCase if a root is irrational and
  /// Errc::DomainError without numeric initial data.
  BigRational value(std::size_t n) const;
  /// Numeric (if initial data given) and symbolic in Z0..Z{r-1}.
  ZSequence sequence() const;

 private:
  friend ZSolution solve_z(const ZStencil&, std::optional<std::vector<BigRational>>, std::size_t);
  ZStencil st_;
  std::vector<std::vector<BigRational>> exps_;
  std::optional<std::vector<BigRational>> init_;
  std::vector<BigRational> values_;
  bool ambiguous_ = false;
  std::optional<ClosedForm> closed_;
};

/// init holds r values (numeric mode) or is empty (symbolic only).
/// Throws Errc::ZeroInitial for a zero initial value.
ZSolution solve_z(const ZStencil& st, std::optional<std::vector<BigRational>> init, std::size_t count);

/// sum_i c_i lambda^i made primitive with positive leading coefficient.
algebra::IntPoly char_poly(const ZStencil& st);

struct SpectralEstimate {
  double radius = 0;
  /// Certified bound on |radius - true largest root modulus|.
  double error_bound = 0;
  std::vector<std::complex<double>> roots;
};

/// Largest root modulus of a nonconstant polynomial. Roots come from the
/// companion matrix of each squarefree factor, are polished by Newton steps,
/// and are certified by the disk |z - z*| <= d |f(z)| / |f'(z)|.
SpectralEstimate spectral_radius(const algebra::IntPoly& p);

}  // namespace cpl::zsys
