#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cpl/algebra/bigint.hpp"

namespace cpl::zsys {

/// sign * prod_k symbol_k^{exps[k]}, exponents over ZSequence::symbols().
struct ZMonomial {
  int sign = 1;
  std::vector<BigRational> exps;

  bool integral() const;
  bool operator==(const ZMonomial& o) const = default;
};

/// Coefficient sequence Z_n, n >= 0, with numeric access, symbolic access as
/// monomials in named symbols, or both. Immutable once built.
class ZSequence {
 public:
  /// Z_n = 1 for all n, numerically and symbolically (no symbols).
  static ZSequence ones();
  /// Numeric table Z_0 .. Z_{size-1}.
  static ZSequence table(std::vector<BigRational> values);
  /// Z_n = beta_{n mod period} q^n in symbols "beta" (period 1) or
  /// "beta0".."beta{p-1}", then "q". Symbolic only.
  static ZSequence geometric_symbolic(std::size_t period);
  /// Numeric geometric sequence with given betas and q; symbolic access
  /// returns the same shape in symbols.
  static ZSequence geometric(std::vector<BigRational> betas, BigRational q);
  static ZSequence custom(std::function<BigRational(std::size_t)> numeric, std::vector<std::string> symbols,
                          std::function<ZMonomial(std::size_t)> symbolic, std::optional<std::size_t> size);

  bool has_numeric() const noexcept { return static_cast<bool>(numeric_); }
  bool has_symbolic() const noexcept { return static_cast<bool>(symbolic_); }
  /// Indices available, unbounded when empty.
  std::optional<std::size_t> size() const noexcept { return size_; }

  /// Throws Errc::IndexOutOfRange outside the table or Errc::DomainError
  /// when the access mode is missing.
  BigRational value(std::size_t n) const;
  ZMonomial monomial(std::size_t n) const;
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }

  /// Same sequence with Z_n multiplied by factor (numeric access only).
  ZSequence perturbed(std::size_t n, const BigRational& factor) const;

 private:
  void check_index(std::size_t n) const;
  std::function<BigRational(std::size_t)> numeric_;
  std::function<ZMonomial(std::size_t)> symbolic_;
  std::vector<std::string> symbols_;
  std::optional<std::size_t> size_;
};

}  // namespace cpl::zsys
