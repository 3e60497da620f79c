#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cpl/algebra/bigint.hpp"

namespace cpl::algebra {

using Exponent = std::int32_t;
using VarList = std::shared_ptr<const std::vector<std::string>>;

VarList make_vars(std::vector<std::string> names);
/// Names prefix0 .. prefix{count-1}.
VarList make_indexed_vars(const std::string& prefix, std::size_t count);
bool same_vars(const VarList& a, const VarList& b);

/// Multivariate Laurent polynomial with integer coefficients.
///
/// Terms are stored densely: term t owns exponents [t*nvars, (t+1)*nvars).
/// Terms are sorted strictly increasing in lexicographic exponent order and no
/// coefficient is zero, so operator== is structural.
class LaurentPoly {
 public:
  struct Term {
    std::vector<Exponent> exp;
    BigInt coef;
  };

  LaurentPoly();
  explicit LaurentPoly(VarList vars);

  static LaurentPoly constant(VarList vars, const BigInt& c);
  static LaurentPoly variable(VarList vars, std::size_t index);
  static LaurentPoly monomial(VarList vars, std::span<const Exponent> exp, const BigInt& coef);
  /// Sorts and merges; zero coefficients are dropped.
  static LaurentPoly from_terms(VarList vars, std::vector<Term> terms);
  /// Takes already canonical storage (sorted, unique, nonzero). Not checked.
  static LaurentPoly from_canonical(VarList vars, std::vector<Exponent> exps, std::vector<BigInt> coefs);

  const VarList& vars() const noexcept { return vars_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::size_t nterms() const noexcept { return coefs_.size(); }
  bool is_zero() const noexcept { return coefs_.empty(); }
  bool is_monomial() const noexcept { return coefs_.size() == 1; }

  std::span<const Exponent> exponent(std::size_t t) const {
    return {exps_.data() + t * nvars_, nvars_};
  }
  const BigInt& coef(std::size_t t) const { return coefs_[t]; }
  const std::vector<Exponent>& raw_exponents() const noexcept { return exps_; }
  const std::vector<BigInt>& raw_coefs() const noexcept { return coefs_; }

  /// Extremes over all terms; 0 for the zero polynomial.
  Exponent min_exponent(std::size_t var) const;
  Exponent max_exponent(std::size_t var) const;
  std::vector<Exponent> min_exponents() const;
  std::vector<Exponent> max_exponents() const;

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  /// Dispatches to the packed kernels; see laurent_kernels.hpp.
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

  LaurentPoly scaled(const BigInt& c) const;
  /// Multiplies by c * x^shift.
  LaurentPoly shifted(std::span<const Exponent> shift, const BigInt& c = BigInt(1)) const;
  LaurentPoly pow(unsigned long e) const;
  /// Monomials only: inverse c^{-1} x^{-e}; requires |c| = 1.
  LaurentPoly monomial_inverse() const;
  /// d/dx_var, a Laurent polynomial again.
  LaurentPoly derivative(std::size_t var) const;

  BigRational evaluate(std::span<const BigRational> point) const;

  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /// Human readable, e.g. "x1^2*x2^-1 + 3".
  std::string to_string() const;

 private:
  friend struct LaurentAccess;
  VarList vars_;
  std::size_t nvars_ = 0;
  std::vector<Exponent> exps_;
  std::vector<BigInt> coefs_;
};

LaurentPoly operator*(const BigInt& c, const LaurentPoly& p);

/// Exact division in the Laurent ring. Throws Errc::ZeroDivisor when q = 0
/// and Errc::DivisionFails when q does not divide p.
LaurentPoly laurent_div(const LaurentPoly& p, const LaurentPoly& q);
/// Same as laurent_div but reports non-divisibility as an empty optional.
std::optional<LaurentPoly> laurent_try_div(const LaurentPoly& p, const LaurentPoly& q);

/// Embeds p into a larger variable list; every name of p must occur in vars.
LaurentPoly rebase(const LaurentPoly& p, const VarList& vars);

}  // namespace cpl::algebra
