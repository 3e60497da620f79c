#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpl/algebra/bigint.hpp"

namespace cpl::algebra {

/// Univariate integer polynomial, coefficients in ascending degree with no
/// trailing zeros (the zero polynomial is empty).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> ascending);
  static IntPoly from_longs(std::initializer_list<long> ascending);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const BigInt& coef(int k) const { return c_[static_cast<std::size_t>(k)]; }
  const BigInt& leading() const { return c_.back(); }
  const std::vector<BigInt>& coefficients() const noexcept { return c_; }

  /// Divided by its content, sign chosen so the leading coefficient is positive.
  IntPoly primitive() const;
  IntPoly derivative() const;
  IntPoly operator*(const IntPoly& o) const;
  bool operator==(const IntPoly& o) const = default;
  /// Quotient when o divides *this over Z, otherwise empty.
  std::optional<IntPoly> exact_div(const IntPoly& o) const;
  BigRational evaluate(const BigRational& x) const;

  /// e.g. "lambda^2 - 3*lambda + 1".
  std::string to_string(const std::string& var = "lambda") const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Primitive gcd with positive leading coefficient (zero if both are zero).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);
/// p / gcd(p, p'), primitive.
IntPoly squarefree_part(const IntPoly& p);

struct PolyFactor {
  IntPoly factor;
  int multiplicity = 1;
};

/// Splits a nonzero polynomial into linear factors (rational roots) and
/// quadratic integer factors found by bounded search; the cofactor left over,
/// if nonconstant, is appended as a final factor that may still be reducible.
/// Factors are primitive with positive leading coefficient; the integer content
/// and sign are dropped. Order: by degree, then by coefficient vector.
std::vector<PolyFactor> factor_small(const IntPoly& p);

/// "(lambda - 1)^2*(lambda + 1)".
std::string factored_string(const std::vector<PolyFactor>& factors, const std::string& var = "lambda");

}  // namespace cpl::algebra
