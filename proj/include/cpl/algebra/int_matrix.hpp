#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "cpl/algebra/bigint.hpp"

namespace cpl::algebra {

using IntVector = std::vector<BigInt>;
using RatVector = std::vector<BigRational>;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  BigInt& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntVector row(std::size_t i) const;
  std::vector<IntVector> row_list() const;
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& o) const;
  IntVector operator*(const IntVector& v) const;
  bool operator==(const IntMatrix& o) const = default;
  bool is_zero() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<BigInt> a_;
};

/// Row Hermite normal form: echelon rows with positive pivots, entries above
/// each pivot reduced into [0, pivot). Zero rows are removed.
IntMatrix hermite_rows(const IntMatrix& m);

/// Rank over the rationals.
std::size_t rank(const IntMatrix& m);

/// Reduced row echelon form over the rationals, zero rows removed.
std::vector<RatVector> rational_rref(const IntMatrix& m);

/// Z-basis of {u in Z^cols : B u = 0}, as rows in Hermite normal form.
/// The lattice is saturated by construction and each vector is primitive.
std::vector<IntVector> kernel_basis(const IntMatrix& b);

/// Z-basis of im B intersected with Z^rows (column space), as Hermite rows.
/// Every row is primitive.
IntMatrix image_lattice_basis(const IntMatrix& b);

/// Integer coefficients c with sum_k c_k rows_k = v for rows in echelon form
/// (strictly increasing pivot columns); empty when v is outside the Z-span.
std::optional<IntVector> solve_echelon(const IntMatrix& echelon, const IntVector& v);

/// True when the two row sets span the same Z-lattice.
bool same_lattice(const IntMatrix& a, const IntMatrix& b);

/// Membership of v in the rational row space of m.
bool in_rational_span(const IntMatrix& m, const IntVector& v);

IntVector primitive_part(const IntVector& v);

}  // namespace cpl::algebra
