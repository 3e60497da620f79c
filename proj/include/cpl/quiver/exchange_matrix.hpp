#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cpl/algebra/int_matrix.hpp"

namespace cpl::quiver {

using algebra::IntMatrix;

/// Skew-symmetric N x N integer matrix, N >= 2. Node indices are 0-based.
class ExchangeMatrix {
 public:
  /// Throws Errc::NotSkewSymmetric (also for non-square input or N < 2).
  explicit ExchangeMatrix(IntMatrix b);
  static ExchangeMatrix zero(std::size_t n);

  std::size_t n() const noexcept { return b_.rows(); }
  const BigInt& operator()(std::size_t i, std::size_t j) const { return b_(i, j); }
  const IntMatrix& matrix() const noexcept { return b_; }
  /// Row 0 without the diagonal entry: (b_{0,1}, ..., b_{0,N-1}).
  std::vector<long> first_row() const;

  bool operator==(const ExchangeMatrix& o) const { return b_ == o.b_; }

 private:
  IntMatrix b_;
};

/// Integer tuple (a_1, ..., a_{N-1}) with a_j = a_{N-j}, stored 0-based:
/// a[j-1] holds a_j.
class PalindromicTuple {
 public:
  /// Throws Errc::NotPalindromic; an empty tuple is rejected as well.
  explicit PalindromicTuple(std::vector<long> a);

  std::size_t order() const noexcept { return a_.size() + 1; }
  /// a_j for j in [1, N-1].
  long at(std::size_t j) const { return a_[j - 1]; }
  long plus(std::size_t j) const { return a_[j - 1] > 0 ? a_[j - 1] : 0; }
  long minus(std::size_t j) const { return a_[j - 1] < 0 ? -a_[j - 1] : 0; }
  const std::vector<long>& values() const noexcept { return a_; }
  bool is_zero() const;
  std::string to_string() const;

  bool operator==(const PalindromicTuple& o) const = default;

 private:
  std::vector<long> a_;
};

/// Matrix mutation at node k in [0, N). Throws Errc::IndexOutOfRange.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k);

/// (rho B)_{jk} = b_{rho(j), rho(k)} with rho(0) = N-1 and rho(j) = j-1.
ExchangeMatrix rho_conjugate(const ExchangeMatrix& b);

struct Period1Report {
  bool period1 = false;
  /// First violated relation, empty when period1 holds.
  std::string witness;
  /// Independent check mutate_matrix(B, 0) == rho_conjugate(B).
  bool mutation_matches_rho = false;
};

/// Tests the first-row relations b_{j,N} = b_{1,j+1} and
/// b_{j+1,k+1} = b_{jk} + b_{1,j+1}[-b_{1,k+1}]_+ - b_{1,k+1}[-b_{1,j+1}]_+
/// (1-based as written) and cross-checks the verdict against mutation.
Period1Report check_period1(const ExchangeMatrix& b);
bool is_period1(const ExchangeMatrix& b);

/// Unique period-1 matrix with first row (0, a_1, ..., a_{N-1}).
ExchangeMatrix build_from_tuple(const PalindromicTuple& a);
/// First row of a period-1 matrix read back as a tuple; throws Errc::NotPeriod1.
PalindromicTuple tuple_of(const ExchangeMatrix& b);

}  // namespace cpl::quiver
