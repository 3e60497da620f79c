#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cpl/algebra/bigint.hpp"

namespace cpl::analysis {

/// sum_k coefficients[k] x_{n + offsets[k]} = 0 with coefficients[0] = 1.
struct LinearRelation {
  std::vector<std::size_t> offsets;
  std::vector<BigRational> coefficients;
  /// Windows n = 0 .. train + verified - 1 on which the relation holds.
  std::size_t train = 0;
  std::size_t verified = 0;

  bool palindromic() const;
  BigRational residual(const std::vector<BigRational>& x, std::size_t n) const;
  std::string to_string() const;
};

struct RelationSearch {
  std::optional<LinearRelation> relation;
  bool consistent = false;
  /// Dimension of the affine solution space of a consistent training system;
  /// nonzero means rank-deficient and no relation is chosen.
  std::size_t solution_dimension = 0;
  /// First verification window that failed, if any.
  std::optional<std::size_t> failed_at;
  std::string status;
};

/// Solves the training windows n < train exactly with c_0 = 1, then checks
/// windows train .. train + verify - 1. Offsets must start at 0 and increase
/// strictly. Throws Errc::InsufficientData when x is shorter than
/// offsets.back() + train + verify, Errc::DomainError for bad offsets.
RelationSearch find_linear_relation(const std::vector<BigRational>& x, const std::vector<std::size_t>& offsets,
                                    std::size_t train, std::size_t verify);

/// ((U1 U2)^2 + U1 + U2 + 1) / (U1 U2); Errc::ZeroProduct when U1 U2 = 0.
BigRational somos4_first_integral(const BigRational& u1, const BigRational& u2);

}  // namespace cpl::analysis
