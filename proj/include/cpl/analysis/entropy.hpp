#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cpl/algebra/int_poly.hpp"
#include "cpl/analysis/degrees.hpp"

namespace cpl::analysis {

/// d_{n+k} = sum_{i<k} coeffs[i] d_{n+i} for all n >= start.
struct LinearRecurrence {
  std::size_t start = 0;
  std::vector<BigRational> coeffs;
  /// Number of indices at which the recurrence was checked beyond those used
  /// to determine it.
  std::size_t verified = 0;

  std::size_t order() const noexcept { return coeffs.size(); }
  /// lambda^k - sum_i coeffs[i] lambda^i, scaled to a primitive integer polynomial.
  algebra::IntPoly characteristic() const;
};

/// Smallest order k <= max_order such that some start <= max_start gives a
/// recurrence determined by k equations and verified on at least min_verified
/// further indices. Exact over Q.
std::optional<LinearRecurrence> find_recurrence(const std::vector<BigInt>& d, std::size_t max_order = 16,
                                                std::size_t min_verified = 3, std::size_t max_start = 8);

/// Extends d by `extra` terms using rec.
std::vector<BigInt> extend(const std::vector<BigInt>& d, const LinearRecurrence& rec, std::size_t extra);

/// (S^p - 1)(S - 1)^m d_n = 0 for all n >= start: a quasi-polynomial of degree
/// m with period p.
struct QuasiPolynomial {
  std::size_t period = 1;
  std::size_t degree = 0;
  std::size_t start = 0;
  std::size_t verified = 0;
};

std::optional<QuasiPolynomial> find_quasi_polynomial(const std::vector<BigInt>& d, std::size_t max_period = 12,
                                                     std::size_t max_degree = 4, std::size_t min_verified = 4);

/// Coefficients (ascending) of the unique polynomial of the given degree through
/// d_from..d_to, if one exists; interpolates on the first degree + 1 points and
/// checks the rest.
std::optional<std::vector<BigRational>> fit_exact_polynomial(const std::vector<BigInt>& d, std::size_t from,
                                                             std::size_t to, std::size_t degree);

/// Aitken delta-squared applied to the successive ratios ending at index n:
/// r - (r' - r)^2 / (r'' - 2 r' + r) with r = d_{n-1}/d_{n-2} etc. Empty when
/// a ratio or the denominator is undefined.
std::optional<BigRational> aitken_ratio(const std::vector<BigInt>& d, std::size_t n);

enum class GrowthFit { Polynomial, Exponential };

struct EntropyEstimate {
  double entropy = 0;
  GrowthFit fit = GrowthFit::Polynomial;
  /// Degree of the polynomial fit (meaningful for GrowthFit::Polynomial).
  std::size_t polynomial_degree = 0;
  /// exp(entropy), the dominant growth factor.
  double lambda = 1;
  /// Half-width of the band around `entropy`.
  double confidence = 0;
  /// "quasi-polynomial", "recurrence" or "ratio".
  std::string method;
  std::string note;
  /// Last Aitken-extrapolated ratio, exact.
  std::optional<BigRational> aitken;
  std::optional<LinearRecurrence> recurrence;
};

/// Throws Errc::TooShort below 12 terms. Order of attempts: exact
/// quasi-polynomial structure, exact linear recurrence with a certified
/// spectral radius, Aitken extrapolation of the ratios.
EntropyEstimate entropy_estimate(const DegreeSequence& d);

}  // namespace cpl::analysis
