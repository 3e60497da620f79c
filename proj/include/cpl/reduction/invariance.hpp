#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "cpl/reduction/usystem.hpp"

namespace cpl::reduction {

using RatMatrix = std::vector<algebra::RatVector>;
using Float50 = boost::multiprecision::cpp_bin_float_50;

/// W with B = V^T W V for the basis rows V; the reduced two-form is
/// sum_{i<k} W_ik dlog U_i ^ dlog U_k. Throws Errc::EliminationFailed if
/// B does not factor through V.
RatMatrix reduced_form(const ExchangeMatrix& b, const PalindromicBasis& basis);

struct FormInvarianceReport {
  bool preserved = false;
  /// Largest |(J^T Omega(phi U) J - Omega(U))_{ik}|.
  BigRational max_residual;
  RatMatrix jacobian;
  RatMatrix omega_before;
  RatMatrix omega_after;
};

/// Checks J^T Omega(phi(U)) J = Omega(U) with Omega_ik(U) = W_ik / (U_i U_k),
/// for a map given by Laurent components. Throws Errc::SingularPoint.
FormInvarianceReport check_form_preserved(const RatMatrix& w, const std::vector<LaurentPoly>& map,
                                          std::span<const BigRational> point);

/// The U-system step of B at the point.
FormInvarianceReport verify_form_invariance(const ExchangeMatrix& b, const PalindromicBasis& basis,
                                            std::span<const BigRational> point);

/// Rogers dilogarithm L(t) = Li2(t) + log(t) log(1-t) / 2 on (0, 1), by
/// series with the reflection t -> 1 - t above 1/2.
Float50 rogers_dilog(const Float50& t);
/// Same function by tanh-sinh quadrature of its integral representation.
Float50 rogers_dilog_quadrature(const Float50& t);

/// zeta = (1 + exp(-sum_k a_k z_k))^{-1} in logarithmic coordinates z.
Float50 dilog_argument(const ExchangeMatrix& b, std::span<const Float50> z);
/// G = G_0 + G_L at z.
Float50 generating_function(const ExchangeMatrix& b, std::span<const Float50> z);

struct GeneratingFunctionReport {
  /// max_i |(phi* theta - theta)_i - (dG)_i| with dG by central differences.
  Float50 residual;
  std::vector<Float50> components;
};

/// Point x has positive rational coordinates; h is the difference step in
/// z = log x. Throws Errc::DomainError.
GeneratingFunctionReport generating_function_check(const ExchangeMatrix& b, std::span<const BigRational> point,
                                                   const Float50& h);

}  // namespace cpl::reduction
