#pragma once

#include <cstddef>

#include "cpl/algebra/laurent.hpp"

namespace cpl::algebra::kernels {

/// Schoolbook product accumulated in an ordered map keyed by exponent vectors.
/// Serial reference for the packed kernels.
LaurentPoly mul_reference(const LaurentPoly& p, const LaurentPoly& q);

/// Exponent vectors packed into a single integer key (variable 0 most
/// significant), products formed by key addition. Falls back to 128-bit keys
/// and throws Errc::ExponentOverflow if even those cannot hold the range.
LaurentPoly mul_packed_serial(const LaurentPoly& p, const LaurentPoly& q);

/// OpenMP version of mul_packed_serial: rows of p are split across threads,
/// each accumulating into a private table; tables are merged and sorted, so
/// the result is identical to the serial kernels.
LaurentPoly mul_packed_parallel(const LaurentPoly& p, const LaurentPoly& q);

/// Term-pair count above which operator* uses the parallel kernel.
inline constexpr std::size_t kParallelThreshold = 1u << 16;

LaurentPoly multiply(const LaurentPoly& p, const LaurentPoly& q);

}  // namespace cpl::algebra::kernels
