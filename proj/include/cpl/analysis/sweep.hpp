#pragma once

#include <cstddef>
#include <vector>

#include "cpl/analysis/entropy.hpp"
#include "cpl/reduction/usystem.hpp"

namespace cpl::analysis {

struct SweepEntry {
  PalindromicTuple tuple;
  DegreeSequence degrees;
  EntropyEstimate estimate;
};

/// Tropical total degree and entropy estimate per tuple, in input order.
std::vector<SweepEntry> entropy_sweep_serial(const std::vector<PalindromicTuple>& tuples, std::size_t steps);
/// Same results as the serial sweep; one task per tuple.
std::vector<SweepEntry> entropy_sweep_parallel(const std::vector<PalindromicTuple>& tuples, std::size_t steps);

/// verify_conjugacy on each initial window, in input order.
std::vector<reduction::ConjugacyReport> batch_conjugacy_serial(const quiver::ExchangeMatrix& b,
                                                               const reduction::PalindromicBasis& basis,
                                                               const std::vector<std::vector<BigRational>>& inits,
                                                               std::size_t steps);
std::vector<reduction::ConjugacyReport> batch_conjugacy_parallel(const quiver::ExchangeMatrix& b,
                                                                 const reduction::PalindromicBasis& basis,
                                                                 const std::vector<std::vector<BigRational>>& inits,
                                                                 std::size_t steps);

}  // namespace cpl::analysis
