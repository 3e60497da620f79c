#include "cpl/analysis/sweep.hpp"


#include <exception>
#include <optional>

namespace cpl::analysis {

namespace {

SweepEntry sweep_one(const PalindromicTuple& a, std::size_t steps) {
  SweepEntry e{a, tropical_total_degree(a, steps), {}};
  e.estimate = entropy_estimate(e.degrees);
  return e;
}

/// Runs f(i) for i < n across threads, rethrowing the first exception by index.
template <class F>
void parallel_for(std::size_t n, F&& f) {
  std::vector<std::exception_ptr> errors(n);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(n); ++i) {
    try {
      f(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<SweepEntry> entropy_sweep_serial(const std::vector<PalindromicTuple>& tuples, std::size_t steps) {
  std::vector<SweepEntry> out;
  out.reserve(tuples.size());
  for (const auto& a : tuples) out.push_back(sweep_one(a, steps));
  return out;
}

std::vector<SweepEntry> entropy_sweep_parallel(const std::vector<PalindromicTuple>& tuples, std::size_t steps) {
  std::vector<std::optional<SweepEntry>> slots(tuples.size());
  parallel_for(tuples.size(), [&](std::size_t i) { slots[i] = sweep_one(tuples[i], steps); });
  std::vector<SweepEntry> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<reduction::ConjugacyReport> batch_conjugacy_serial(const quiver::ExchangeMatrix& b,
                                                               const reduction::PalindromicBasis& basis,
                                                               const std::vector<std::vector<BigRational>>& inits,
                                                               std::size_t steps) {
  std::vector<reduction::ConjugacyReport> out;
  out.reserve(inits.size());
  for (const auto& x : inits) out.push_back(reduction::verify_conjugacy(b, basis, x, steps));
  return out;
}

std::vector<reduction::ConjugacyReport> batch_conjugacy_parallel(const quiver::ExchangeMatrix& b,
                                                                 const reduction::PalindromicBasis& basis,
                                                                 const std::vector<std::vector<BigRational>>& inits,
                                                                 std::size_t steps) {
  std::vector<reduction::ConjugacyReport> out(inits.size());
  parallel_for(inits.size(), [&](std::size_t i) { out[i] = reduction::verify_conjugacy(b, basis, inits[i], steps); });
  return out;
}

}  // namespace cpl::analysis
