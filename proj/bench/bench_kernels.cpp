#include <benchmark/benchmark.h>

#include <map>
#include <random>

#include "cpl/algebra/laurent_kernels.hpp"
#include "cpl/analysis/sweep.hpp"
#include "cpl/reduction/palindromic.hpp"
#include "cpl/tsystem/tsystem.hpp"

namespace {

using namespace cpl;
using quiver::PalindromicTuple;

/// Two late Somos-4 iterates: dense Laurent polynomials in four variables.
const std::pair<algebra::LaurentPoly, algebra::LaurentPoly>& operands(std::size_t steps) {
  static std::map<std::size_t, std::pair<algebra::LaurentPoly, algebra::LaurentPoly>> cache;
  auto it = cache.find(steps);
  if (it == cache.end()) {
    auto orb = tsys::iterate_t_symbolic(tsys::TStencil(PalindromicTuple({-1, 2, -1})), steps);
    it = cache.emplace(steps, std::make_pair(orb.values[orb.values.size() - 1], orb.values[orb.values.size() - 2])).first;
  }
  return it->second;
}

template <algebra::LaurentPoly (*Mul)(const algebra::LaurentPoly&, const algebra::LaurentPoly&)>
void BM_laurent_mul(benchmark::State& state) {
  const auto& [p, q] = operands(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Mul(p, q));
  state.counters["pairs"] = static_cast<double>(p.nterms() * q.nterms());
}
BENCHMARK(BM_laurent_mul<algebra::kernels::mul_reference>)->Name("laurent_mul/reference")->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_laurent_mul<algebra::kernels::mul_packed_serial>)->Name("laurent_mul/serial")->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_laurent_mul<algebra::kernels::mul_packed_parallel>)->Name("laurent_mul/parallel")->Arg(14)->Arg(18)->Unit(benchmark::kMillisecond);

std::vector<PalindromicTuple> sweep_tuples() {
  std::vector<PalindromicTuple> t;
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b)
      if (a != 0 || b != 0) t.emplace_back(std::vector<long>{a, b, a});
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b)
      if (a != 0 || b != 0) t.emplace_back(std::vector<long>{a, b, b, a});
  return t;
}

template <bool Parallel>
void BM_entropy_sweep(benchmark::State& state) {
  const auto tuples = sweep_tuples();
  const auto steps = static_cast<std::size_t>(state.range(0));
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? analysis::entropy_sweep_parallel(tuples, steps)
                                      : analysis::entropy_sweep_serial(tuples, steps));
  state.counters["tuples"] = static_cast<double>(tuples.size());
}
BENCHMARK(BM_entropy_sweep<false>)->Name("entropy_sweep/serial")->Arg(40)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_entropy_sweep<true>)->Name("entropy_sweep/parallel")->Arg(40)->Unit(benchmark::kMillisecond);

template <bool Parallel>
void BM_batch_conjugacy(benchmark::State& state) {
  const auto b = quiver::build_from_tuple(PalindromicTuple({-1, 1, 0, 1, -1}));
  const auto basis = reduction::palindromic_basis(b);
  std::mt19937_64 rng(3);
  std::vector<std::vector<BigRational>> inits(static_cast<std::size_t>(state.range(0)));
  for (auto& w : inits)
    for (std::size_t i = 0; i < b.n(); ++i) {
      BigRational v(static_cast<long>(1 + rng() % 9), static_cast<unsigned long>(1 + rng() % 9));
      v.canonicalize();
      w.push_back(v);
    }
  for (auto _ : state)
    benchmark::DoNotOptimize(Parallel ? analysis::batch_conjugacy_parallel(b, basis, inits, 16)
                                      : analysis::batch_conjugacy_serial(b, basis, inits, 16));
}
BENCHMARK(BM_batch_conjugacy<false>)->Name("batch_conjugacy/serial")->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_batch_conjugacy<true>)->Name("batch_conjugacy/parallel")->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
