#include <doctest.h>

#include <random>

#include "cpl/algebra/error.hpp"
#include "cpl/quiver/exchange_matrix.hpp"
#include "cpl/quiver/seed.hpp"

using namespace cpl;
using namespace cpl::quiver;
using algebra::IntMatrix;

namespace {

ExchangeMatrix somos4_b() { return ExchangeMatrix(IntMatrix{{0, -1, 2, -1}, {1, 0, -3, 2}, {-2, 3, 0, -1}, {1, -2, 1, 0}}); }

ExchangeMatrix somos6_b() {
  return ExchangeMatrix(IntMatrix{{0, -1, 1, 0, 1, -1},
                                  {1, 0, -2, 1, -1, 1},
                                  {-1, 2, 0, -2, 1, 0},
                                  {0, -1, 2, 0, -2, 1},
                                  {-1, 1, -1, 2, 0, -1},
                                  {1, -1, 0, -1, 1, 0}});
}

BigRational random_positive(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, 9);
  BigRational q(d(rng), d(rng));
  q.canonicalize();
  return q;
}

}  // namespace

TEST_CASE("skew symmetry is enforced") {
  CHECK_THROWS_AS(ExchangeMatrix(IntMatrix{{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(ExchangeMatrix(IntMatrix{{0}}), Error);
}

TEST_CASE("mutation is an involution and fixes the zero matrix") {
  auto b = somos4_b();
  for (std::size_t k = 0; k < 4; ++k) CHECK(mutate_matrix(mutate_matrix(b, k), k) == b);
  CHECK(mutate_matrix(ExchangeMatrix::zero(3), 0) == ExchangeMatrix::zero(3));
  CHECK_THROWS_AS(mutate_matrix(b, 4), Error);
}

TEST_CASE("mu_1 equals rho on the Somos-4 matrix") {
  auto b = somos4_b();
  CHECK(mutate_matrix(b, 0) == rho_conjugate(b));
  // Hand-computed rho(B): (rho B)_{jk} = b_{rho j, rho k}.
  ExchangeMatrix expect(IntMatrix{{0, 1, -2, 1}, {-1, 0, -1, 2}, {2, 1, 0, -3}, {-1, -2, 3, 0}});
  CHECK(rho_conjugate(b) == expect);
}

TEST_CASE("rho has order N") {
  auto b = somos6_b();
  ExchangeMatrix r = b;
  for (int i = 0; i < 6; ++i) r = rho_conjugate(r);
  CHECK(r == b);
  CHECK(rho_conjugate(ExchangeMatrix::zero(5)) == ExchangeMatrix::zero(5));
}

TEST_CASE("period-1 classification with witness") {
  CHECK(is_period1(somos4_b()));
  CHECK(is_period1(somos6_b()));
  CHECK(is_period1(ExchangeMatrix::zero(4)));
  ExchangeMatrix bad(IntMatrix{{0, 1, 2}, {-1, 0, 1}, {-2, -1, 0}});
  auto rep = check_period1(bad);
  CHECK_FALSE(rep.period1);
  CHECK_FALSE(rep.mutation_matches_rho);
  CHECK(rep.witness.find("first-row relation fails at j=1") != std::string::npos);
}

TEST_CASE("builder reproduces the displayed matrices") {
  CHECK(build_from_tuple(PalindromicTuple({-1, 2, -1})) == somos4_b());
  CHECK(build_from_tuple(PalindromicTuple({-1, 1, 0, 1, -1})) == somos6_b());
  CHECK(build_from_tuple(PalindromicTuple({0, 0, 0})) == ExchangeMatrix::zero(4));
  CHECK_THROWS_AS(PalindromicTuple({1, 2}), Error);
}

TEST_CASE("built matrices are skew-diagonal symmetric and round trip") {
  for (auto a : std::vector<std::vector<long>>{{-1, 2, -1}, {-1, 1, 1, -1}, {-2, 6, -4, 6, -2}, {-1, 0, 1, 1, 0, -1}, {3, -1, 3}}) {
    auto b = build_from_tuple(PalindromicTuple(a));
    const std::size_t n = b.n();
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) CHECK(b(j, k) == b(n - 1 - k, n - 1 - j));
    CHECK(tuple_of(b).values() == a);
    // B(u) along the schedule 0, 1, 2, ... returns to B after N steps.
    ExchangeMatrix m = b;
    for (std::size_t u = 0; u < n; ++u) {
      m = mutate_matrix(m, u % n);
      if (u + 1 < n) CHECK_FALSE(m == b);
    }
    CHECK(m == b);
  }
}

TEST_CASE("seed mutation: coefficient example") {
  Seed s{somos4_b(), std::vector<BigRational>(4, BigRational(1)), {2, 3, 5, 7}};
  Seed t = mutate_seed(s, 0);
  CHECK(t.y[0] == BigRational(1, 2));
  CHECK(t.y[1] == 9);
  // Straight-line transcription: b_13 = 2 > 0, y3 (1 + 1/2)^{-2}; b_14 = -1, y4 (1 + 2)^{1}.
  CHECK(t.y[2] == BigRational(5) * BigRational(4, 9));
  CHECK(t.y[3] == 21);
}

TEST_CASE("seed mutation is an involution and preserves positivity") {
  std::mt19937_64 rng(5);
  auto b = somos6_b();
  for (int trial = 0; trial < 20; ++trial) {
    Seed s{b, {}, {}};
    for (int i = 0; i < 6; ++i) {
      s.x.push_back(random_positive(rng));
      s.y.push_back(random_positive(rng));
    }
    std::size_t k = static_cast<std::size_t>(trial % 6);
    Seed t = mutate_seed(s, k);
    for (std::size_t i = 0; i < 6; ++i) CHECK((t.x[i] > 0 && t.y[i] > 0));
    CHECK(mutate_seed(t, k) == s);
  }
}

TEST_CASE("trivial coefficients reduce to the coefficient-free exchange") {
  // With y_k -> 0 removed, x'_k x_k = prod x^{[b]+} + prod x^{[-b]+}; setting
  // y = 1 gives (M+ + M-)/2, i.e. twice x'_k reproduces the exchange.
  Seed s{somos4_b(), {1, 1, 2, 3}, {1, 1, 1, 1}};
  Seed t = mutate_seed(s, 0);
  // b_{1j} = (0,-1,2,-1): M+ = x3^2 = 4, M- = x2 x4 = 3.
  CHECK(2 * t.x[0] * s.x[0] == 7);
}
