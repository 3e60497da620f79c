#include <doctest.h>

#include <random>

#include "cpl/algebra/error.hpp"
#include "cpl/tsystem/tsystem.hpp"
#include "cpl/zsystem/zsystem.hpp"

using namespace cpl;
using namespace cpl::tsys;
using algebra::IntPoly;
using zsys::ZSequence;

namespace {

TStencil stencil(std::vector<long> a) { return TStencil(PalindromicTuple(std::move(a))); }

std::vector<BigRational> ones(std::size_t n) { return std::vector<BigRational>(n, BigRational(1)); }

BigRational random_rational(std::mt19937_64& rng, int bound = 10) {
  std::uniform_int_distribution<int> d(1, bound), s(0, 1);
  BigRational q(d(rng), d(rng));
  q.canonicalize();
  return s(rng) ? q : BigRational(-q);
}

}  // namespace

TEST_CASE("Somos-4 integer sequence") {
  auto orb = iterate_t(stencil({-1, 2, -1}), ones(4), 9);
  std::vector<long> want{1, 1, 1, 1, 2, 3, 7, 23, 59, 314, 1529, 8209, 83313};
  REQUIRE(orb.values.size() == want.size());
  for (std::size_t n = 0; n < want.size(); ++n) CHECK(orb.values[n] == want[n]);
}

TEST_CASE("Somos-5 integer sequence") {
  // Oracle: direct iteration of x_{n+5} x_n = x_{n+4} x_{n+1} + x_{n+3} x_{n+2}.
  std::vector<BigRational> oracle = ones(5);
  for (int n = 0; n < 10; ++n) oracle.push_back((oracle[n + 4] * oracle[n + 1] + oracle[n + 3] * oracle[n + 2]) / oracle[n]);
  auto orb = iterate_t(stencil({-1, 1, 1, -1}), ones(5), 10);
  CHECK(orb.values == oracle);
  std::vector<long> head{1, 1, 1, 1, 1, 2, 3, 5, 11, 37, 83, 274, 1217};
  for (std::size_t n = 0; n < head.size(); ++n) CHECK(orb.values[n] == head[n]);
}

TEST_CASE("zero tuple alternates blocks of ones and twos") {
  auto orb = iterate_t(stencil({0, 0}), ones(3), 9);
  for (std::size_t n = 0; n < orb.values.size(); ++n) CHECK(orb.values[n] == ((n / 3) % 2 ? 2 : 1));
}

TEST_CASE("zero initial value is rejected") {
  CHECK_THROWS_WITH_AS(iterate_t(stencil({-1, 2, -1}), {1, 0, 1, 1}, 3), doctest::Contains("ZeroEncountered"), Error);
}

TEST_CASE("coefficient Z = 1 reproduces the coefficient-free orbit") {
  std::mt19937_64 rng(1);
  auto st = stencil({-1, 1, 0, 1, -1});
  std::vector<BigRational> init;
  for (int i = 0; i < 6; ++i) init.push_back(random_rational(rng));
  auto a = iterate_t(st, init, 12), b = iterate_tz(st, init, ZSequence::ones(), 12);
  CHECK(a.values == b.values);
}

TEST_CASE("Laurent certification through n = N + 8") {
  for (auto a : std::vector<std::vector<long>>{{-1, 2, -1}, {-1, 1, 1, -1}, {-1, 1, 0, 1, -1}, {-1, 0, 1, 1, 0, -1}, {-1, 0, -1}, {-1, 0, 0, -1}, {-1, 0, 0, 0, -1}}) {
    auto st = stencil(a);
    CHECK_NOTHROW(iterate_t_symbolic(st, 9));
  }
}

TEST_CASE("symbolic iterates specialize to the rational orbit") {
  auto st = stencil({-1, 1, 1, -1});
  auto sym = iterate_t_symbolic(st, 8);
  std::vector<BigRational> pt{2, BigRational(1, 3), 5, BigRational(-1, 2), 7};
  auto num = iterate_t(st, pt, 8);
  for (std::size_t n = 0; n < num.values.size(); ++n) CHECK(sym.values[n].evaluate(pt) == num.values[n]);
}

TEST_CASE("Somos-4 T_z with beta q^n stays in the Laurent ring up to n = 12") {
  auto st = stencil({-1, 2, -1});
  auto orb = iterate_tz_symbolic(st, ZSequence::geometric_symbolic(1), 9);
  REQUIRE(orb.values.size() == 13);
  std::size_t beta = 4;
  for (const auto& x : orb.values)
    for (std::size_t t = 0; t < x.nterms(); ++t) {
      CHECK(x.exponent(t)[beta] >= 0);  // polynomial in beta
      CHECK(x.coef(t) > 0);
    }
  // Specializing beta = 2, q = 3 reproduces the rational T_z orbit.
  std::vector<BigRational> init{1, 2, BigRational(1, 3), 5};
  auto num = iterate_tz(st, init, ZSequence::geometric({2}, 3), 9);
  std::vector<BigRational> pt = init;
  pt.push_back(2);
  pt.push_back(3);
  for (std::size_t n = 0; n < 13; ++n) CHECK(orb.values[n].evaluate(pt) == num.values[n]);
}

TEST_CASE("prim4 T_z coefficients cycle") {
  auto st = stencil({-1, 0, -1});
  auto sol = zsys::solve_z(zsys::z_stencil_from_tuple(st.tuple()), std::nullopt, 12);
  auto orb = iterate_tz_symbolic(st, sol.sequence(), 8);
  CHECK(orb.vars->at(4) == "Z0");
  CHECK(orb.values.size() == 12);
  auto num = zsys::solve_z(zsys::z_stencil_from_tuple(st.tuple()), std::vector<BigRational>{2, 3}, 12);
  std::vector<BigRational> want{2, 3, BigRational(1, 2), BigRational(1, 3)};
  for (std::size_t n = 0; n < 12; ++n) CHECK(num.value(n) == want[n % 4]);
}

TEST_CASE("depth and term guards") {
  auto st = stencil({-2, 6, -4, 6, -2});
  CHECK_THROWS_WITH_AS(iterate_t_symbolic(st, 40), doctest::Contains("depth cap"), Error);
  SymbolicOptions tight;
  tight.term_limit = 50;
  CHECK_THROWS_WITH_AS(iterate_t_symbolic(st, 10, tight), doctest::Contains("TermLimitExceeded"), Error);
}

TEST_CASE("scaling") {
  auto st = stencil({-1, 2, -1});
  auto orb = iterate_t(st, ones(4), 10);
  auto same = scale_orbit(st, orb, 1, 1);
  CHECK(same.orbit.values == orb.values);
  auto twice = scale_orbit(st, orb, 2, 1);
  CHECK(twice.satisfies_recurrence);
  for (std::size_t n = 0; n < orb.values.size(); ++n) CHECK(twice.orbit.values[n] == 2 * orb.values[n]);
  CHECK_THROWS_AS(scale_orbit(st, orb, 0, 1), Error);
}

TEST_CASE("gauge covariance for random scalings") {
  std::mt19937_64 rng(9);
  auto st = stencil({-1, 2, -1});
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<BigRational> init;
    for (int i = 0; i < 4; ++i) init.push_back(random_rational(rng));
    auto orb = iterate_t(st, init, 12);
    auto s = scale_orbit(st, orb, random_rational(rng), random_rational(rng));
    CHECK(s.satisfies_recurrence);
    // Y_n = x_n x_{n+2} / x_{n+1}^2 is invariant.
    for (std::size_t n = 0; n + 2 < orb.values.size(); ++n)
      CHECK(orb.values[n] * orb.values[n + 2] / (orb.values[n + 1] * orb.values[n + 1]) ==
            s.orbit.values[n] * s.orbit.values[n + 2] / (s.orbit.values[n + 1] * s.orbit.values[n + 1]));
  }
}

TEST_CASE("gauge with trivial coefficients is trivial") {
  auto g = gauge_normalize(stencil({-1, 2, -1}), ZSequence::ones(), GaugeTarget::First, 10);
  for (const auto& e : g.gauge) CHECK(e.empty());
}

TEST_CASE("Somos-5 gauge: coefficient annihilated by (S^3-1)(S^2-1)(S+1)") {
  auto g = gauge_normalize(stencil({-1, 1, 1, -1}), ZSequence::geometric_symbolic(2), GaugeTarget::First, 40);
  IntPoly op = IntPoly::from_longs({-1, 0, 0, 1}) * IntPoly::from_longs({-1, 0, 1}) * IntPoly::from_longs({1, 1});
  auto r = apply_shift_operator(op, g.coefficient);
  REQUIRE(r.size() == 34);
  for (const auto& v : r)
    for (const auto& x : v) CHECK(x == 0);
  // The gauged orbit solves the gauged recurrence exactly.
  bool nonconstant = false;
  for (std::size_t n = 1; n < g.coefficient.size(); ++n) nonconstant |= g.coefficient[n] != g.coefficient[0];
  CHECK(nonconstant);
}

TEST_CASE("Somos-7 gauge onto the second term: (S-1)(S^6-1) annihilates the coefficient") {
  auto st = stencil({-1, 0, 1, 1, 0, -1});
  auto sol = zsys::solve_z(zsys::z_stencil_from_tuple(st.tuple()), std::nullopt, 40);
  auto g = gauge_normalize(st, sol.sequence(), GaugeTarget::Second, 40);
  IntPoly op = IntPoly::from_longs({-1, 1}) * IntPoly::from_longs({-1, 0, 0, 0, 0, 0, 1});
  for (const auto& v : apply_shift_operator(op, g.coefficient))
    for (const auto& x : v) CHECK(x == 0);
}

TEST_CASE("Somos-4 gauge gives the discrete Painleve I coefficient relation") {
  // Other term carries beta; alpha_n = A_{n-1} then obeys
  // alpha_{n+2} alpha_{n+1}^2 alpha_n = beta^4 q^n.
  auto g = gauge_normalize(stencil({-1, 2, -1}), ZSequence::geometric_symbolic(1), GaugeTarget::First, 30,
                           std::vector<BigInt>{1, 0});
  const auto& A = g.coefficient;
  for (std::size_t n = 1; n + 1 < A.size(); ++n) {
    // alpha_{n+2} alpha_{n+1}^2 alpha_n with alpha_k = A_{k-1}
    for (std::size_t k = 0; k < 2; ++k) {
      BigInt lhs = A[n + 1][k] + 2 * A[n][k] + A[n - 1][k];
      BigInt rhs = k == 0 ? BigInt(4) : BigInt(static_cast<long>(n));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("gauged orbit solves the normalized recurrence") {
  // Numeric check: with beta = 2, q = 3, x'_n = x_n / G_n satisfies
  // x'_{n+4} x'_n = A_n x'_{n+3} x'_{n+1} + kappa x'_{n+2}^2.
  auto st = stencil({-1, 2, -1});
  auto g = gauge_normalize(st, ZSequence::geometric_symbolic(1), GaugeTarget::First, 12, std::vector<BigInt>{1, 0});
  auto val = [](const std::vector<BigInt>& e) -> BigRational {
    return algebra::pow(BigRational(2), algebra::to_long(e[0])) * algebra::pow(BigRational(3), algebra::to_long(e[1]));
  };
  std::vector<BigRational> init{1, 2, 3, 5};
  auto orb = iterate_tz(st, init, ZSequence::geometric({2}, 3), 8);
  std::vector<BigRational> xp;
  for (std::size_t n = 0; n < 12; ++n) xp.push_back(orb.values[n] / val(g.gauge[n]));
  for (std::size_t n = 0; n + 4 < 12; ++n)
    CHECK(xp[n + 4] * xp[n] == val(g.coefficient[n]) * xp[n + 3] * xp[n + 1] + BigRational(2) * xp[n + 2] * xp[n + 2]);
}

TEST_CASE("fractional Z exponents are rejected by the gauge") {
  auto st = stencil({-2, 1, -2});
  auto sol = zsys::solve_z(zsys::z_stencil_from_tuple(st.tuple()), std::nullopt, 10);
  CHECK_THROWS_WITH_AS(gauge_normalize(st, sol.sequence(), GaugeTarget::First, 8), doctest::Contains("AlgebraicZCase"), Error);
}
