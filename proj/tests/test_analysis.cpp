#include <doctest.h>

#include <cmath>
#include <random>

#include "cpl/algebra/error.hpp"
#include "cpl/analysis/degrees.hpp"
#include "cpl/analysis/entropy.hpp"
#include "cpl/analysis/linear_relation.hpp"
#include "cpl/analysis/sweep.hpp"
#include "cpl/reduction/palindromic.hpp"
#include "cpl/reduction/usystem.hpp"
#include "cpl/tsystem/tsystem.hpp"
#include "cpl/zsystem/zsystem.hpp"

using namespace cpl;
using namespace cpl::analysis;

namespace {

const double kGolden2 = (3 + std::sqrt(5.0)) / 2;

std::vector<BigInt> ints(std::vector<long> v) { return std::vector<BigInt>(v.begin(), v.end()); }

BigRational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(1, 9), s(0, 1);
  BigRational q(d(rng), d(rng));
  q.canonicalize();
  return s(rng) ? q : BigRational(-q);
}

std::vector<BigRational> random_window(std::mt19937_64& rng, std::size_t n) {
  std::vector<BigRational> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(random_rational(rng));
  return v;
}

/// x_{n+N} x_n = Z_n (x_{n+N-1} x_{n+1} + 1) with Z_{n+N-2} Z_n = 1.
tsys::RationalOrbit prim_orbit(std::size_t n, std::mt19937_64& rng, std::size_t steps) {
  std::vector<long> a(n - 1, 0);
  a.front() = a.back() = -1;
  tsys::TStencil st{PalindromicTuple(a)};
  auto zst = zsys::z_stencil_from_tuple(st.tuple());
  auto z = zsys::solve_z(zst, random_window(rng, zst.order()), n + steps);
  return tsys::iterate_tz(st, random_window(rng, n), z.sequence(), steps);
}

}  // namespace

TEST_CASE("Somos-4 per-variable denominator degrees") {
  tsys::TStencil st{PalindromicTuple({-1, 2, -1})};
  auto orb = tsys::iterate_t_symbolic(st, 6);
  auto d0 = degree_sequence(orb, DegreeMode::of(0));
  // x4 = (x1 x3 + x2^2)/x0 carries x0^-1; x5 and x6 keep one power, x7 two.
  CHECK(d0.d == ints({0, 0, 0, 0, 1, 1, 2, 3, 3, 5}));
  CHECK(degree_sequence(orb, DegreeMode::of(3)).d == ints({0, 0, 0, 0, 0, 0, 0, 1, 1, 2}));
  auto tot = degree_sequence(orb).d;
  CHECK(tot == ints({0, 0, 0, 0, 1, 2, 4, 7, 9, 13}));
  CHECK_THROWS_AS(degree_sequence(orb, DegreeMode::of(4)), Error);
}

TEST_CASE("zero stencil has bounded degree") {
  tsys::TStencil st{PalindromicTuple({0, 0})};
  auto orb = tsys::iterate_t_symbolic(st, 10);
  for (std::size_t i = 0; i < 3; ++i)
    for (const auto& v : degree_sequence(orb, DegreeMode::of(i)).d) CHECK(v <= 1);
}

TEST_CASE("tropical pole orders equal symbolic degrees") {
  struct Case {
    std::vector<long> a;
    std::size_t last;
  };
  // The nonintegrable stencil grows about sevenfold in terms per step, so it
  // is compared through n = 11.
  for (const auto& c : std::vector<Case>{{{-1, 2, -1}, 15},
                                         {{-1, 1, 1, -1}, 15},
                                         {{-1, 1, 0, 1, -1}, 15},
                                         {{-1, 0, 1, 1, 0, -1}, 15},
                                         {{-1, 0, -1}, 15},
                                         {{-1, 0, 0, -1}, 15},
                                         {{-2, 6, -4, 6, -2}, 11}}) {
    PalindromicTuple a(c.a);
    const std::size_t n = a.order();
    auto orb = tsys::iterate_t_symbolic(tsys::TStencil(a), c.last + 1 - n);
    for (std::size_t i = 0; i < n; ++i) {
      auto sym = degree_sequence(orb, DegreeMode::of(i));
      auto trop = tropical_iterate(a, pole_init(n, i), c.last + 1 - n);
      CHECK_MESSAGE(sym.d == trop.d, a.to_string() << " variable " << i);
    }
    // A unit weight on the last variable follows its top exponent instead.
    std::vector<BigInt> unit(n, BigInt(0));
    unit.back() = 1;
    auto top = tropical_orbit(a, unit, c.last + 1 - n);
    for (std::size_t m = 0; m <= c.last; ++m) CHECK(top[m] == orb.values[m].max_exponent(n - 1));
  }
}

TEST_CASE("Somos-4 unit weight is the first-variable degree shifted by one") {
  PalindromicTuple a({-1, 2, -1});
  auto top = tropical_iterate(a, ints({0, 0, 0, 1}), 20);
  auto d0 = tropical_iterate(a, pole_init(4, 0), 21);
  for (std::size_t m = 0; m < top.size(); ++m) CHECK(top.d[m] == d0.d[m + 1]);
}

TEST_CASE("tropical zero init stays zero for balanced stencils") {
  auto t = tropical_iterate(PalindromicTuple({-1, 2, -1}), ints({0, 0, 0, 0}), 30);
  for (const auto& v : t.d) CHECK(v == 0);
}

TEST_CASE("nonintegrable tropical growth ratio") {
  auto d = tropical_total_degree(PalindromicTuple({-2, 6, -4, 6, -2}), 40);
  double r = growth_ratio(d, 40).get_d();
  CHECK(std::fabs(r - kGolden2) / kGolden2 < 0.01);
  auto e = entropy_estimate(d);
  CHECK(e.fit == GrowthFit::Exponential);
  CHECK(std::fabs(e.entropy - std::log(kGolden2)) < 0.01 * std::log(kGolden2));
}

TEST_CASE("nonintegrable Z exponent growth") {
  auto st = zsys::z_stencil_from_tuple(PalindromicTuple({-2, 6, -4, 6, -2}));
  auto sol = zsys::solve_z(st, std::nullopt, 42);
  for (std::size_t k = 0; k < st.order(); ++k) {
    auto d = exponent_degrees(sol.exponent_sequence(k));
    double r = growth_ratio(d, 40).get_d();
    CHECK(std::fabs(r - kGolden2) / kGolden2 < 0.01);
    auto e = entropy_estimate(d);
    CHECK(e.method == "recurrence");
    REQUIRE(e.recurrence.has_value());
    CHECK(e.recurrence->characteristic() == zsys::char_poly(st));
    CHECK(std::fabs(e.lambda - kGolden2) < 1e-9);
  }
}

TEST_CASE("Somos-4 degrees have zero entropy") {
  auto d = tropical_total_degree(PalindromicTuple({-1, 2, -1}), 40);
  auto e = entropy_estimate(d);
  CHECK(e.entropy == 0);
  CHECK(e.fit == GrowthFit::Polynomial);
  CHECK(e.polynomial_degree == 2);
  CHECK(e.method == "quasi-polynomial");
  // The eight-step difference is linear: d_{n+8} - d_n = 4n + 10 beyond the transient.
  for (std::size_t n = 4; n + 8 < d.size(); ++n) CHECK(d.d[n + 8] - d.d[n] == BigInt(4 * static_cast<long>(n) + 10));
  // A single quadratic does not interpolate the window [8, 20].
  CHECK_FALSE(fit_exact_polynomial(d.d, 8, 20, 2).has_value());
}

TEST_CASE("exact polynomial fit") {
  std::vector<BigInt> q;
  for (long n = 0; n < 25; ++n) q.emplace_back(3 * n * n - 2 * n + 7);
  auto fit = fit_exact_polynomial(q, 8, 20, 2);
  REQUIRE(fit.has_value());
  CHECK(*fit == std::vector<BigRational>{7, -2, 3});
  q[15] += 1;
  CHECK_FALSE(fit_exact_polynomial(q, 8, 20, 2).has_value());
}

TEST_CASE("constant and short sequences") {
  auto e = entropy_estimate(DegreeSequence{std::vector<BigInt>(20, BigInt(5)), "constant"});
  CHECK(e.entropy == 0);
  CHECK(e.polynomial_degree == 0);
  CHECK_THROWS_WITH_AS(entropy_estimate(DegreeSequence{std::vector<BigInt>(11, BigInt(1)), ""}),
                       doctest::Contains("TooShort"), Error);
}

TEST_CASE("recurrence route and padding stability") {
  // Fibonacci-like growth with a period-2 perturbation.
  std::vector<BigInt> d{1, 1};
  for (int n = 2; n < 30; ++n) d.push_back(d[n - 1] + d[n - 2] + (n % 2));
  auto base = entropy_estimate(DegreeSequence{d, "test"});
  REQUIRE(base.recurrence.has_value());
  CHECK(std::fabs(base.lambda - (1 + std::sqrt(5.0)) / 2) < 1e-9);
  auto padded = extend(d, *base.recurrence, 20);
  for (std::size_t n = 2; n < padded.size(); ++n) CHECK(padded[n] == padded[n - 1] + padded[n - 2] + BigInt(n % 2));
  auto more = entropy_estimate(DegreeSequence{padded, "test"});
  CHECK(std::fabs(more.entropy - base.entropy) <= std::max(base.confidence, 1e-12));
}

TEST_CASE("padding stability on tropical degrees") {
  for (auto a : std::vector<std::vector<long>>{{-1, 2, -1}, {-2, 6, -4, 6, -2}, {-1, 1, 1, -1}}) {
    auto d = tropical_total_degree(PalindromicTuple(a), 30);
    auto e = entropy_estimate(d);
    auto rec = find_recurrence(d.d);
    if (!rec) continue;
    auto more = entropy_estimate(DegreeSequence{extend(d.d, *rec, 20), d.definition});
    CHECK(std::fabs(more.entropy - e.entropy) <= std::max(e.confidence, 1e-12));
  }
}

TEST_CASE("Aitken ratio is exact on geometric data") {
  std::vector<BigInt> g;
  BigInt v = 5;
  for (int n = 0; n < 8; ++n, v *= 3) g.push_back(v);
  CHECK(aitken_ratio(g, 7) == BigRational(3));
  CHECK_FALSE(aitken_ratio(g, 2).has_value());
}

TEST_CASE("autonomous prim4 relation") {
  std::mt19937_64 rng(5);
  tsys::TStencil st{PalindromicTuple({-1, 0, -1})};
  auto orb = tsys::iterate_t(st, random_window(rng, 4), 40);
  // Spacing 2 is inconsistent for this recurrence; the relation has spacing N - 1.
  auto even = find_linear_relation(orb.values, {0, 2, 4}, 4, 30);
  CHECK_FALSE(even.consistent);
  auto res = find_linear_relation(orb.values, {0, 3, 6}, 4, 30);
  REQUIRE(res.relation.has_value());
  const auto& c = res.relation->coefficients;
  CHECK(c[0] == 1);
  CHECK(c[2] == 1);
  CHECK(res.relation->palindromic());
  // K from the first window agrees with every later window.
  const auto& x = orb.values;
  for (std::size_t n = 0; n + 6 < x.size(); ++n) CHECK((x[n + 6] + x[n]) / x[n + 3] == -c[1]);
}

TEST_CASE("prim4 with coefficients: order 24 relation") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 3; ++trial) {
    auto orb = prim_orbit(4, rng, 60);
    auto res = find_linear_relation(orb.values, {0, 12, 24}, 4, 30);
    REQUIRE(res.relation.has_value());
    CHECK(res.relation->verified == 30);
    CHECK(res.relation->coefficients[0] == 1);
    CHECK(res.relation->coefficients[2] == 1);
    const auto& x = orb.values;
    const BigRational cval = -res.relation->coefficients[1];
    for (std::size_t n = 0; n + 24 < x.size(); ++n) CHECK((x[n + 24] + x[n]) / x[n + 12] == cval);
    // The autonomous spacing fails once coefficients vary.
    CHECK_FALSE(find_linear_relation(orb.values, {0, 2, 4}, 4, 30).relation.has_value());
  }
}

TEST_CASE("prim5 palindromic relation with spacing 12") {
  std::mt19937_64 rng(23);
  auto orb = prim_orbit(5, rng, 80);
  auto res = find_linear_relation(orb.values, {0, 12, 24, 36, 48}, 8, 20);
  REQUIRE(res.relation.has_value());
  CHECK(res.relation->palindromic());
  CHECK(res.relation->coefficients.front() == 1);
}

TEST_CASE("Somos-4 admits no short constant relation") {
  tsys::TStencil st{PalindromicTuple({-1, 2, -1})};
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 5; ++trial) {
    auto orb = tsys::iterate_t(st, random_window(rng, 4), 20);
    auto res = find_linear_relation(orb.values, {0, 1, 2}, 3, 5);
    CHECK_FALSE(res.relation.has_value());
    CHECK_FALSE(res.consistent);
  }
}

TEST_CASE("rank-deficient training reports the solution space") {
  std::vector<BigRational> x(20, BigRational(1));
  auto res = find_linear_relation(x, {0, 1, 2}, 4, 4);
  CHECK_FALSE(res.relation.has_value());
  CHECK(res.consistent);
  CHECK(res.solution_dimension == 1);
  CHECK_THROWS_WITH_AS(find_linear_relation(x, {0, 1, 2}, 10, 10), doctest::Contains("InsufficientData"), Error);
  CHECK_THROWS_AS(find_linear_relation(x, {0, 2, 2}, 2, 2), Error);
}

TEST_CASE("Somos-4 first integral") {
  CHECK(somos4_first_integral(1, 1) == 4);
  CHECK(somos4_first_integral(1, 2) == 4);
  CHECK_THROWS_WITH_AS(somos4_first_integral(0, 3), doctest::Contains("ZeroProduct"), Error);
  // Oracle: the biquadratic relation with H substituted back.
  std::mt19937_64 rng(9);
  for (int i = 0; i < 20; ++i) {
    BigRational u = random_rational(rng), v = random_rational(rng);
    BigRational h = somos4_first_integral(u, v);
    CHECK(u * u * v * v - h * u * v + u + v + 1 == 0);
  }
}

TEST_CASE("first integral is conserved along U-orbits") {
  auto b = quiver::build_from_tuple(PalindromicTuple({-1, 2, -1}));
  auto spec = reduction::derive_usystem(b);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> d(1, 9);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<BigRational> u0{BigRational(d(rng), d(rng)), BigRational(d(rng), d(rng))};
    for (auto& q : u0) q.canonicalize();
    auto u = reduction::iterate_usystem(spec, u0, 50);
    const BigRational h0 = somos4_first_integral(u[0], u[1]);
    for (std::size_t n = 0; n + 1 < u.size(); ++n) CHECK(somos4_first_integral(u[n], u[n + 1]) == h0);
  }
}

TEST_CASE("parallel kernels match their serial references") {
  std::vector<PalindromicTuple> tuples;
  for (auto a : std::vector<std::vector<long>>{{-1, 2, -1}, {-1, 1, 1, -1}, {-2, 6, -4, 6, -2}, {-1, 0, -1}})
    tuples.emplace_back(a);
  auto s = entropy_sweep_serial(tuples, 30);
  auto p = entropy_sweep_parallel(tuples, 30);
  REQUIRE(s.size() == p.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].degrees.d == p[i].degrees.d);
    CHECK(s[i].estimate.entropy == p[i].estimate.entropy);
    CHECK(s[i].estimate.method == p[i].estimate.method);
  }

  auto b = quiver::build_from_tuple(PalindromicTuple({-1, 2, -1}));
  auto basis = reduction::palindromic_basis(b);
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> d(1, 9);
  std::vector<std::vector<BigRational>> inits;
  for (int i = 0; i < 4; ++i) {
    std::vector<BigRational> x;
    for (int k = 0; k < 4; ++k) x.emplace_back(d(rng));
    inits.push_back(x);
  }
  auto cs = batch_conjugacy_serial(b, basis, inits, 10);
  auto cp = batch_conjugacy_parallel(b, basis, inits, 10);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    CHECK(cs[i].holds);
    CHECK(cs[i].projected == cp[i].projected);
    CHECK(cs[i].reduced == cp[i].reduced);
  }
}
