#include <doctest.h>

#include <random>

#include "cpl/algebra/error.hpp"
#include "cpl/ysystem/ysystem.hpp"
#include "cpl/zsystem/zsystem.hpp"

using namespace cpl;
using namespace cpl::ysys;

namespace {

PalindromicTuple tup(std::vector<long> a) { return PalindromicTuple(std::move(a)); }

std::vector<BigRational> random_positive(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(1, 10);
  std::vector<BigRational> v;
  for (std::size_t i = 0; i < n; ++i) {
    BigRational q(d(rng), d(rng));
    q.canonicalize();
    v.push_back(q);
  }
  return v;
}

std::vector<BigRational> somos4_y() {
  auto x = tsys::iterate_t(tsys::TStencil(tup({-1, 2, -1})), std::vector<BigRational>(4, BigRational(1)), 16).values;
  std::vector<BigRational> y;
  for (std::size_t n = 0; n + 2 < x.size(); ++n) y.push_back(x[n] * x[n + 2] / (x[n + 1] * x[n + 1]));
  return y;
}

}  // namespace

TEST_CASE("Somos-4 Y-system agrees with Y_n of the integer orbit") {
  auto want = somos4_y();
  auto orb = iterate_y(tup({-1, 2, -1}), {1, 1, 2, BigRational(3, 4)}, 10);
  CHECK(orb.values[4] == BigRational(14, 9));
  for (std::size_t n = 0; n < orb.values.size(); ++n) CHECK(orb.values[n] == want[n]);
}

TEST_CASE("zero tuple gives reciprocal pairs") {
  auto orb = iterate_y(tup({0, 0}), {2, BigRational(1, 3), 5}, 9);
  for (std::size_t n = 0; n + 3 < orb.values.size(); ++n) CHECK(orb.values[n + 3] * orb.values[n] == 1);
  for (std::size_t n = 0; n + 6 < orb.values.size(); ++n) CHECK(orb.values[n + 6] == orb.values[n]);
}

TEST_CASE("prim4 Y-system single step") {
  auto orb = iterate_y(tup({-1, 0, -1}), {1, 1, 1, 1}, 1);
  CHECK(orb.values[4] == 4);
}

TEST_CASE("positivity and rejection") {
  std::mt19937_64 rng(4);
  for (auto a : std::vector<std::vector<long>>{{-1, 2, -1}, {-1, 1, 1, -1}, {-2, 6, -4, 6, -2}, {1, -1, 1}}) {
    auto orb = iterate_y(tup(a), random_positive(rng, a.size() + 1), a[0] == -2 ? 6 : 12);
    for (const auto& v : orb.values) CHECK(v > 0);
    for (std::size_t n = 0; n + a.size() + 1 < orb.values.size(); ++n) CHECK(satisfies_ysystem_at(tup(a), orb.values, n));
  }
  CHECK_THROWS_WITH_AS(iterate_y(tup({-1, 2, -1}), {1, 0, 1, 1}, 3), doctest::Contains("NonPositiveInitial"), Error);
}

TEST_CASE("ybar from cluster orbits") {
  auto ones = ybar_from_orbit(tup({-1, 2, -1}), std::vector<BigRational>(8, BigRational(1)));
  for (const auto& v : ones.values) CHECK(v == 1);

  std::vector<BigRational> s5{1, 1, 1, 1, 1, 2, 3, 5, 11, 37};
  auto yb = ybar_from_orbit(tup({-1, 1, 1, -1}), s5);
  // ybar_n = x_{n+1} x_{n+4} / (x_{n+2} x_{n+3})
  CHECK(yb.values[0] == 1);
  CHECK(yb.values[1] == 2);
  CHECK(yb.values[2] == BigRational(3, 2));

  // Somos-4: ybar_n = Y_{n+1}.
  auto x = tsys::iterate_t(tsys::TStencil(tup({-1, 2, -1})), std::vector<BigRational>(4, BigRational(1)), 12).values;
  auto y4 = ybar_from_orbit(tup({-1, 2, -1}), x).values;
  auto want = somos4_y();
  for (std::size_t n = 0; n < y4.size(); ++n) CHECK(y4[n] == want[n + 1]);

  CHECK_THROWS_WITH_AS(ybar_from_orbit(tup({-1, 2, -1}), {1, 1, 1}), doctest::Contains("InsufficientWindow"), Error);
}

TEST_CASE("coefficient-free T-orbits give Y-system solutions") {
  std::mt19937_64 rng(8);
  for (auto a : std::vector<std::vector<long>>{{-1, 2, -1}, {-1, 1, 1, -1}, {-1, 0, 1, 1, 0, -1}, {-1, 0, -1}, {-2, 6, -4, 6, -2}}) {
    auto t = tup(a);
    auto x = tsys::iterate_t(tsys::TStencil(t), random_positive(rng, t.order()), a[0] == -2 ? 10 : 20).values;
    auto yb = ybar_from_orbit(t, x).values;
    for (std::size_t n = 0; n + t.order() < yb.size(); ++n) CHECK(satisfies_ysystem_at(t, yb, n));
  }
}

TEST_CASE("gauge fibre maps to one ybar window") {
  std::mt19937_64 rng(12);
  auto t = tup({-1, 2, -1});
  auto x = random_positive(rng, 4);
  auto base = ybar_from_orbit(t, x).values;
  for (int k = 0; k < 5; ++k) {
    auto lm = random_positive(rng, 2);
    auto y = x;
    BigRational f = lm[0];
    for (auto& v : y) {
      v *= f;
      f *= lm[1];
    }
    CHECK(y != x);
    CHECK(ybar_from_orbit(t, y).values == base);
  }
}

TEST_CASE("T_z correspondence") {
  std::mt19937_64 rng(21);
  auto t = tup({-1, 2, -1});
  tsys::TStencil st(t);
  auto zst = zsys::z_stencil_from_tuple(t);
  auto sol = zsys::solve_z(zst, random_positive(rng, zst.order()), 60);
  auto z = sol.sequence();
  auto x = random_positive(rng, 4);

  auto valid = verify_tz_correspondence(t, tsys::iterate_tz(st, x, z, 40), z, 30);
  CHECK(valid.coincide());
  for (bool b : valid.y_holds) CHECK(b);

  auto one = zsys::ZSequence::ones();
  auto trivial = verify_tz_correspondence(t, tsys::iterate_tz(st, x, one, 40), one, 30);
  for (bool b : trivial.y_holds) CHECK(b);

  // Z_5 doubled: the constraints touching Z_5 are n + j = 5 with a_j != 0.
  auto bad = z.perturbed(5, 2);
  auto rep = verify_tz_correspondence(t, tsys::iterate_tz(st, x, bad, 40), bad, 30);
  CHECK(rep.coincide());
  for (std::size_t n = 0; n < 30; ++n) {
    bool touches = false;
    for (std::size_t j = 1; j < 4; ++j) touches |= (n + j == 5 && t.at(j) != 0);
    CHECK(rep.z_holds[n] == !touches);
  }

  // Wrong sequence for the orbit is rejected.
  CHECK_THROWS_AS(verify_tz_correspondence(t, tsys::iterate_tz(st, x, z, 40), bad, 30), Error);
}

TEST_CASE("T_z correspondence on the other presets") {
  std::mt19937_64 rng(22);
  for (auto a : std::vector<std::vector<long>>{{-1, 1, 1, -1}, {-1, 1, 0, 1, -1}, {-1, 0, -1}}) {
    auto t = tup(a);
    auto zst = zsys::z_stencil_from_tuple(t);
    auto z = zsys::solve_z(zst, random_positive(rng, zst.order()), 60).sequence();
    auto bad = z.perturbed(7, 3);
    auto x = random_positive(rng, t.order());
    for (const auto* zz : {&z, &bad}) {
      auto rep = verify_tz_correspondence(t, tsys::iterate_tz(tsys::TStencil(t), x, *zz, 40), *zz, 20);
      CHECK(rep.coincide());
    }
  }
}

TEST_CASE("q-Painleve I") {
  auto auton = qp1_iterate(1, 1, {1, 1}, 10);
  auto want = somos4_y();
  for (std::size_t n = 0; n < auton.values.size(); ++n) CHECK(auton.values[n] == want[n]);

  CHECK(qp1_iterate(2, 3, {1, 1}, 1).values[2] == 4);

  std::mt19937_64 rng(6);
  for (int k = 0; k < 5; ++k) {
    auto p = random_positive(rng, 4);
    auto orb = qp1_iterate(p[0], p[1], {p[2], p[3]}, 34);
    auto zs = somos4_z_invariant(orb.values);
    BigRational qn = 1;
    for (std::size_t n = 0; n < 30; ++n, qn *= p[1]) CHECK(zs[n] == p[0] * qn);
    for (std::size_t n = 0; n < 30; ++n) CHECK(satisfies_ysystem_at(tup({-1, 2, -1}), orb.values, n));
  }
  CHECK_THROWS_WITH_AS(qp1_iterate(0, 1, {1, 1}, 2), doctest::Contains("NonPositiveParameter"), Error);
}

TEST_CASE("Somos-4 Y-orbits have geometric Z invariant") {
  std::mt19937_64 rng(14);
  for (int k = 0; k < 5; ++k) {
    auto y = iterate_y(tup({-1, 2, -1}), random_positive(rng, 4), 20).values;
    auto zs = somos4_z_invariant(y);
    for (std::size_t n = 0; n + 2 < zs.size(); ++n) CHECK(zs[n] * zs[n + 2] == zs[n + 1] * zs[n + 1]);
  }
}

TEST_CASE("coefficient mutation along the schedule reproduces the Y-system") {
  std::mt19937_64 rng(10);
  for (auto a : std::vector<std::vector<long>>{{-1, 2, -1}, {-1, 0, -1}, {0, 0}, {-1, 1, 1, -1}, {-1, 1, 0, 1, -1}, {-2, 6, -4, 6, -2}}) {
    auto t = tup(a);
    auto b = quiver::build_from_tuple(t);
    const std::size_t steps = a[0] == -2 ? 3 : 8;
    for (int trial = 0; trial < 3; ++trial) {
      auto seed = y_from_seed_dynamics(b, random_positive(rng, b.n()), steps);
      REQUIRE(seed.values.size() == b.n() + steps);
      std::vector<BigRational> head(seed.values.begin(), seed.values.begin() + static_cast<long>(b.n()));
      CHECK(iterate_y(t, head, steps).values == seed.values);
    }
  }
  CHECK(y_from_seed_dynamics(quiver::build_from_tuple(tup({-1, 2, -1})), {1, 1, 1, 1}, 8).values.size() == 12);
  algebra::IntMatrix m{{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}};
  CHECK_THROWS_WITH_AS(y_from_seed_dynamics(ExchangeMatrix(m), {1, 1, 1}, 2), doctest::Contains("NotPeriod1"), Error);
}
