#include <doctest.h>

#include <map>
#include <random>

#include "cpl/algebra/error.hpp"
#include "cpl/algebra/int_matrix.hpp"
#include "cpl/algebra/int_poly.hpp"
#include "cpl/algebra/laurent.hpp"
#include "cpl/algebra/laurent_kernels.hpp"
#include "cpl/algebra/serialize.hpp"

using namespace cpl;
using namespace cpl::algebra;

namespace {

LaurentPoly var(const VarList& v, std::size_t i) { return LaurentPoly::variable(v, i); }
LaurentPoly cst(const VarList& v, long c) { return LaurentPoly::constant(v, BigInt(c)); }

LaurentPoly random_poly(std::mt19937_64& rng, const VarList& v, int terms, int lo, int hi, int cmax) {
  std::vector<LaurentPoly::Term> t;
  std::uniform_int_distribution<int> e(lo, hi), c(-cmax, cmax);
  for (int k = 0; k < terms; ++k) {
    LaurentPoly::Term term;
    for (std::size_t i = 0; i < v->size(); ++i) term.exp.push_back(e(rng));
    term.coef = c(rng);
    t.push_back(term);
  }
  return LaurentPoly::from_terms(v, std::move(t));
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-6/-4")) == "3/2");
  CHECK(to_string(parse_rational(" 7 ")) == "7");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  auto l = parse_int_list("-1,2,-1");
  CHECK(l == std::vector<long>{-1, 2, -1});
  BigRational a = parse_rational("5/7"), b = parse_rational("-3/11");
  CHECK((a + b) - b == a);
  CHECK((a * b) / b == a);
  CHECK(pow(BigRational(2, 3), -2) == BigRational(9, 4));
}

TEST_CASE("Laurent polynomials keep canonical lex order") {
  auto v = make_indexed_vars("x", 3);
  LaurentPoly p = var(v, 0) * var(v, 2) + var(v, 1) * var(v, 1);
  CHECK(p.nterms() == 2);
  CHECK(p.exponent(0)[0] == 0);  // x1^2 sorts before x0*x2
  CHECK(p == var(v, 1).pow(2) + var(v, 2) * var(v, 0));
  CHECK((p - p).is_zero());
  CHECK(p.to_string() == "x0*x2 + x1^2");
}

TEST_CASE("monomial divisor always divides") {
  auto v = make_indexed_vars("x", 4);
  LaurentPoly p = var(v, 1) * var(v, 3) + var(v, 2).pow(2);
  LaurentPoly r = laurent_div(p, var(v, 1));
  std::vector<Exponent> e{0, -1, 2, 0};
  CHECK(r == var(v, 3) + LaurentPoly::monomial(v, e, BigInt(1)));
}

TEST_CASE("exact polynomial division") {
  auto v = make_indexed_vars("x", 1);
  LaurentPoly x = var(v, 0);
  CHECK(laurent_div(x * x - cst(v, 1), x - cst(v, 1)) == x + cst(v, 1));
  CHECK_FALSE(laurent_try_div(x * x + cst(v, 1), x - cst(v, 1)).has_value());
  CHECK_FALSE(laurent_try_div(x * x + cst(v, 1), cst(v, 2)).has_value());
  CHECK_THROWS_AS(laurent_try_div(x, LaurentPoly(v)), Error);
}

TEST_CASE("division failure is reported, not thrown, by try_div") {
  auto v = make_indexed_vars("x", 2);
  LaurentPoly a = var(v, 0) + var(v, 1), b = var(v, 0) - var(v, 1);
  CHECK_FALSE(laurent_try_div(a * a + cst(v, 1), b).has_value());
  CHECK_THROWS_WITH_AS(laurent_div(a, b), doctest::Contains("DivisionFails"), Error);
}

TEST_CASE("Somos-4 iterates are Laurent and match a rational-function oracle") {
  // Oracle: x_n as numerator / monomial denominator, numerators computed by
  // independent polynomial arithmetic over the same kernel-free reference path.
  auto v = make_indexed_vars("x", 4);
  std::vector<LaurentPoly> x;
  for (int i = 0; i < 4; ++i) x.push_back(var(v, i));
  for (int n = 0; n < 6; ++n) {
    LaurentPoly num = kernels::mul_reference(x[n + 3], x[n + 1]) + kernels::mul_reference(x[n + 2], x[n + 2]);
    auto q = laurent_try_div(num, x[n]);
    REQUIRE(q.has_value());
    CHECK(kernels::mul_reference(*q, x[n]) == num);
    x.push_back(*q);
  }
  // x4 = (x1 x3 + x2^2)/x0 and x5 is a Laurent polynomial with denominator
  // x0 x1; evaluate against the integer sequence at the all-ones point.
  std::vector<BigRational> ones(4, BigRational(1));
  std::vector<long> seq{1, 1, 1, 1, 2, 3, 7, 23, 59, 314};
  for (int n = 0; n < 10; ++n) CHECK(x[n].evaluate(ones) == seq[n]);
  // Denominator of x5 is a monomial: multiplying by x0*x1 clears it.
  std::vector<Exponent> e{1, 1, 0, 0};
  LaurentPoly cleared = x[5].shifted(e);
  for (std::size_t t = 0; t < cleared.nterms(); ++t)
    for (auto ex : cleared.exponent(t)) CHECK(ex >= 0);
}

TEST_CASE("division round trip on random products") {
  std::mt19937_64 rng(7);
  auto v = make_indexed_vars("x", 3);
  for (int trial = 0; trial < 20; ++trial) {
    LaurentPoly a = random_poly(rng, v, 6, -3, 3, 5), b = random_poly(rng, v, 4, -2, 2, 4);
    if (b.is_zero()) continue;
    LaurentPoly p = a * b;
    auto r = laurent_try_div(p, b);
    REQUIRE(r.has_value());
    CHECK(*r == a);
    CHECK(*r * b == p);
  }
}

TEST_CASE("packed kernels agree with the reference") {
  std::mt19937_64 rng(11);
  auto v = make_indexed_vars("x", 5);
  for (int trial = 0; trial < 10; ++trial) {
    LaurentPoly a = random_poly(rng, v, 40, -6, 6, 9), b = random_poly(rng, v, 30, -4, 8, 9);
    LaurentPoly r = kernels::mul_reference(a, b);
    CHECK(kernels::mul_packed_serial(a, b) == r);
    CHECK(kernels::mul_packed_parallel(a, b) == r);
  }
}

TEST_CASE("128-bit keys handle wide exponent boxes") {
  auto v = make_indexed_vars("x", 6);
  std::vector<Exponent> e1(6, 200000), e2(6, -200000);
  LaurentPoly a = LaurentPoly::monomial(v, e1, BigInt(3)) + LaurentPoly::monomial(v, e2, BigInt(1));
  LaurentPoly r = kernels::mul_reference(a, a);
  CHECK(kernels::mul_packed_serial(a, a) == r);
  CHECK(laurent_div(r, a) == a);
  auto w = make_indexed_vars("x", 9);
  std::vector<Exponent> f1(9, 200000), f2(9, -200000);
  LaurentPoly b = LaurentPoly::monomial(w, f1, BigInt(1)) + LaurentPoly::monomial(w, f2, BigInt(1));
  CHECK_THROWS_WITH_AS(kernels::mul_packed_serial(b, b), doctest::Contains("ExponentOverflow"), Error);
  CHECK(b * b == kernels::mul_reference(b, b));
}

TEST_CASE("variable mismatch is rejected") {
  auto v = make_indexed_vars("x", 2), w = make_indexed_vars("y", 2);
  CHECK_THROWS_WITH_AS(var(v, 0) + var(w, 0), doctest::Contains("VariableMismatch"), Error);
  CHECK(var(v, 0) + var(make_indexed_vars("x", 2), 1) == var(v, 0) + var(v, 1));
}

TEST_CASE("derivative and evaluation") {
  auto v = make_indexed_vars("u", 2);
  LaurentPoly f = (var(v, 1) + cst(v, 1)) * LaurentPoly::monomial(v, std::vector<Exponent>{-1, -2}, BigInt(1));
  std::vector<BigRational> pt{BigRational(2), BigRational(3)};
  CHECK(f.evaluate(pt) == BigRational(2, 9));
  // d/du1 (u1^-1 u0^-1 + u0^-1 u1^-2) = -u0^-1 u1^-2 - 2 u0^-1 u1^-3
  CHECK(f.derivative(1).evaluate(pt) == BigRational(-1, 18) - BigRational(1, 27));
}

TEST_CASE("JSON round trip") {
  auto v = make_indexed_vars("x", 2);
  LaurentPoly p = var(v, 0).pow(3) - LaurentPoly::monomial(v, std::vector<Exponent>{-1, 2}, BigInt("123456789012345678901234567890"));
  auto j = to_json(p);
  CHECK(j["terms"][0]["coef"] == "-123456789012345678901234567890");
  CHECK(laurent_from_json(j) == p);
}

TEST_CASE("kernel basis") {
  IntMatrix zero(4, 4);
  auto k0 = kernel_basis(zero);
  CHECK(k0.size() == 4);
  IntMatrix s4{{0, -1, 2, -1}, {1, 0, -3, 2}, {-2, 3, 0, -1}, {1, -2, 1, 0}};
  auto k = kernel_basis(s4);
  REQUIRE(k.size() == 2);
  for (const auto& u : k) {
    for (const auto& x : s4 * u) CHECK(x == 0);
    CHECK(content(u) == 1);
  }
  IntMatrix basis = IntMatrix::from_rows(k, 4);
  IntMatrix expect{{1, 1, 1, 1}, {1, 2, 3, 4}};
  CHECK(same_lattice(basis, expect));
  IntMatrix p4{{0, -1, 0, -1}, {1, 0, -1, 0}, {0, 1, 0, -1}, {1, 0, 1, 0}};
  CHECK(kernel_basis(p4).empty());
}

TEST_CASE("image lattice") {
  IntMatrix p4{{0, -1, 0, -1}, {1, 0, -1, 0}, {0, 1, 0, -1}, {1, 0, 1, 0}};
  CHECK(image_lattice_basis(p4) == IntMatrix::identity(4));
  IntMatrix s4{{0, -1, 2, -1}, {1, 0, -3, 2}, {-2, 3, 0, -1}, {1, -2, 1, 0}};
  IntMatrix im = image_lattice_basis(s4);
  CHECK(im.rows() == 2);
  CHECK(solve_echelon(im, IntVector{1, -2, 1, 0}).has_value());
  CHECK(solve_echelon(im, IntVector{0, 1, -2, 1}).has_value());
  CHECK_FALSE(solve_echelon(im, IntVector{1, 0, 0, 0}).has_value());
  CHECK(image_lattice_basis(IntMatrix(4, 4)).rows() == 0);
}

TEST_CASE("image lattice saturates a non-saturated column span") {
  // Columns span 2Z x Z inside Q^2 = full rank, so the saturation is Z^2.
  IntMatrix b{{2, 0}, {0, 1}};
  CHECK(image_lattice_basis(b) == IntMatrix::identity(2));
  // Columns (2,4) and (1,2): rational span of (1,2), saturated basis (1,2).
  IntMatrix c{{2, 1}, {4, 2}};
  IntMatrix im = image_lattice_basis(c);
  CHECK(im == IntMatrix{{1, 2}});
}

TEST_CASE("rank-nullity on random skew matrices") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + trial % 5;
    IntMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        int x = trial % 3 == 0 ? 2 * d(rng) : d(rng);
        b(i, j) = x;
        b(j, i) = -x;
      }
    auto k = kernel_basis(b);
    IntMatrix im = image_lattice_basis(b);
    CHECK(k.size() + im.rows() == n);
    for (const auto& u : k)
      for (const auto& x : b * u) CHECK(x == 0);
    for (std::size_t i = 0; i < im.rows(); ++i) {
      CHECK(in_rational_span(b, im.row(i)));
      CHECK(content(im.row(i)) == 1);
    }
    // Every column of B lies in the lattice.
    IntMatrix bt = b.transpose();
    for (std::size_t i = 0; i < n; ++i) CHECK(solve_echelon(im, bt.row(i)).has_value());
  }
}

TEST_CASE("integer polynomial factorization") {
  IntPoly p = IntPoly::from_longs({1, -3, 2, -3, 1});
  auto f = factor_small(p);
  REQUIRE(f.size() == 2);
  CHECK(f[0].factor == IntPoly::from_longs({1, -3, 1}));
  CHECK(f[1].factor == IntPoly::from_longs({1, 0, 1}));
  CHECK(factored_string(factor_small(IntPoly::from_longs({1, -1, -1, 1}))) == "(lambda - 1)^2*(lambda + 1)");
  CHECK(factored_string(factor_small(IntPoly::from_longs({2, -4, 2}))) == "(lambda - 1)^2");
  CHECK(squarefree_part(IntPoly::from_longs({1, -2, 1})) == IntPoly::from_longs({-1, 1}));
}
