#include "cpl/reduction/palindromic.hpp"

#include <optional>
#include <utility>

#include "cpl/algebra/error.hpp"

namespace cpl::reduction {

namespace {

using algebra::RatVector;

struct Support {
  std::size_t lo, hi;
  std::size_t length() const { return hi - lo + 1; }
};

std::optional<Support> support_of(const RatVector& v) {
  std::optional<Support> s;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) {
      if (!s) s = Support{i, i};
      s->hi = i;
    }
  return s;
}

bool palindromic_support(const RatVector& v) {
  auto s = support_of(v);
  if (!s) return false;
  for (std::size_t i = s->lo; i <= s->hi; ++i)
    if (v[i] != v[s->lo + s->hi - i]) return false;
  return true;
}

RatVector reversal(const RatVector& v) { return RatVector(v.rbegin(), v.rend()); }

// s^k for either sign of k; the caller keeps the support inside [0, N).
RatVector shift(const RatVector& v, long k) {
  RatVector out(v.size(), BigRational(0));
  const long n = static_cast<long>(v.size());
  for (long i = 0; i < n; ++i)
    if (v[static_cast<std::size_t>(i)] != 0) {
      long j = i + k;
      if (j < 0 || j >= n) throw Error(Errc::EliminationFailed, "shift leaves the index range");
      out[static_cast<std::size_t>(j)] = v[static_cast<std::size_t>(i)];
    }
  return out;
}

bool is_zero(const RatVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

IntVector integral_primitive(const RatVector& v);

// Symmetrize with a matched reversal, then move the support to start at 0.
// An antipalindromic v has v + s^k(r(v)) = 0; then v = (1 - s) w with w
// palindromic and one entry shorter, and w replaces v when it lies in im B.
std::optional<RatVector> prepare(RatVector v, const IntMatrix& b) {
  if (!palindromic_support(v)) {
    RatVector w = reversal(v);
    long k = static_cast<long>(support_of(v)->lo) - static_cast<long>(support_of(w)->lo);
    w = shift(w, k);
    RatVector sum = v;
    for (std::size_t i = 0; i < v.size(); ++i) sum[i] += w[i];
    if (is_zero(sum)) {
      auto sup = support_of(v);
      RatVector q(v.size(), BigRational(0));
      BigRational acc = 0;
      for (std::size_t i = sup->lo; i < sup->hi; ++i) q[i] = acc += v[i];
      if (is_zero(q) || !algebra::in_rational_span(b, integral_primitive(q))) return std::nullopt;
      return prepare(std::move(q), b);
    }
    v = std::move(sum);
  }
  return shift(v, -static_cast<long>(support_of(v)->lo));
}

// Clears coordinates [0, N - l] of v using the shifts of gen (gen[0] != 0).
RatVector reduce_against(RatVector v, const RatVector& gen, std::size_t len) {
  const std::size_t n = v.size();
  for (std::size_t j = 0; j + len <= n; ++j) {
    if (v[j] == 0) continue;
    BigRational f = v[j] / gen[0];
    for (std::size_t i = 0; i < len; ++i) v[j + i] -= f * gen[i];
  }
  return v;
}

IntVector integral_primitive(const RatVector& v) {
  BigInt l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    BigRational t = v[i] * l;
    out[i] = t.get_num();
  }
  out = algebra::primitive_part(out);
  for (const auto& x : out)
    if (x != 0) {
      if (x < 0)
        for (auto& y : out) y = -y;
      break;
    }
  return out;
}

IntMatrix shift_matrix(const IntVector& gen, std::size_t r) {
  const std::size_t n = gen.size();
  IntMatrix m(r, n);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; i + j < n; ++j) m(i, i + j) = gen[j];
  return m;
}

// Independent route: the last row of the reduced echelon form with columns
// taken in reverse order spans the vectors of im B supported on [0, N-r].
IntVector echelon_generator(const IntMatrix& b, std::size_t r) {
  const std::size_t n = b.cols();
  IntMatrix rev(b.rows(), n);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < n; ++j) rev(i, j) = b(i, n - 1 - j);
  auto rref = algebra::rational_rref(rev);
  if (rref.size() != r) throw Error(Errc::EliminationFailed, "rank mismatch in echelon route");
  return integral_primitive(reversal(rref.back()));
}

}  // namespace

PalindromicBasis palindromic_basis(const ExchangeMatrix& b) {
  if (!quiver::is_period1(b)) throw Error(Errc::NotPeriod1, "palindromic basis needs a period-1 exchange matrix");
  const std::size_t n = b.n();
  const std::size_t r = algebra::rank(b.matrix());
  if (r == 0) throw Error(Errc::DomainError, "B = 0 has no reduction");

  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < n; ++i) {
    RatVector v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = b(i, j);
    if (!is_zero(v)) rows.push_back(std::move(v));
  }

  // Candidate in im B, prepared; degenerate symmetrizations move on to the
  // next candidate, then to sums of candidates.
  auto first_prepared = [&b](const std::vector<RatVector>& cands) -> std::optional<RatVector> {
    for (const auto& c : cands)
      if (auto p = prepare(c, b.matrix())) return p;
    for (std::size_t i = 0; i < cands.size(); ++i)
      for (std::size_t j = i + 1; j < cands.size(); ++j) {
        RatVector s = cands[i];
        for (std::size_t k = 0; k < s.size(); ++k) s[k] += cands[j][k];
        if (is_zero(s)) continue;
        if (auto p = prepare(s, b.matrix())) return p;
      }
    return std::nullopt;
  };

  auto gen = first_prepared(rows);
  if (!gen) throw Error(Errc::EliminationFailed, "no row of B symmetrizes to a nonzero vector");
  std::size_t rounds = 0;
  while (true) {
    const std::size_t len = support_of(*gen)->length();
    if (n - len + 1 == r) break;
    if (++rounds > n) throw Error(Errc::EliminationFailed, "repair loop exceeded N rounds");
    std::vector<RatVector> shorter;
    for (const auto& row : rows) {
      RatVector v = support_of(row)->length() < len ? row : reduce_against(row, *gen, len);
      if (!is_zero(v) && support_of(v)->length() < len) shorter.push_back(std::move(v));
    }
    auto next = first_prepared(shorter);
    if (!next) throw Error(Errc::EliminationFailed, "repair step found no usable row");
    gen = std::move(next);
  }

  PalindromicBasis out;
  out.generator = integral_primitive(*gen);
  out.r = r;
  out.vectors = shift_matrix(out.generator, r);
  out.repair_rounds = rounds;

  if (echelon_generator(b.matrix(), r) != out.generator)
    throw Error(Errc::EliminationFailed, "symmetrization and echelon routes give different generators");
  if (!algebra::same_lattice(out.vectors, algebra::image_lattice_basis(b.matrix())))
    throw Error(Errc::EliminationFailed, "shift basis does not span the integer image lattice");
  return out;
}

std::vector<BigRational> project(const PalindromicBasis& basis, std::span<const BigRational> x) {
  if (x.size() != basis.n()) throw Error(Errc::IndexOutOfRange, "point has the wrong dimension");
  for (std::size_t j = 0; j < x.size(); ++j)
    if (x[j] == 0) throw Error(Errc::ZeroComponent, "x_" + std::to_string(j) + " = 0");
  std::vector<BigRational> u(basis.r, BigRational(1));
  for (std::size_t i = 0; i < basis.r; ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (basis.vectors(i, j) != 0) u[i] *= algebra::pow(x[j], algebra::to_long(basis.vectors(i, j)));
  return u;
}

std::vector<BigRational> project_orbit(const PalindromicBasis& basis, std::span<const BigRational> orbit) {
  const std::size_t len = basis.support_length();
  std::vector<BigRational> u;
  for (std::size_t m = 0; m + len <= orbit.size(); ++m) {
    BigRational v = 1;
    for (std::size_t j = 0; j < len; ++j) {
      if (basis.generator[j] == 0) continue;
      if (orbit[m + j] == 0) throw Error(Errc::ZeroComponent, "x_" + std::to_string(m + j) + " = 0");
      v *= algebra::pow(orbit[m + j], algebra::to_long(basis.generator[j]));
    }
    u.push_back(std::move(v));
  }
  return u;
}

}  // namespace cpl::reduction
