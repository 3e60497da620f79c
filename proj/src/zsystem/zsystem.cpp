#include "cpl/zsystem/zsystem.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <memory>

#include "cpl/algebra/error.hpp"

namespace cpl::zsys {

using algebra::IntPoly;

ZStencil z_stencil_from_tuple(const quiver::PalindromicTuple& a) {
  if (a.is_zero()) throw Error(Errc::ZeroTuple, "the zero tuple has no Z-system");
  ZStencil st;
  for (long x : a.values()) st.exponents.push_back(-x);
  std::size_t first = 0, last = st.exponents.size() - 1;
  while (st.exponents[first] == 0) ++first;
  while (st.exponents[last] == 0) --last;
  st.offset = first + 1;
  st.c.assign(st.exponents.begin() + static_cast<long>(first), st.exponents.begin() + static_cast<long>(last) + 1);
  return st;
}

BigRational constraint_value(const ZStencil& st, const ZSequence& z, std::size_t m) {
  BigRational v = 1;
  for (std::size_t i = 0; i < st.c.size(); ++i)
    if (st.c[i] != 0) v *= algebra::pow(z.value(m + i), st.c[i]);
  return v;
}

bool constraint_holds_at(const ZStencil& st, const ZSequence& z, std::size_t n) {
  return constraint_value(st, z, n + st.offset) == 1;
}

namespace {

// Exact k-th root of a rational, positive for even k; empty if irrational.
std::optional<BigRational> exact_root(const BigRational& x, unsigned long k) {
  if (k == 1) return x;
  if (x < 0 && k % 2 == 0) return std::nullopt;
  BigInt num = algebra::abs(BigInt(x.get_num())), den = x.get_den();
  BigInt rn, rd;
  if (!mpz_root(rn.get_mpz_t(), num.get_mpz_t(), k)) return std::nullopt;
  if (!mpz_root(rd.get_mpz_t(), den.get_mpz_t(), k)) return std::nullopt;
  BigRational r(rn, rd);
  r.canonicalize();
  return x < 0 ? BigRational(-r) : r;
}

BigRational power_rational_exponent(const BigRational& base, const BigRational& e) {
  BigRational raised = algebra::pow(base, algebra::to_long(BigInt(e.get_num())));
  auto r = exact_root(raised, e.get_den().get_ui());
  if (!r) throw Error(Errc::AlgebraicZCase, "Z value " + algebra::to_string(base) + "^" + algebra::to_string(e) + " is not rational");
  return *r;
}

std::optional<ClosedForm> recognize(const ZStencil& st, const std::optional<std::vector<BigRational>>& init) {
  // Z_m Z_{m+p+1} = Z_{m+1} Z_{m+p}, solved by beta_{n mod p} q^n.
  const std::size_t r = st.order();
  if (r < 2) return std::nullopt;
  const std::size_t p = r - 1;
  std::vector<long> want(r + 1, 0);
  if (p == 1) {
    want = {1, -2, 1};
  } else {
    want[0] = want[r] = 1;
    want[1] = want[r - 1] = -1;
  }
  std::vector<long> neg(want.size());
  std::transform(want.begin(), want.end(), neg.begin(), [](long x) { return -x; });
  if (st.c != want && st.c != neg) return std::nullopt;
  ClosedForm cf;
  cf.period = p;
  cf.formula = p == 1 ? "Z_n = beta*q^n" : "Z_n = beta_{n mod " + std::to_string(p) + "}*q^n";
  if (init) {
    auto q = exact_root((*init)[p] / (*init)[0], p);
    if (q) {
      std::vector<BigRational> betas(p);
      for (std::size_t k = 0; k < p; ++k) betas[k] = (*init)[k] / algebra::pow(*q, static_cast<long>(k));
      cf.q = *q;
      cf.betas = std::move(betas);
    }
  }
  return cf;
}

}  // namespace

std::vector<BigRational> ZSolution::exponent_sequence(std::size_t k) const {
  std::vector<BigRational> s;
  for (const auto& e : exps_) s.push_back(e.at(k));
  return s;
}

BigRational ZSolution::value(std::size_t n) const {
  if (!init_) throw Error(Errc::DomainError, "Z-solution has no numeric initial data");
  if (n >= values_.size()) throw Error(Errc::IndexOutOfRange, "Z_" + std::to_string(n) + " not tabulated");
  return values_[n];
}

ZSequence ZSolution::sequence() const {
  auto self = std::make_shared<const ZSolution>(*this);
  std::vector<std::string> names;
  for (std::size_t k = 0; k < st_.order(); ++k) names.push_back("Z" + std::to_string(k));
  std::function<BigRational(std::size_t)> numeric;
  if (init_) numeric = [self](std::size_t n) { return self->value(n); };
  return ZSequence::custom(
      numeric, names, [self](std::size_t n) { return ZMonomial{1, self->exponents(n)}; }, count());
}

ZSolution solve_z(const ZStencil& st, std::optional<std::vector<BigRational>> init, std::size_t count) {
  const std::size_t r = st.order();
  if (init) {
    if (init->size() != r)
      throw Error(Errc::ConfigInvalid, "Z-system of order " + std::to_string(r) + " needs " + std::to_string(r) + " initial values");
    for (const auto& v : *init)
      if (v == 0) throw Error(Errc::ZeroInitial, "initial Z value is zero");
  }
  ZSolution sol;
  sol.st_ = st;
  sol.init_ = init;
  sol.ambiguous_ = std::labs(st.leading()) > 1;
  const BigRational lead(st.leading());
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<BigRational> d(r, BigRational(0));
    if (n < r) {
      d[n] = 1;
    } else {
      // c_r d[n] = -sum_{i<r} c_i d[n-r+i]
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) d[k] -= BigRational(st.c[i]) * sol.exps_[n - r + i][k];
      for (auto& x : d) x /= lead;
    }
    sol.exps_.push_back(std::move(d));
  }
  if (init) {
    for (std::size_t n = 0; n < count; ++n) {
      BigRational v = 1;
      for (std::size_t k = 0; k < r; ++k)
        if (sol.exps_[n][k] != 0) v *= power_rational_exponent((*init)[k], sol.exps_[n][k]);
      sol.values_.push_back(v);
    }
  }
  sol.closed_ = recognize(st, init);
  return sol;
}

IntPoly char_poly(const ZStencil& st) {
  std::vector<BigInt> c;
  for (long x : st.c) c.emplace_back(x);
  return IntPoly(std::move(c)).primitive();
}

namespace {

using cld = std::complex<long double>;

struct Eval {
  cld value, deriv;
  long double magnitude;  // sum |c_i||z|^i, scales the rounding error
};

Eval horner(const IntPoly& f, cld z) {
  cld v = 0, d = 0;
  long double mag = 0, az = std::abs(z);
  for (int k = f.degree(); k >= 0; --k) {
    long double ck = f.coef(k).get_d();
    d = d * z + v;
    v = v * z + ck;
    mag = mag * az + std::fabs(ck);
  }
  return {v, d, mag};
}

// Roots of a squarefree factor with certified inclusion radii.
void roots_of(const IntPoly& f, std::vector<cld>& roots, std::vector<long double>& radii) {
  const int d = f.degree();
  if (d == 1) {
    roots.emplace_back(-f.coef(0).get_d() / f.coef(1).get_d());
    radii.push_back(4 * LDBL_EPSILON * std::abs(roots.back()));
    return;
  }
  using Mat = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  Mat comp = Mat::Zero(d, d);
  const long double lead = f.leading().get_d();
  for (int i = 1; i < d; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < d; ++i) comp(i, d - 1) = -f.coef(i).get_d() / lead;
  Eigen::EigenSolver<Mat> es(comp, false);
  const long double gamma = 4 * (d + 1) * LDBL_EPSILON;
  std::vector<cld> local;
  std::vector<long double> rad;
  for (int i = 0; i < d; ++i) {
    cld z = es.eigenvalues()[i];
    for (int it = 0; it < 50; ++it) {
      Eval e = horner(f, z);
      if (std::abs(e.deriv) == 0) break;
      cld step = e.value / e.deriv;
      z -= step;
      if (std::abs(step) <= LDBL_EPSILON * std::max<long double>(1, std::abs(z))) break;
    }
    Eval e = horner(f, z);
    long double bound = d * (std::abs(e.value) + gamma * e.magnitude) / std::abs(e.deriv);
    local.push_back(z);
    rad.push_back(bound);
  }
  // Overlapping disks may share a root; fall back to the sum of radii.
  long double total = 0;
  for (auto r : rad) total += r;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (std::abs(local[i] - local[j]) <= rad[i] + rad[j]) {
        rad.assign(d, total);
        i = d;
        break;
      }
  roots.insert(roots.end(), local.begin(), local.end());
  radii.insert(radii.end(), rad.begin(), rad.end());
}

}  // namespace

SpectralEstimate spectral_radius(const IntPoly& p) {
  if (p.degree() < 1) throw Error(Errc::DomainError, "spectral radius of a constant polynomial");
  std::vector<cld> roots;
  std::vector<long double> radii;
  for (const auto& f : algebra::factor_small(p)) roots_of(squarefree_part(f.factor), roots, radii);
  SpectralEstimate est;
  long double best = -1, bound = 0;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    long double m = std::abs(roots[i]);
    if (m > best) best = m;
    est.roots.emplace_back(static_cast<double>(roots[i].real()), static_cast<double>(roots[i].imag()));
  }
  // |radius - true| is bounded by the largest radius among roots whose disks
  // reach the maximal modulus.
  for (std::size_t i = 0; i < roots.size(); ++i)
    if (std::abs(roots[i]) + radii[i] >= best - radii[i]) bound = std::max(bound, radii[i]);
  est.radius = static_cast<double>(best);
  est.error_bound = static_cast<double>(bound) + 2 * DBL_EPSILON * static_cast<double>(best);
  std::sort(est.roots.begin(), est.roots.end(), [](auto a, auto b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
    return a.imag() > b.imag();
  });
  return est;
}

}  // namespace cpl::zsys
