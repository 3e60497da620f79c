#include "cpl/reduction/usystem.hpp"

#include <algorithm>
#include <climits>

#include "cpl/algebra/error.hpp"
#include "cpl/tsystem/tsystem.hpp"

namespace cpl::reduction {

namespace {

algebra::Exponent exponent_of(const BigInt& v) {
  long x = algebra::to_long(v);
  if (x < INT32_MIN || x > INT32_MAX) throw Error(Errc::ExponentOverflow, "U exponent out of range");
  return static_cast<algebra::Exponent>(x);
}

USystemSpec derive(const ExchangeMatrix& b, bool z_flag) {
  USystemSpec spec;
  spec.basis = palindromic_basis(b);
  spec.z_flag = z_flag;
  const auto& basis = spec.basis;
  const std::size_t n = basis.n(), r = basis.r, len = basis.support_length();
  spec.r = r;
  const quiver::PalindromicTuple a = quiver::tuple_of(b);
  const long c = algebra::to_long(basis.generator[0]);
  spec.z_power = static_cast<unsigned long>(c);

  // U_{r+1} U_1 has exponent w on x_0..x_N; w_N = c.
  std::vector<long> w(n + 1, 0);
  for (std::size_t j = 0; j < len; ++j) {
    w[j] += algebra::to_long(basis.generator[j]);
    w[j + r] += algebra::to_long(basis.generator[j]);
  }

  std::vector<std::string> names;
  for (std::size_t k = 1; k < r; ++k) names.push_back("U(n+" + std::to_string(k) + ")");
  auto vars = algebra::make_vars(names);

  // x_N^c = ((M+ + M-)/x_0)^c expanded binomially.
  std::vector<LaurentPoly::Term> terms;
  BigInt binom = 1;
  for (long i = 0; i <= c; ++i) {
    algebra::IntVector e(n);
    for (std::size_t j = 0; j < n; ++j) e[j] = w[j];
    e[0] -= c;
    for (std::size_t j = 1; j < n; ++j) e[j] += i * a.plus(j) + (c - i) * a.minus(j);
    auto coeffs = algebra::solve_echelon(basis.vectors, e);
    if (!coeffs) throw Error(Errc::EliminationFailed, "monomial exponent is outside the span of the shift basis");
    if ((*coeffs)[0] != 0) throw Error(Errc::EliminationFailed, "right-hand side depends on U(n)");
    LaurentPoly::Term t;
    for (std::size_t k = 1; k < r; ++k) t.exp.push_back(exponent_of((*coeffs)[k]));
    t.coef = binom;
    terms.push_back(std::move(t));
    binom = binom * (c - i) / (i + 1);
  }
  spec.f = LaurentPoly::from_terms(vars, std::move(terms));

  std::vector<algebra::Exponent> den(r - 1, 0);
  for (std::size_t k = 0; k + 1 < r; ++k) den[k] = std::max<algebra::Exponent>(0, -spec.f.min_exponent(k));
  spec.denominator = LaurentPoly::monomial(vars, den, BigInt(1));
  spec.numerator = spec.f.shifted(den);
  return spec;
}

std::string wrap(const LaurentPoly& p, bool need) { return need ? "(" + p.to_string() + ")" : p.to_string(); }

}  // namespace

USystemSpec derive_usystem(const ExchangeMatrix& b) { return derive(b, false); }
USystemSpec derive_uzsystem(const ExchangeMatrix& b) { return derive(b, true); }

std::string USystemSpec::to_string() const {
  std::string lhs = "U(n+" + std::to_string(r) + ")*U(n)";
  const bool den_one = denominator == LaurentPoly::constant(denominator.vars(), 1);
  std::string rhs;
  if (den_one) {
    rhs = wrap(numerator, z_flag && numerator.nterms() > 1);
  } else {
    std::size_t factors = 0;
    for (std::size_t k = 0; k + 1 < r; ++k) factors += denominator.max_exponent(k) > 0;
    rhs = wrap(numerator, numerator.nterms() > 1) + "/" + wrap(denominator, factors > 1);
  }
  if (z_flag) rhs = (z_power == 1 ? std::string("Z(n)") : "Z(n)^" + std::to_string(z_power)) + "*" + rhs;
  return lhs + " = " + rhs;
}

std::vector<BigRational> iterate_usystem(const USystemSpec& spec, const std::vector<BigRational>& init,
                                         std::size_t steps, const zsys::ZSequence* z) {
  const std::size_t r = spec.r;
  if (init.size() != r) throw Error(Errc::ConfigInvalid, "U-system needs " + std::to_string(r) + " initial values");
  std::vector<BigRational> u = init;
  for (std::size_t n = 0; n < steps; ++n) {
    if (u[n] == 0) throw Error(Errc::ZeroEncountered, "U_" + std::to_string(n) + " = 0 is needed as a divisor");
    BigRational rhs = spec.f.evaluate(std::span<const BigRational>(u.data() + n + 1, r - 1));
    if (z) rhs *= algebra::pow(z->value(n), static_cast<long>(spec.z_power));
    u.push_back(rhs / u[n]);
  }
  return u;
}

std::vector<LaurentPoly> usystem_map(const USystemSpec& spec) {
  const std::size_t r = spec.r;
  std::vector<std::string> names;
  for (std::size_t k = 1; k <= r; ++k) names.push_back("U" + std::to_string(k));
  auto vars = algebra::make_vars(names);
  std::vector<LaurentPoly> out;
  for (std::size_t i = 1; i < r; ++i) out.push_back(LaurentPoly::variable(vars, i));
  std::vector<LaurentPoly::Term> terms;
  for (std::size_t t = 0; t < spec.f.nterms(); ++t) {
    LaurentPoly::Term term;
    term.exp.assign(r, 0);
    term.exp[0] = -1;
    auto e = spec.f.exponent(t);
    for (std::size_t k = 0; k + 1 < r; ++k) term.exp[k + 1] = e[k];
    term.coef = spec.f.coef(t);
    terms.push_back(std::move(term));
  }
  out.push_back(LaurentPoly::from_terms(vars, std::move(terms)));
  return out;
}

ConjugacyReport verify_conjugacy(const ExchangeMatrix& b, const PalindromicBasis& basis,
                                 const std::vector<BigRational>& init, std::size_t steps, const zsys::ZSequence* z) {
  USystemSpec spec = z ? derive_uzsystem(b) : derive_usystem(b);
  if (spec.basis.generator != basis.generator)
    throw Error(Errc::ConfigInvalid, "basis does not match the palindromic basis of B");
  tsys::TStencil st = tsys::TStencil::from_matrix(b);
  auto orbit = z ? tsys::iterate_tz(st, init, *z, steps) : tsys::iterate_t(st, init, steps);

  ConjugacyReport rep;
  rep.projected = project_orbit(basis, orbit.values);
  rep.reduced = iterate_usystem(spec, project(basis, init), steps, z);
  rep.holds = true;
  for (std::size_t m = 0; m < rep.reduced.size(); ++m)
    if (m >= rep.projected.size() || rep.projected[m] != rep.reduced[m]) {
      rep.holds = false;
      rep.mismatch_at = m;
      break;
    }
  return rep;
}

}  // namespace cpl::reduction
