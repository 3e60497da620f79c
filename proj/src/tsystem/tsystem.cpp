#include "cpl/tsystem/tsystem.hpp"

#include <algorithm>

#include "cpl/algebra/error.hpp"

namespace cpl::tsys {

namespace {

BigRational monomial_value(const std::vector<BigRational>& x, std::size_t n, const std::vector<long>& e) {
  BigRational v = 1;
  for (std::size_t j = 0; j < e.size(); ++j)
    if (e[j] != 0) v *= algebra::pow(x[n + j + 1], e[j]);
  return v;
}

LaurentPoly monomial_poly(const std::vector<LaurentPoly>& x, std::size_t n, const std::vector<long>& e,
                          const algebra::VarList& vars) {
  LaurentPoly v = LaurentPoly::constant(vars, 1);
  for (std::size_t j = 0; j < e.size(); ++j)
    if (e[j] != 0) v = v * x[n + j + 1].pow(static_cast<unsigned long>(e[j]));
  return v;
}

RationalOrbit iterate_rational(const TStencil& st, const std::vector<BigRational>& init, const zsys::ZSequence* z,
                               std::size_t steps) {
  const std::size_t n0 = st.order();
  if (init.size() != n0)
    throw Error(Errc::ConfigInvalid, "T-system of order " + std::to_string(n0) + " needs " + std::to_string(n0) + " initial values");
  RationalOrbit orb;
  orb.stencil = st.tuple().values();
  orb.values = init;
  for (std::size_t i = 0; i < n0; ++i)
    if (init[i] == 0) throw Error(Errc::ZeroEncountered, "initial value x_" + std::to_string(i) + " is zero");
  for (std::size_t n = 0; n < steps; ++n) {
    const auto& x = orb.values;
    if (x[n] == 0) throw Error(Errc::ZeroEncountered, "x_" + std::to_string(n) + " = 0 is needed as a divisor");
    BigRational rhs = monomial_value(x, n, st.plus()) + monomial_value(x, n, st.minus());
    if (z) {
      BigRational zn = z->value(n);
      orb.coefficients.push_back(zn);
      rhs *= zn;
    }
    orb.values.push_back(rhs / x[n]);
  }
  return orb;
}

SymbolicOrbit iterate_symbolic(const TStencil& st, const zsys::ZSequence* z, std::size_t steps, const SymbolicOptions& opts) {
  const std::size_t n0 = st.order();
  if (n0 + steps > opts.max_index + 1)
    throw Error(Errc::TermLimitExceeded, "symbolic depth cap: x_" + std::to_string(n0 + steps - 1) + " exceeds n = " +
                                             std::to_string(opts.max_index));
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n0; ++i) names.push_back("x" + std::to_string(i));
  std::vector<std::string> zsyms;
  if (z) {
    zsyms = z->symbols();
    for (const auto& s : zsyms)
      if (std::find(names.begin(), names.end(), s) != names.end())
        throw Error(Errc::ConfigInvalid, "coefficient symbol " + s + " clashes with a cluster variable");
    names.insert(names.end(), zsyms.begin(), zsyms.end());
  }
  SymbolicOrbit orb;
  orb.stencil = st.tuple().values();
  orb.vars = algebra::make_vars(names);
  for (std::size_t i = 0; i < n0; ++i) orb.values.push_back(LaurentPoly::variable(orb.vars, i));
  for (std::size_t n = 0; n < steps; ++n) {
    const auto& x = orb.values;
    LaurentPoly rhs = monomial_poly(x, n, st.plus(), orb.vars) + monomial_poly(x, n, st.minus(), orb.vars);
    if (z) rhs = rhs * z_monomial(z->monomial(n), zsyms, orb.vars);
    if (rhs.nterms() > opts.term_limit)
      throw Error(Errc::TermLimitExceeded, "numerator of x_" + std::to_string(n + n0) + " has " + std::to_string(rhs.nterms()) + " terms");
    auto q = algebra::laurent_try_div(rhs, x[n]);
    if (!q) throw Error(Errc::NonLaurentIterate, "x_" + std::to_string(n + n0) + " is not a Laurent polynomial");
    orb.values.push_back(std::move(*q));
  }
  return orb;
}

}  // namespace

TStencil::TStencil(PalindromicTuple a) : a_(std::move(a)) {
  const std::size_t n = a_.order();
  for (std::size_t j = 1; j < n; ++j) {
    plus_.push_back(a_.plus(j));
    minus_.push_back(a_.minus(j));
  }
  for (std::size_t j = 1; j < n; ++j)
    if (a_.at(j) != 0) {
      first_is_plus_ = a_.at(j) > 0;
      break;
    }
}

TStencil TStencil::from_matrix(const quiver::ExchangeMatrix& b) { return TStencil(quiver::tuple_of(b)); }

RationalOrbit iterate_t(const TStencil& st, const std::vector<BigRational>& init, std::size_t steps) {
  return iterate_rational(st, init, nullptr, steps);
}

RationalOrbit iterate_tz(const TStencil& st, const std::vector<BigRational>& init, const zsys::ZSequence& z,
                         std::size_t steps) {
  return iterate_rational(st, init, &z, steps);
}

SymbolicOrbit iterate_t_symbolic(const TStencil& st, std::size_t steps, const SymbolicOptions& opts) {
  return iterate_symbolic(st, nullptr, steps, opts);
}

SymbolicOrbit iterate_tz_symbolic(const TStencil& st, const zsys::ZSequence& z, std::size_t steps,
                                  const SymbolicOptions& opts) {
  return iterate_symbolic(st, &z, steps, opts);
}

LaurentPoly z_monomial(const zsys::ZMonomial& m, const std::vector<std::string>& symbols, const algebra::VarList& vars) {
  if (!m.integral()) throw Error(Errc::AlgebraicZCase, "coefficient monomial has fractional exponents");
  std::vector<algebra::Exponent> e(vars->size(), 0);
  for (std::size_t k = 0; k < m.exps.size(); ++k) {
    if (m.exps[k] == 0) continue;
    auto it = std::find(vars->begin(), vars->end(), symbols.at(k));
    if (it == vars->end()) throw Error(Errc::VariableMismatch, "symbol " + symbols[k] + " missing");
    e[static_cast<std::size_t>(it - vars->begin())] = static_cast<algebra::Exponent>(algebra::to_long(BigInt(m.exps[k].get_num())));
  }
  return LaurentPoly::monomial(vars, e, BigInt(m.sign));
}

bool satisfies_recurrence(const TStencil& st, const RationalOrbit& orb) {
  const std::size_t n0 = st.order();
  for (std::size_t n = 0; n + n0 < orb.values.size(); ++n) {
    BigRational rhs = monomial_value(orb.values, n, st.plus()) + monomial_value(orb.values, n, st.minus());
    if (!orb.coefficients.empty()) {
      if (n >= orb.coefficients.size()) break;
      rhs *= orb.coefficients[n];
    }
    if (orb.values[n + n0] * orb.values[n] != rhs) return false;
  }
  return true;
}

ScaledOrbit scale_orbit(const TStencil& st, const RationalOrbit& orb, const BigRational& lambda, const BigRational& mu) {
  if (lambda == 0 || mu == 0) throw Error(Errc::ZeroScale, "scaling parameters must be nonzero");
  ScaledOrbit out;
  out.orbit = orb;
  BigRational f = lambda;
  for (auto& x : out.orbit.values) {
    x *= f;
    f *= mu;
  }
  out.satisfies_recurrence = satisfies_recurrence(st, out.orbit);
  return out;
}

GaugeResult gauge_normalize(const TStencil& st, const zsys::ZSequence& z, GaugeTarget target, std::size_t count,
                            std::optional<std::vector<BigInt>> kappa) {
  const std::size_t n0 = st.order();
  const std::size_t dim = z.symbols().size();
  GaugeResult res;
  res.symbols = z.symbols();
  res.target = target;
  res.kappa = kappa.value_or(std::vector<BigInt>(dim, BigInt(0)));
  if (res.kappa.size() != dim) throw Error(Errc::ConfigInvalid, "kappa must have one exponent per symbol");

  const bool first_plus = st.first_is_plus();
  const bool target_plus = (target == GaugeTarget::First) == first_plus;
  const auto& tgt = target_plus ? st.plus() : st.minus();
  const auto& other = target_plus ? st.minus() : st.plus();

  auto zeta = [&](std::size_t n) {
    zsys::ZMonomial m = z.monomial(n);
    if (!m.integral()) throw Error(Errc::AlgebraicZCase, "gauge needs integer exponents; Z_" + std::to_string(n) + " has fractional ones");
    std::vector<BigInt> e(dim);
    for (std::size_t k = 0; k < dim; ++k) e[k] = m.exps[k].get_num();
    return e;
  };

  // log G_{n+N} = zeta_n - kappa - log G_n + sum_j other_j log G_{n+j}
  std::vector<std::vector<BigInt>> g(count + n0, std::vector<BigInt>(dim));
  std::vector<std::vector<BigInt>> zs;
  for (std::size_t n = 0; n < count; ++n) {
    zs.push_back(zeta(n));
    auto& next = g[n + n0];
    for (std::size_t k = 0; k < dim; ++k) {
      BigInt v = zs[n][k] - res.kappa[k] - g[n][k];
      for (std::size_t j = 0; j < other.size(); ++j)
        if (other[j]) v += other[j] * g[n + j + 1][k];
      next[k] = v;
    }
  }
  for (std::size_t n = 0; n < count; ++n) {
    std::vector<BigInt> a(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      BigInt v = zs[n][k] - g[n + n0][k] - g[n][k];
      for (std::size_t j = 0; j < tgt.size(); ++j)
        if (tgt[j]) v += tgt[j] * g[n + j + 1][k];
      a[k] = v;
    }
    res.coefficient.push_back(std::move(a));
  }
  g.resize(count);
  res.gauge = std::move(g);
  return res;
}

std::vector<std::vector<BigInt>> apply_shift_operator(const algebra::IntPoly& op, const std::vector<std::vector<BigInt>>& seq) {
  std::vector<std::vector<BigInt>> out;
  const int deg = op.degree();
  if (deg < 0 || seq.size() <= static_cast<std::size_t>(deg)) return out;
  for (std::size_t n = 0; n + static_cast<std::size_t>(deg) < seq.size(); ++n) {
    std::vector<BigInt> v(seq[n].size());
    for (int k = 0; k <= deg; ++k)
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += op.coef(k) * seq[n + static_cast<std::size_t>(k)][i];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace cpl::tsys
