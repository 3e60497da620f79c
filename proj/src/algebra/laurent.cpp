#include "cpl/algebra/laurent.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "cpl/algebra/error.hpp"
#include "cpl/algebra/laurent_kernels.hpp"
#include "packing.hpp"

namespace cpl::algebra {

namespace {

const VarList& empty_vars() {
  static const VarList v = std::make_shared<const std::vector<std::string>>();
  return v;
}

bool lex_less(std::span<const Exponent> a, std::span<const Exponent> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

void require_same(const LaurentPoly& a, const LaurentPoly& b) {
  if (!same_vars(a.vars(), b.vars()))
    throw Error(Errc::VariableMismatch, "operands use different variable lists");
}

}  // namespace

VarList make_vars(std::vector<std::string> names) {
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

VarList make_indexed_vars(const std::string& prefix, std::size_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::size_t i = 0; i < count; ++i) names.push_back(prefix + std::to_string(i));
  return make_vars(std::move(names));
}

bool same_vars(const VarList& a, const VarList& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

LaurentPoly::LaurentPoly() : vars_(empty_vars()) {}

LaurentPoly::LaurentPoly(VarList vars) : vars_(vars ? std::move(vars) : empty_vars()), nvars_(vars_->size()) {}

LaurentPoly LaurentPoly::constant(VarList vars, const BigInt& c) {
  LaurentPoly p(std::move(vars));
  if (c != 0) {
    p.exps_.assign(p.nvars_, 0);
    p.coefs_.push_back(c);
  }
  return p;
}

LaurentPoly LaurentPoly::variable(VarList vars, std::size_t index) {
  LaurentPoly p(std::move(vars));
  if (index >= p.nvars_) throw Error(Errc::IndexOutOfRange, "variable index " + std::to_string(index));
  p.exps_.assign(p.nvars_, 0);
  p.exps_[index] = 1;
  p.coefs_.emplace_back(1);
  return p;
}

LaurentPoly LaurentPoly::monomial(VarList vars, std::span<const Exponent> exp, const BigInt& coef) {
  LaurentPoly p(std::move(vars));
  if (exp.size() != p.nvars_) throw Error(Errc::IndexOutOfRange, "exponent length does not match variable count");
  if (coef != 0) {
    p.exps_.assign(exp.begin(), exp.end());
    p.coefs_.push_back(coef);
  }
  return p;
}

LaurentPoly LaurentPoly::from_terms(VarList vars, std::vector<Term> terms) {
  LaurentPoly p(std::move(vars));
  for (const auto& t : terms)
    if (t.exp.size() != p.nvars_) throw Error(Errc::IndexOutOfRange, "exponent length does not match variable count");
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.exp < b.exp; });
  for (std::size_t i = 0; i < terms.size();) {
    BigInt c = terms[i].coef;
    std::size_t j = i + 1;
    while (j < terms.size() && terms[j].exp == terms[i].exp) c += terms[j++].coef;
    if (c != 0) {
      p.exps_.insert(p.exps_.end(), terms[i].exp.begin(), terms[i].exp.end());
      p.coefs_.push_back(std::move(c));
    }
    i = j;
  }
  return p;
}

LaurentPoly LaurentPoly::from_canonical(VarList vars, std::vector<Exponent> exps, std::vector<BigInt> coefs) {
  LaurentPoly p(std::move(vars));
  p.exps_ = std::move(exps);
  p.coefs_ = std::move(coefs);
  return p;
}

Exponent LaurentPoly::min_exponent(std::size_t var) const {
  if (is_zero()) return 0;
  Exponent m = exps_[var];
  for (std::size_t t = 1; t < nterms(); ++t) m = std::min(m, exps_[t * nvars_ + var]);
  return m;
}

Exponent LaurentPoly::max_exponent(std::size_t var) const {
  if (is_zero()) return 0;
  Exponent m = exps_[var];
  for (std::size_t t = 1; t < nterms(); ++t) m = std::max(m, exps_[t * nvars_ + var]);
  return m;
}

std::vector<Exponent> LaurentPoly::min_exponents() const {
  std::vector<Exponent> m(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) m[i] = min_exponent(i);
  return m;
}

std::vector<Exponent> LaurentPoly::max_exponents() const {
  std::vector<Exponent> m(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) m[i] = max_exponent(i);
  return m;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coefs_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  require_same(*this, o);
  LaurentPoly r(vars_);
  r.exps_.reserve(exps_.size() + o.exps_.size());
  r.coefs_.reserve(nterms() + o.nterms());
  std::size_t i = 0, j = 0;
  auto push = [&](std::span<const Exponent> e, BigInt c) {
    r.exps_.insert(r.exps_.end(), e.begin(), e.end());
    r.coefs_.push_back(std::move(c));
  };
  while (i < nterms() || j < o.nterms()) {
    if (j == o.nterms() || (i < nterms() && lex_less(exponent(i), o.exponent(j)))) {
      push(exponent(i), coefs_[i]);
      ++i;
    } else if (i == nterms() || lex_less(o.exponent(j), exponent(i))) {
      push(o.exponent(j), o.coefs_[j]);
      ++j;
    } else {
      BigInt c = coefs_[i] + o.coefs_[j];
      if (c != 0) push(exponent(i), std::move(c));
      ++i;
      ++j;
    }
  }
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const { return kernels::multiply(*this, o); }

LaurentPoly operator*(const BigInt& c, const LaurentPoly& p) { return p.scaled(c); }

LaurentPoly LaurentPoly::scaled(const BigInt& c) const {
  if (c == 0) return LaurentPoly(vars_);
  LaurentPoly r = *this;
  for (auto& x : r.coefs_) x *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(std::span<const Exponent> shift, const BigInt& c) const {
  if (shift.size() != nvars_) throw Error(Errc::IndexOutOfRange, "shift length does not match variable count");
  if (c == 0) return LaurentPoly(vars_);
  LaurentPoly r = *this;
  for (std::size_t t = 0; t < nterms(); ++t)
    for (std::size_t i = 0; i < nvars_; ++i)
      r.exps_[t * nvars_ + i] = detail::checked_exponent(std::int64_t{r.exps_[t * nvars_ + i]} + shift[i]);
  if (c != 1)
    for (auto& x : r.coefs_) x *= c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned long e) const {
  LaurentPoly result = constant(vars_, 1);
  if (e == 0) return result;
  if (is_monomial()) {
    std::vector<Exponent> ex(nvars_);
    for (std::size_t i = 0; i < nvars_; ++i) ex[i] = detail::checked_exponent(std::int64_t{exps_[i]} * static_cast<std::int64_t>(e));
    return monomial(vars_, ex, algebra::pow(coefs_[0], e));
  }
  LaurentPoly base = *this;
  while (true) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e == 0) break;
    base = base * base;
  }
  return result;
}

LaurentPoly LaurentPoly::monomial_inverse() const {
  if (!is_monomial() || algebra::abs(coefs_[0]) != 1)
    throw Error(Errc::DivisionFails, "only unit monomials are invertible");
  LaurentPoly r = *this;
  for (auto& x : r.exps_) x = detail::checked_exponent(-std::int64_t{x});
  return r;
}

LaurentPoly LaurentPoly::derivative(std::size_t var) const {
  if (var >= nvars_) throw Error(Errc::IndexOutOfRange, "variable index " + std::to_string(var));
  LaurentPoly r(vars_);
  for (std::size_t t = 0; t < nterms(); ++t) {
    Exponent e = exps_[t * nvars_ + var];
    if (e == 0) continue;
    auto ex = exponent(t);
    r.exps_.insert(r.exps_.end(), ex.begin(), ex.end());
    r.exps_[r.exps_.size() - nvars_ + var] = e - 1;
    r.coefs_.push_back(coefs_[t] * e);
  }
  return r;
}

BigRational LaurentPoly::evaluate(std::span<const BigRational> point) const {
  if (point.size() != nvars_) throw Error(Errc::IndexOutOfRange, "point dimension does not match variable count");
  std::vector<std::map<Exponent, BigRational>> cache(nvars_);
  BigRational sum = 0;
  for (std::size_t t = 0; t < nterms(); ++t) {
    BigRational term(coefs_[t]);
    for (std::size_t i = 0; i < nvars_; ++i) {
      Exponent e = exps_[t * nvars_ + i];
      if (e == 0) continue;
      auto it = cache[i].find(e);
      if (it == cache[i].end()) it = cache[i].emplace(e, algebra::pow(point[i], e)).first;
      term *= it->second;
    }
    sum += term;
  }
  return sum;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return same_vars(vars_, o.vars_) && exps_ == o.exps_ && coefs_ == o.coefs_;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t t = nterms(); t-- > 0;) {
    BigInt c = coefs_[t];
    bool first = t + 1 == nterms();
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    std::string mono;
    for (std::size_t i = 0; i < nvars_; ++i) {
      Exponent e = exps_[t * nvars_ + i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*vars_)[i];
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << mono;
    }
  }
  return os.str();
}

namespace {

template <class Key>
std::optional<LaurentPoly> divide_packed(const LaurentPoly& p, const LaurentPoly& q, const std::vector<Exponent>& minp,
                                         const std::vector<Exponent>& minq, const std::vector<std::int64_t>& degp,
                                         const std::vector<std::int64_t>& degq) {
  const std::size_t n = p.nvars();
  std::vector<std::uint64_t> width(n);
  for (std::size_t i = 0; i < n; ++i) width[i] = static_cast<std::uint64_t>(degp[i]) + 1;
  detail::Packer<Key> pk(width);

  std::vector<Key> qkeys(q.nterms());
  for (std::size_t j = 0; j < q.nterms(); ++j) qkeys[j] = pk.encode(q.exponent(j), minq);
  const Key lead_key = qkeys.back();
  const BigInt& lead_coef = q.coef(q.nterms() - 1);
  std::vector<Exponent> lead_exp(n), zero(n, 0);
  pk.decode(lead_key, zero, lead_exp.data());

  std::map<Key, BigInt, std::greater<Key>> rem;
  for (std::size_t t = 0; t < p.nterms(); ++t) rem.emplace(pk.encode(p.exponent(t), minp), p.coef(t));

  std::vector<std::pair<Key, BigInt>> quot;
  std::vector<Exponent> er(n), et(n);
  BigInt ct;
  while (!rem.empty()) {
    auto top = rem.begin();
    pk.decode(top->first, zero, er.data());
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t t = std::int64_t{er[i]} - lead_exp[i];
      if (t < 0 || t > degp[i] - degq[i]) return std::nullopt;
      et[i] = static_cast<Exponent>(t);
    }
    if (!mpz_divisible_p(top->second.get_mpz_t(), lead_coef.get_mpz_t())) return std::nullopt;
    mpz_divexact(ct.get_mpz_t(), top->second.get_mpz_t(), lead_coef.get_mpz_t());
    Key kt = pk.encode(et, zero);
    for (std::size_t j = 0; j < q.nterms(); ++j) {
      auto [it, inserted] = rem.try_emplace(kt + qkeys[j]);
      mpz_submul(it->second.get_mpz_t(), ct.get_mpz_t(), q.coef(j).get_mpz_t());
      if (it->second == 0) rem.erase(it);
    }
    quot.emplace_back(kt, ct);
  }

  std::vector<Exponent> lo(n);
  for (std::size_t i = 0; i < n; ++i) lo[i] = detail::checked_exponent(std::int64_t{minp[i]} - minq[i]);
  std::vector<Exponent> exps(quot.size() * n);
  std::vector<BigInt> coefs(quot.size());
  for (std::size_t t = 0; t < quot.size(); ++t) {
    std::size_t dst = quot.size() - 1 - t;
    pk.decode(quot[t].first, lo, exps.data() + dst * n);
    coefs[dst] = std::move(quot[t].second);
  }
  return LaurentPoly::from_canonical(p.vars(), std::move(exps), std::move(coefs));
}

}  // namespace

std::optional<LaurentPoly> laurent_try_div(const LaurentPoly& p, const LaurentPoly& q) {
  require_same(p, q);
  if (q.is_zero()) throw Error(Errc::ZeroDivisor, "division by the zero polynomial");
  if (p.is_zero()) return LaurentPoly(p.vars());
  const std::size_t n = p.nvars();
  auto minp = p.min_exponents(), minq = q.min_exponents();
  std::vector<std::int64_t> degp(n), degq(n);
  for (std::size_t i = 0; i < n; ++i) {
    degp[i] = std::int64_t{p.max_exponent(i)} - minp[i];
    degq[i] = std::int64_t{q.max_exponent(i)} - minq[i];
    if (degq[i] > degp[i]) return std::nullopt;
  }
  if (q.is_monomial()) {
    std::vector<Exponent> shift(n);
    for (std::size_t i = 0; i < n; ++i) shift[i] = detail::checked_exponent(-std::int64_t{q.exponent(0)[i]});
    LaurentPoly r = p.shifted(shift);
    std::vector<BigInt> coefs = r.raw_coefs();
    for (std::size_t t = 0; t < p.nterms(); ++t) {
      if (!mpz_divisible_p(coefs[t].get_mpz_t(), q.coef(0).get_mpz_t())) return std::nullopt;
      mpz_divexact(coefs[t].get_mpz_t(), coefs[t].get_mpz_t(), q.coef(0).get_mpz_t());
    }
    return LaurentPoly::from_canonical(p.vars(), r.raw_exponents(), std::move(coefs));
  }
  std::vector<std::uint64_t> width(n);
  for (std::size_t i = 0; i < n; ++i) width[i] = static_cast<std::uint64_t>(degp[i]) + 1;
  if (detail::choose_key_width(width) == detail::KeyWidth::Bits64)
    return divide_packed<std::uint64_t>(p, q, minp, minq, degp, degq);
  return divide_packed<detail::u128>(p, q, minp, minq, degp, degq);
}

LaurentPoly laurent_div(const LaurentPoly& p, const LaurentPoly& q) {
  auto r = laurent_try_div(p, q);
  if (!r) throw Error(Errc::DivisionFails, "divisor does not divide dividend in the Laurent ring");
  return std::move(*r);
}

LaurentPoly rebase(const LaurentPoly& p, const VarList& vars) {
  if (same_vars(p.vars(), vars)) return LaurentPoly::from_canonical(vars, p.raw_exponents(), p.raw_coefs());
  std::vector<std::size_t> where(p.nvars());
  for (std::size_t i = 0; i < p.nvars(); ++i) {
    auto it = std::find(vars->begin(), vars->end(), (*p.vars())[i]);
    if (it == vars->end()) throw Error(Errc::VariableMismatch, "variable " + (*p.vars())[i] + " missing in target list");
    where[i] = static_cast<std::size_t>(it - vars->begin());
  }
  std::vector<LaurentPoly::Term> terms(p.nterms());
  for (std::size_t t = 0; t < p.nterms(); ++t) {
    terms[t].exp.assign(vars->size(), 0);
    for (std::size_t i = 0; i < p.nvars(); ++i) terms[t].exp[where[i]] = p.exponent(t)[i];
    terms[t].coef = p.coef(t);
  }
  return LaurentPoly::from_terms(vars, std::move(terms));
}

}  // namespace cpl::algebra
