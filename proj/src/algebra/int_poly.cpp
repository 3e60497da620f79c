#include "cpl/algebra/int_poly.hpp"

#include <algorithm>
#include <sstream>

#include "cpl/algebra/error.hpp"

namespace cpl::algebra {

IntPoly::IntPoly(std::vector<BigInt> ascending) : c_(std::move(ascending)) { trim(); }

IntPoly IntPoly::from_longs(std::initializer_list<long> ascending) {
  std::vector<BigInt> c;
  for (long x : ascending) c.emplace_back(x);
  return IntPoly(std::move(c));
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::primitive() const {
  if (is_zero()) return *this;
  BigInt g = content(c_);
  if (leading() < 0) g = -g;
  std::vector<BigInt> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(r[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
  std::vector<BigInt> r;
  for (std::size_t k = 1; k < c_.size(); ++k) r.push_back(c_[k] * static_cast<unsigned long>(k));
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<BigInt> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), c_[i].get_mpz_t(), o.c_[j].get_mpz_t());
  return IntPoly(std::move(r));
}

std::optional<IntPoly> IntPoly::exact_div(const IntPoly& o) const {
  if (o.is_zero()) throw Error(Errc::ZeroDivisor, "polynomial division by zero");
  if (is_zero()) return IntPoly{};
  if (degree() < o.degree()) return std::nullopt;
  std::vector<BigInt> rem = c_;
  std::vector<BigInt> q(c_.size() - o.c_.size() + 1);
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt& top = rem[k + o.c_.size() - 1];
    if (!mpz_divisible_p(top.get_mpz_t(), o.leading().get_mpz_t())) return std::nullopt;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), o.leading().get_mpz_t());
    for (std::size_t j = 0; j < o.c_.size(); ++j) mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), o.c_[j].get_mpz_t());
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return IntPoly(std::move(q));
}

BigRational IntPoly::evaluate(const BigRational& x) const {
  BigRational acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + c_[k];
  return acc;
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    BigInt c = c_[k];
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    first = false;
    if (k == 0) {
      os << c.get_str();
      continue;
    }
    if (c != 1) os << c.get_str() << "*";
    os << var;
    if (k > 1) os << "^" << k;
  }
  return os.str();
}

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
  n = abs(n);
  std::vector<BigInt> d;
  if (n == 0) return d;
  if (!n.fits_ulong_p()) throw Error(Errc::ExponentOverflow, "coefficient too large for divisor search");
  unsigned long m = n.get_ui();
  for (unsigned long k = 1; k * k <= m; ++k)
    if (m % k == 0) {
      d.emplace_back(k);
      if (k * k != m) d.emplace_back(m / k);
    }
  std::sort(d.begin(), d.end());
  return d;
}

// Absorbs every power of f dividing p into out.
bool peel(IntPoly& p, const IntPoly& f, std::vector<PolyFactor>& out) {
  int mult = 0;
  while (p.degree() >= f.degree()) {
    auto q = p.exact_div(f);
    if (!q) break;
    p = *q;
    ++mult;
  }
  if (mult) out.push_back({f, mult});
  return mult > 0;
}

}  // namespace

namespace {

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<BigInt> r = a.coefficients();
  const auto& bc = b.coefficients();
  const BigInt& lb = b.leading();
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= b.degree()) {
    BigInt lr = r.back();
    std::size_t shift = r.size() - bc.size();
    for (auto& x : r) x *= lb;
    for (std::size_t j = 0; j < bc.size(); ++j) mpz_submul(r[shift + j].get_mpz_t(), lr.get_mpz_t(), bc[j].get_mpz_t());
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return IntPoly(std::move(r));
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  IntPoly x = a.primitive(), y = b.primitive();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPoly r = pseudo_remainder(x, y).primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.primitive();
}

IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() < 1) return p.primitive();
  IntPoly g = poly_gcd(p, p.derivative());
  IntPoly pp = p.primitive();
  if (g.degree() < 1) return pp;
  // Gauss: g primitive and g | pp over Q imply the quotient is integral.
  return pp.exact_div(g)->primitive();
}

std::vector<PolyFactor> factor_small(const IntPoly& input) {
  if (input.is_zero()) throw Error(Errc::ZeroDivisor, "cannot factor the zero polynomial");
  IntPoly p = input.primitive();
  std::vector<PolyFactor> out;

  // x itself.
  while (p.degree() >= 1 && p.coef(0) == 0) {
    if (out.empty() || out.back().factor != IntPoly::from_longs({0, 1})) out.push_back({IntPoly::from_longs({0, 1}), 0});
    out.back().multiplicity++;
    p = *p.exact_div(IntPoly::from_longs({0, 1}));
  }

  if (p.degree() >= 1) {
    auto nums = positive_divisors(p.coef(0));
    auto dens = positive_divisors(p.leading());
    for (const auto& e : dens)
      for (const auto& d : nums)
        for (int s : {1, -1}) {
          if (p.degree() < 1) break;
          if (gcd(d, e) != 1) continue;
          // e*x - s*d
          IntPoly f(std::vector<BigInt>{BigInt(-s * d), e});
          peel(p, f, out);
        }
  }

  while (p.degree() >= 4) {
    // Roots bounded by the Cauchy radius R, so |b/a| <= 2R and |c/a| <= R^2.
    BigRational bound = 0;
    for (int k = 0; k < p.degree(); ++k) {
      BigRational r(abs(p.coef(k)), p.leading());
      r.canonicalize();
      bound = std::max(bound, r);
    }
    bound += 1;
    BigInt rb = BigInt(ceil(mpf_class(bound)));
    bool found = false;
    for (const auto& a : positive_divisors(p.leading())) {
      for (const auto& cabs : positive_divisors(p.coef(0))) {
        for (int s : {1, -1}) {
          BigInt c = s * cabs;
          if (abs(c) > a * rb * rb) continue;
          BigInt bmax = 2 * a * rb;
          for (BigInt b = -bmax; b <= bmax; ++b) {
            IntPoly f(std::vector<BigInt>{c, b, a});
            if (f.primitive() != f) continue;
            if (peel(p, f, out)) {
              found = true;
              break;
            }
          }
          if (found) break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  if (p.degree() >= 1) out.push_back({p, 1});

  std::sort(out.begin(), out.end(), [](const PolyFactor& x, const PolyFactor& y) {
    if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
    return x.factor.coefficients() < y.factor.coefficients();
  });
  return out;
}

std::string factored_string(const std::vector<PolyFactor>& factors, const std::string& var) {
  if (factors.empty()) return "1";
  std::string s;
  for (const auto& f : factors) {
    if (!s.empty()) s += "*";
    s += "(" + f.factor.to_string(var) + ")";
    if (f.multiplicity > 1) s += "^" + std::to_string(f.multiplicity);
  }
  return s;
}

}  // namespace cpl::algebra
