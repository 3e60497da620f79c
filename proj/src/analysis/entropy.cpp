#include "cpl/analysis/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cpl/algebra/error.hpp"
#include "cpl/zsystem/zsystem.hpp"
#include "linsolve.hpp"

namespace cpl::analysis {

using algebra::IntPoly;

namespace {

constexpr std::size_t kMinLength = 12;
constexpr double kUnitTolerance = 1e-9;

double to_double(const BigRational& q) { return q.get_d(); }

bool has_unit_root(const IntPoly& p) {
  if (p.degree() < 1) return false;
  for (auto z : zsys::spectral_radius(p).roots)
    if (std::fabs(std::abs(z) - 1.0) < kUnitTolerance) return true;
  return false;
}

/// Largest multiplicity among roots of modulus one.
std::size_t unit_root_multiplicity(IntPoly p) {
  std::size_t m = 0;
  while (has_unit_root(p)) {
    ++m;
    p = algebra::poly_gcd(p, p.derivative());
  }
  return m;
}

std::vector<BigInt> absolute(const std::vector<BigInt>& d) {
  std::vector<BigInt> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = algebra::abs(d[i]);
  return out;
}

}  // namespace

IntPoly LinearRecurrence::characteristic() const {
  BigInt l = 1;
  for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<BigInt> asc(coeffs.size() + 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    BigRational v = -coeffs[i] * l;
    asc[i] = v.get_num();
  }
  asc.back() = l;
  return IntPoly(std::move(asc)).primitive();
}

std::optional<LinearRecurrence> find_recurrence(const std::vector<BigInt>& d, std::size_t max_order,
                                                std::size_t min_verified, std::size_t max_start) {
  for (std::size_t k = 1; k <= max_order; ++k) {
    for (std::size_t start = 0; start <= max_start; ++start) {
      if (d.size() < start + 2 * k + min_verified) break;
      const std::size_t equations = d.size() - k - start;
      std::vector<detail::RatRow> rows(equations, detail::RatRow(k + 1));
      for (std::size_t e = 0; e < equations; ++e) {
        for (std::size_t i = 0; i < k; ++i) rows[e][i] = d[start + e + i];
        rows[e][k] = d[start + e + k];
      }
      auto sol = detail::solve_exact(std::move(rows), k);
      if (!sol.consistent || sol.nullity != 0) continue;
      return LinearRecurrence{start, std::move(sol.x), equations - k};
    }
  }
  return std::nullopt;
}

std::vector<BigInt> extend(const std::vector<BigInt>& d, const LinearRecurrence& rec, std::size_t extra) {
  const std::size_t k = rec.order();
  if (d.size() < rec.start + k) throw Error(Errc::InsufficientData, "sequence shorter than the recurrence window");
  std::vector<BigInt> out(d);
  for (std::size_t t = 0; t < extra; ++t) {
    const std::size_t n = out.size() - k;
    BigRational v = 0;
    for (std::size_t i = 0; i < k; ++i) v += rec.coeffs[i] * out[n + i];
    if (v.get_den() != 1) throw Error(Errc::DomainError, "recurrence extension left the integers");
    out.push_back(v.get_num());
  }
  return out;
}

std::optional<QuasiPolynomial> find_quasi_polynomial(const std::vector<BigInt>& d, std::size_t max_period,
                                                     std::size_t max_degree, std::size_t min_verified) {
  const std::size_t max_start = d.size() / 3;
  for (std::size_t order = 1; order <= max_period + max_degree; ++order) {
    for (std::size_t m = 0; m <= max_degree && m < order; ++m) {
      const std::size_t p = order - m;
      if (p > max_period || d.size() < order + 1) continue;
      std::vector<BigInt> s(p + 1, BigInt(0));
      s[0] = -1;
      s[p] = 1;
      IntPoly op(s);
      for (std::size_t i = 0; i < m; ++i) op = op * IntPoly::from_longs({-1, 1});
      const std::size_t last = d.size() - order;  // windows n = 0 .. last - 1
      std::size_t start = 0;
      for (std::size_t n = 0; n < last; ++n) {
        BigInt v = 0;
        for (int i = 0; i <= op.degree(); ++i) v += op.coef(i) * d[n + static_cast<std::size_t>(i)];
        if (v != 0) start = n + 1;
      }
      if (start > max_start || last - start < min_verified) continue;
      return QuasiPolynomial{p, m, start, last - start};
    }
  }
  return std::nullopt;
}

std::optional<std::vector<BigRational>> fit_exact_polynomial(const std::vector<BigInt>& d, std::size_t from,
                                                             std::size_t to, std::size_t degree) {
  if (to >= d.size() || from > to) throw Error(Errc::IndexOutOfRange, "fit window outside the sequence");
  if (to - from < degree) throw Error(Errc::InsufficientData, "fit window shorter than degree + 1");
  const std::size_t k = degree + 1;
  std::vector<detail::RatRow> rows(k, detail::RatRow(k + 1));
  for (std::size_t e = 0; e < k; ++e) {
    BigRational pw = 1;
    for (std::size_t i = 0; i < k; ++i) {
      rows[e][i] = pw;
      pw *= static_cast<long>(from + e);
    }
    rows[e][k] = d[from + e];
  }
  auto sol = detail::solve_exact(std::move(rows), k);
  if (!sol.consistent || sol.nullity != 0) return std::nullopt;
  for (std::size_t n = from + k; n <= to; ++n) {
    BigRational v = 0, pw = 1;
    for (std::size_t i = 0; i < k; ++i) {
      v += sol.x[i] * pw;
      pw *= static_cast<long>(n);
    }
    if (v != BigRational(d[n])) return std::nullopt;
  }
  return sol.x;
}

std::optional<BigRational> aitken_ratio(const std::vector<BigInt>& d, std::size_t n) {
  if (n < 3 || n >= d.size()) return std::nullopt;
  for (std::size_t i = n - 3; i < n; ++i)
    if (d[i] == 0) return std::nullopt;
  auto ratio = [&](std::size_t i) -> BigRational {
    BigRational r(d[i + 1], d[i]);
    r.canonicalize();
    return r;
  };
  BigRational r0 = ratio(n - 3), r1 = ratio(n - 2), r2 = ratio(n - 1);
  BigRational num = (r2 - r1) * (r2 - r1);
  BigRational den = r2 - 2 * r1 + r0;
  if (den == 0) {
    if (num == 0) return r2;
    return std::nullopt;
  }
  return BigRational(r2 - num / den);
}

EntropyEstimate entropy_estimate(const DegreeSequence& seq) {
  const auto& d = seq.d;
  if (d.size() < kMinLength)
    throw Error(Errc::TooShort, "entropy needs at least " + std::to_string(kMinLength) + " terms, got " +
                                    std::to_string(d.size()));
  EntropyEstimate est;
  const auto mag = absolute(d);
  est.aitken = aitken_ratio(mag, mag.size() - 1);

  if (auto q = find_quasi_polynomial(d)) {
    est.method = "quasi-polynomial";
    est.polynomial_degree = q->degree;
    std::ostringstream os;
    os << "(S^" << q->period << " - 1)(S - 1)^" << q->degree << " annihilates d_n for n >= " << q->start
       << ", checked on " << q->verified << " indices";
    est.note = os.str();
    return est;
  }

  if (auto rec = find_recurrence(d)) {
    IntPoly chi = rec->characteristic();
    est.method = "recurrence";
    est.recurrence = rec;
    std::ostringstream os;
    os << "order " << rec->order() << " recurrence from n = " << rec->start << ", checked on " << rec->verified
       << " indices; characteristic " << algebra::factored_string(algebra::factor_small(chi));
    est.note = os.str();
    if (chi.degree() >= 1) {
      auto sr = zsys::spectral_radius(chi);
      if (sr.radius > 1 + kUnitTolerance) {
        est.fit = GrowthFit::Exponential;
        est.lambda = sr.radius;
        est.entropy = std::log(sr.radius);
        est.confidence = sr.error_bound / sr.radius;
      } else {
        std::size_t mult = unit_root_multiplicity(chi);
        est.polynomial_degree = mult > 0 ? mult - 1 : 0;
        est.confidence = sr.error_bound;
      }
    }
    return est;
  }

  est.method = "ratio";
  const std::size_t last = mag.size() - 1;
  if (mag[last] == 0 || mag[last - 1] == 0) {
    est.note = "sequence ends in zeros; no growth";
    return est;
  }
  BigRational tail(mag[last], mag[last - 1]);
  tail.canonicalize();
  const double r_last = to_double(tail);
  const double r = est.aitken ? to_double(*est.aitken) : r_last;
  est.note = est.aitken ? "Aitken extrapolation of successive ratios" : "last successive ratio";
  // n log(d_{n+1}/d_n) tends to the degree for polynomial growth and grows
  // linearly for exponential growth.
  const std::size_t mid = last / 2;
  bool exponential = false;
  if (mag[mid] > 0 && mag[mid - 1] > 0) {
    double lm = std::log(mag[mid].get_d() / mag[mid - 1].get_d()) * static_cast<double>(mid);
    double ll = std::log(r_last) * static_cast<double>(last);
    exponential = r > 1 + kUnitTolerance && ll > 1.5 * lm && ll > 0;
  }
  if (exponential) {
    est.fit = GrowthFit::Exponential;
    est.lambda = r;
    est.entropy = std::log(r);
    est.confidence = std::fabs(std::log(r) - std::log(r_last));
    return est;
  }
  // Polynomial: slope of log d against log n over the second half.
  if (mag[mid] > 0) {
    double slope = (std::log(mag[last].get_d()) - std::log(mag[mid].get_d())) /
                   (std::log(static_cast<double>(last)) - std::log(static_cast<double>(mid)));
    est.polynomial_degree = static_cast<std::size_t>(std::max(0.0, std::round(slope)));
  }
  est.confidence = std::fabs(std::log(r_last));
  return est;
}

}  // namespace cpl::analysis
