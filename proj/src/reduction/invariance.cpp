#include "cpl/reduction/invariance.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "cpl/algebra/error.hpp"

namespace cpl::reduction {

namespace {

RatMatrix zeros(std::size_t r, std::size_t c) { return RatMatrix(r, algebra::RatVector(c, BigRational(0))); }

RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out = zeros(a.size(), b.empty() ? 0 : b[0].size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < b[k].size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

RatMatrix transpose(const RatMatrix& a) {
  RatMatrix out = zeros(a.empty() ? 0 : a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) out[j][i] = a[i][j];
  return out;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out = zeros(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  return out;
}

RatMatrix inverse(RatMatrix a) {
  const std::size_t n = a.size();
  RatMatrix inv = zeros(n, n);
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) throw Error(Errc::EliminationFailed, "Gram matrix of the basis is singular");
    std::swap(a[p], a[c]);
    std::swap(inv[p], inv[c]);
    BigRational d = a[c][c];
    for (std::size_t j = 0; j < n; ++j) {
      a[c][j] /= d;
      inv[c][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a[i][c] == 0) continue;
      BigRational f = a[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  return inv;
}

RatMatrix omega_at(const RatMatrix& w, const std::vector<BigRational>& u) {
  RatMatrix out = w;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t k = 0; k < w.size(); ++k) out[i][k] = w[i][k] / (u[i] * u[k]);
  return out;
}

Float50 positive_part(long v) { return v > 0 ? Float50(v) : Float50(0); }

}  // namespace

RatMatrix reduced_form(const ExchangeMatrix& b, const PalindromicBasis& basis) {
  RatMatrix v = to_rational(basis.vectors);
  RatMatrix vt = transpose(v);
  RatMatrix ginv = inverse(multiply(v, vt));
  RatMatrix w = multiply(multiply(multiply(ginv, v), multiply(to_rational(b.matrix()), vt)), ginv);
  if (multiply(multiply(vt, w), v) != to_rational(b.matrix()))
    throw Error(Errc::EliminationFailed, "B does not factor through the basis");
  return w;
}

FormInvarianceReport check_form_preserved(const RatMatrix& w, const std::vector<LaurentPoly>& map,
                                          std::span<const BigRational> point) {
  const std::size_t r = w.size();
  if (map.size() != r || point.size() != r) throw Error(Errc::IndexOutOfRange, "map, form and point dimensions differ");
  for (std::size_t i = 0; i < r; ++i)
    if (point[i] == 0) throw Error(Errc::SingularPoint, "U_" + std::to_string(i + 1) + " = 0");
  std::vector<BigRational> u(point.begin(), point.end()), image;
  for (const auto& c : map) {
    image.push_back(c.evaluate(point));
    if (image.back() == 0) throw Error(Errc::SingularPoint, "image component vanishes");
  }
  FormInvarianceReport rep;
  rep.jacobian = zeros(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) rep.jacobian[i][j] = map[i].derivative(j).evaluate(point);
  rep.omega_before = omega_at(w, u);
  rep.omega_after = multiply(multiply(transpose(rep.jacobian), omega_at(w, image)), rep.jacobian);
  rep.max_residual = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      BigRational d = abs(rep.omega_after[i][k] - rep.omega_before[i][k]);
      if (d > rep.max_residual) rep.max_residual = d;
    }
  rep.preserved = rep.max_residual == 0;
  return rep;
}

FormInvarianceReport verify_form_invariance(const ExchangeMatrix& b, const PalindromicBasis& basis,
                                            std::span<const BigRational> point) {
  USystemSpec spec = derive_usystem(b);
  if (spec.basis.generator != basis.generator)
    throw Error(Errc::ConfigInvalid, "basis does not match the palindromic basis of B");
  return check_form_preserved(reduced_form(b, basis), usystem_map(spec), point);
}

Float50 rogers_dilog(const Float50& t) {
  using boost::multiprecision::log;
  if (!(t > 0 && t < 1)) throw Error(Errc::DomainError, "Rogers dilogarithm needs 0 < t < 1");
  const Float50 half = Float50(1) / 2;
  if (t > half) return boost::math::constants::pi<Float50>() * boost::math::constants::pi<Float50>() / 6 - rogers_dilog(1 - t);
  const Float50 eps = std::numeric_limits<Float50>::epsilon() / 16;
  Float50 li2 = 0, p = t;
  for (unsigned k = 1; p > eps * k * k; ++k, p *= t) li2 += p / (Float50(k) * k);
  return li2 + half * log(t) * log(1 - t);
}

Float50 rogers_dilog_quadrature(const Float50& t) {
  using boost::multiprecision::log;
  if (!(t > 0 && t < 1)) throw Error(Errc::DomainError, "Rogers dilogarithm needs 0 < t < 1");
  boost::math::quadrature::tanh_sinh<Float50> q;
  auto f = [](Float50 y) -> Float50 { return -(log(1 - y) / y + log(y) / (1 - y)) / 2; };
  return q.integrate(f, Float50(0), t);
}

Float50 dilog_argument(const ExchangeMatrix& b, std::span<const Float50> z) {
  if (z.size() != b.n()) throw Error(Errc::IndexOutOfRange, "coordinate vector has the wrong dimension");
  auto a = b.first_row();
  Float50 s = 0;
  for (std::size_t k = 1; k < z.size(); ++k) s += a[k - 1] * z[k];
  return 1 / (1 + boost::multiprecision::exp(-s));
}

Float50 generating_function(const ExchangeMatrix& b, std::span<const Float50> z) {
  using boost::multiprecision::log;
  auto a = b.first_row();
  const std::size_t n = b.n();
  Float50 g0 = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) g0 += positive_part(-a[j - 1]) * a[k - 1] * z[j] * z[k];
  for (std::size_t j = 1; j < n; ++j) g0 += a[j - 1] * z[j] * (-z[0] + positive_part(-a[j - 1]) * z[j] / 2);
  Float50 zeta = dilog_argument(b, z);
  if (!(zeta > 0 && zeta < 1)) throw Error(Errc::DomainError, "dilogarithm argument left (0, 1)");
  Float50 gl = -rogers_dilog(zeta) + log(1 - zeta) * log((1 - zeta) / zeta) / 2;
  return g0 + gl;
}

GeneratingFunctionReport generating_function_check(const ExchangeMatrix& b, std::span<const BigRational> point,
                                                   const Float50& h) {
  using boost::multiprecision::exp;
  using boost::multiprecision::log;
  const std::size_t n = b.n();
  if (point.size() != n) throw Error(Errc::IndexOutOfRange, "point has the wrong dimension");
  if (!(h > 0)) throw Error(Errc::DomainError, "difference step must be positive");
  std::vector<Float50> z(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (point[j] <= 0) throw Error(Errc::DomainError, "generating function needs positive coordinates");
    z[j] = log(Float50(point[j].get_num().get_str()) / Float50(point[j].get_den().get_str()));
  }
  auto a = b.first_row();
  const auto& bm = b.matrix();
  auto theta = [&](const std::vector<Float50>& zz, std::size_t i) {
    Float50 t = 0;
    for (std::size_t j = 0; j < i; ++j) t += algebra::to_long(bm(j, i)) * zz[j];
    return t;
  };

  // phi: z -> (z_1, ..., z_{N-1}, log(M+ + M-) - z_0)
  Float50 lp = 0, lm = 0;
  for (std::size_t j = 1; j < n; ++j) {
    lp += positive_part(a[j - 1]) * z[j];
    lm += positive_part(-a[j - 1]) * z[j];
  }
  Float50 mp = exp(lp), mm = exp(lm);
  std::vector<Float50> image(z.begin() + 1, z.end());
  image.push_back(log(mp + mm) - z[0]);
  // d z'_{N-1} / d z_i
  std::vector<Float50> dlast(n);
  dlast[0] = -1;
  for (std::size_t i = 1; i < n; ++i) dlast[i] = (mp * positive_part(a[i - 1]) + mm * positive_part(-a[i - 1])) / (mp + mm);

  GeneratingFunctionReport rep;
  rep.residual = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Float50 pulled = theta(image, n - 1) * dlast[i];
    if (i >= 1) pulled += theta(image, i - 1);
    std::vector<Float50> up = z, down = z;
    up[i] += h;
    down[i] -= h;
    Float50 dg = (generating_function(b, up) - generating_function(b, down)) / (2 * h);
    Float50 d = pulled - theta(z, i) - dg;
    rep.components.push_back(d);
    if (abs(d) > rep.residual) rep.residual = abs(d);
  }
  return rep;
}

}  // namespace cpl::reduction
