#include "cpl/ysystem/ysystem.hpp"

#include "cpl/algebra/error.hpp"
#include "cpl/quiver/seed.hpp"
#include "cpl/zsystem/zsystem.hpp"

namespace cpl::ysys {

namespace {

BigRational ysystem_rhs(const PalindromicTuple& a, const std::vector<BigRational>& y, std::size_t n) {
  BigRational num = 1, den = 1;
  for (std::size_t j = 1; j < a.order(); ++j) {
    const BigRational& v = y[n + j];
    if (long m = a.minus(j)) num *= algebra::pow(BigRational(1 + v), m);
    if (long p = a.plus(j)) den *= algebra::pow(BigRational(1 + 1 / v), p);
  }
  return num / den;
}

void require_positive(const std::vector<BigRational>& v, const char* what) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] <= 0) throw Error(Errc::NonPositiveInitial, std::string(what) + "_" + std::to_string(i) + " must be positive");
}

}  // namespace

YOrbit iterate_y(const PalindromicTuple& a, const std::vector<BigRational>& init, std::size_t steps) {
  const std::size_t n0 = a.order();
  if (init.size() != n0) throw Error(Errc::ConfigInvalid, "Y-system of order " + std::to_string(n0) + " needs as many initial values");
  require_positive(init, "y");
  YOrbit orb{a.values(), init};
  for (std::size_t n = 0; n < steps; ++n) orb.values.push_back(ysystem_rhs(a, orb.values, n) / orb.values[n]);
  return orb;
}

bool satisfies_ysystem_at(const PalindromicTuple& a, const std::vector<BigRational>& y, std::size_t n) {
  if (n + a.order() >= y.size()) throw Error(Errc::InsufficientWindow, "sequence too short for index " + std::to_string(n));
  for (std::size_t j = 1; j < a.order(); ++j)
    if (y[n + j] == 0) return false;
  return y[n + a.order()] * y[n] == ysystem_rhs(a, y, n);
}

YOrbit ybar_from_orbit(const PalindromicTuple& a, const std::vector<BigRational>& x) {
  const std::size_t n0 = a.order();
  if (x.size() < n0) throw Error(Errc::InsufficientWindow, "need at least " + std::to_string(n0) + " cluster values");
  YOrbit out{a.values(), {}};
  for (std::size_t n = 0; n + n0 <= x.size(); ++n) {
    BigRational v = 1;
    for (std::size_t j = 1; j < n0; ++j) {
      if (a.at(j) == 0) continue;
      if (x[n + j] == 0) throw Error(Errc::ZeroEncountered, "x_" + std::to_string(n + j) + " = 0");
      v *= algebra::pow(x[n + j], -a.at(j));
    }
    out.values.push_back(std::move(v));
  }
  return out;
}

TzCorrespondence verify_tz_correspondence(const PalindromicTuple& a, const tsys::RationalOrbit& orbit,
                                          const zsys::ZSequence& z, std::size_t count) {
  const std::size_t n0 = a.order();
  tsys::TStencil st(a);
  if (orbit.coefficients.empty() || !tsys::satisfies_recurrence(st, orbit))
    throw Error(Errc::ConfigInvalid, "orbit does not solve the T_z-system");
  for (std::size_t n = 0; n < orbit.coefficients.size(); ++n)
    if (orbit.coefficients[n] != z.value(n)) throw Error(Errc::ConfigInvalid, "orbit was built with other coefficients");
  auto ybar = ybar_from_orbit(a, orbit.values).values;
  if (ybar.size() < count + n0 + 1) throw Error(Errc::InsufficientWindow, "orbit too short for the requested indices");
  auto zst = zsys::z_stencil_from_tuple(a);
  TzCorrespondence out;
  for (std::size_t n = 0; n < count; ++n) {
    out.y_holds.push_back(satisfies_ysystem_at(a, ybar, n));
    BigRational prod = 1;
    for (std::size_t j = 1; j < n0; ++j)
      if (a.at(j) != 0) prod *= algebra::pow(z.value(n + j), -a.at(j));
    out.z_holds.push_back(prod == 1);
    if (out.z_holds.back() != zsys::constraint_holds_at(zst, z, n))
      throw Error(Errc::ConfigInvalid, "Z-constraint evaluations disagree");
  }
  return out;
}

YOrbit qp1_iterate(const BigRational& beta, const BigRational& q, const std::vector<BigRational>& init,
                   std::size_t steps) {
  if (beta <= 0 || q <= 0) throw Error(Errc::NonPositiveParameter, "beta and q must be positive");
  if (init.size() != 2) throw Error(Errc::ConfigInvalid, "qP_I needs two initial values");
  require_positive(init, "y");
  YOrbit orb{{-1, 2, -1}, init};
  BigRational qn = 1;
  for (std::size_t n = 0; n < steps; ++n) {
    const BigRational& y1 = orb.values[n + 1];
    orb.values.push_back(beta * qn * (1 + y1) / (y1 * y1 * orb.values[n]));
    qn *= q;
  }
  return orb;
}

std::vector<BigRational> somos4_z_invariant(const std::vector<BigRational>& y) {
  std::vector<BigRational> z;
  for (std::size_t n = 0; n + 2 < y.size(); ++n) z.push_back(y[n + 2] * y[n + 1] * y[n + 1] * y[n] / (1 + y[n + 1]));
  return z;
}

YOrbit y_from_seed_dynamics(const ExchangeMatrix& b, const std::vector<BigRational>& y_init, std::size_t steps) {
  const PalindromicTuple a = quiver::tuple_of(b);
  const std::size_t n0 = b.n();
  if (y_init.size() != n0) throw Error(Errc::ConfigInvalid, "need one coefficient per node");
  require_positive(y_init, "y");
  YOrbit out{a.values(), {}};
  ExchangeMatrix m = b;
  std::vector<BigRational> y = y_init;
  for (std::size_t u = 0; u < n0 + steps; ++u) {
    const std::size_t k = u % n0;
    out.values.push_back(y[k]);
    y = quiver::mutate_coefficients(m, y, k);
    m = quiver::mutate_matrix(m, k);
  }
  return out;
}

}  // namespace cpl::ysys
