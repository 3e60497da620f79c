#include "cpl/analysis/degrees.hpp"

#include <algorithm>
#include <sstream>

#include "cpl/algebra/error.hpp"

namespace cpl::analysis {

DegreeSequence degree_sequence(const tsys::SymbolicOrbit& orbit, DegreeMode mode) {
  const std::size_t n = orbit.stencil.size() + 1;
  if (mode.variable && *mode.variable >= n)
    throw Error(Errc::IndexOutOfRange, "tracked variable " + std::to_string(*mode.variable) + " of " +
                                           std::to_string(n));
  DegreeSequence out;
  out.definition = mode.variable ? "denominator degree in x" + std::to_string(*mode.variable)
                                 : "total denominator degree";
  out.d.reserve(orbit.values.size());
  for (const auto& p : orbit.values) {
    long sum = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mode.variable && i != *mode.variable) continue;
      sum += std::max(0L, -static_cast<long>(p.min_exponent(i)));
    }
    out.d.emplace_back(sum);
  }
  return out;
}

std::vector<BigInt> tropical_orbit(const PalindromicTuple& a, const std::vector<BigInt>& init, std::size_t steps) {
  const std::size_t n = a.order();
  if (init.size() != n)
    throw Error(Errc::IndexOutOfRange, "tropical init has " + std::to_string(init.size()) + " entries, need " +
                                           std::to_string(n));
  std::vector<BigInt> x(init);
  x.reserve(n + steps);
  for (std::size_t m = 0; m < steps; ++m) {
    BigInt p = 0, q = 0;
    for (std::size_t j = 1; j < n; ++j) {
      p += a.plus(j) * x[m + j];
      q += a.minus(j) * x[m + j];
    }
    x.push_back(std::max(p, q) - x[m]);
  }
  return x;
}

DegreeSequence tropical_iterate(const PalindromicTuple& a, const std::vector<BigInt>& init, std::size_t steps) {
  DegreeSequence out{tropical_orbit(a, init, steps), "tropical, floored at 0"};
  for (auto& v : out.d)
    if (v < 0) v = 0;
  return out;
}

std::vector<BigInt> pole_init(std::size_t n, std::size_t i) {
  if (i >= n) throw Error(Errc::IndexOutOfRange, "pole variable out of range");
  std::vector<BigInt> v(n, BigInt(0));
  v[i] = -1;
  return v;
}

DegreeSequence tropical_total_degree(const PalindromicTuple& a, std::size_t steps) {
  const std::size_t n = a.order();
  DegreeSequence out{std::vector<BigInt>(n + steps, BigInt(0)), "tropical total degree"};
  for (std::size_t i = 0; i < n; ++i) {
    auto di = tropical_iterate(a, pole_init(n, i), steps);
    for (std::size_t m = 0; m < out.d.size(); ++m) out.d[m] += di.d[m];
  }
  return out;
}

DegreeSequence exponent_degrees(const std::vector<BigRational>& exponents) {
  DegreeSequence out;
  out.definition = "Z exponent";
  out.d.reserve(exponents.size());
  for (std::size_t n = 0; n < exponents.size(); ++n) {
    if (exponents[n].get_den() != 1)
      throw Error(Errc::DomainError, "exponent " + std::to_string(n) + " is not an integer");
    out.d.push_back(exponents[n].get_num());
  }
  return out;
}

BigRational growth_ratio(const DegreeSequence& d, std::size_t n) {
  if (n + 1 >= d.size()) throw Error(Errc::IndexOutOfRange, "growth ratio past the end of the sequence");
  if (d.d[n] == 0) throw Error(Errc::DomainError, "growth ratio at a zero entry");
  BigRational r(d.d[n + 1], d.d[n]);
  r.canonicalize();
  return r;
}

std::string to_csv(const DegreeSequence& d) {
  std::ostringstream os;
  os << "n,d\n";
  for (std::size_t n = 0; n < d.size(); ++n) os << n << ',' << algebra::to_string(d.d[n]) << '\n';
  return os.str();
}

}  // namespace cpl::analysis
