#include "cpl/analysis/linear_relation.hpp"

#include <sstream>

#include "cpl/algebra/error.hpp"
#include "linsolve.hpp"

namespace cpl::analysis {

bool LinearRelation::palindromic() const {
  const std::size_t m = coefficients.size();
  for (std::size_t k = 0; k < m; ++k)
    if (coefficients[k] != coefficients[m - 1 - k]) return false;
  return true;
}

BigRational LinearRelation::residual(const std::vector<BigRational>& x, std::size_t n) const {
  if (n + offsets.back() >= x.size()) throw Error(Errc::InsufficientData, "residual window past the orbit");
  BigRational r = 0;
  for (std::size_t k = 0; k < offsets.size(); ++k) r += coefficients[k] * x[n + offsets[k]];
  return r;
}

std::string LinearRelation::to_string() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < offsets.size(); ++k) {
    if (k) os << " + ";
    os << '(' << algebra::to_string(coefficients[k]) << ")*x(n+" << offsets[k] << ')';
  }
  os << " = 0";
  return os.str();
}

RelationSearch find_linear_relation(const std::vector<BigRational>& x, const std::vector<std::size_t>& offsets,
                                    std::size_t train, std::size_t verify) {
  if (offsets.size() < 2 || offsets[0] != 0)
    throw Error(Errc::DomainError, "offsets must start at 0 and have at least two entries");
  for (std::size_t k = 1; k < offsets.size(); ++k)
    if (offsets[k] <= offsets[k - 1]) throw Error(Errc::DomainError, "offsets must increase strictly");
  const std::size_t need = offsets.back() + train + verify;
  if (x.size() < need)
    throw Error(Errc::InsufficientData, "orbit has " + std::to_string(x.size()) + " values, need " +
                                            std::to_string(need));

  // Unknowns c_1..c_m; window n reads sum_k c_k x_{n+o_k} = -x_n.
  const std::size_t m = offsets.size() - 1;
  std::vector<detail::RatRow> rows(train, detail::RatRow(m + 1));
  for (std::size_t n = 0; n < train; ++n) {
    for (std::size_t k = 0; k < m; ++k) rows[n][k] = x[n + offsets[k + 1]];
    rows[n][m] = -x[n];
  }
  auto sol = detail::solve_exact(std::move(rows), m);
  RelationSearch out;
  if (!sol.consistent) {
    out.status = "training system inconsistent";
    return out;
  }
  out.consistent = true;
  out.solution_dimension = sol.nullity;
  if (sol.nullity != 0) {
    out.status = "training system rank-deficient; solution space has dimension " + std::to_string(sol.nullity);
    return out;
  }
  LinearRelation rel;
  rel.offsets = offsets;
  rel.coefficients.push_back(BigRational(1));
  for (auto& c : sol.x) rel.coefficients.push_back(std::move(c));
  rel.train = train;
  for (std::size_t n = train; n < train + verify; ++n) {
    if (rel.residual(x, n) != 0) {
      out.failed_at = n;
      out.status = "relation fails at window " + std::to_string(n);
      return out;
    }
  }
  rel.verified = verify;
  out.relation = std::move(rel);
  out.status = "verified";
  return out;
}

BigRational somos4_first_integral(const BigRational& u1, const BigRational& u2) {
  BigRational p = u1 * u2;
  if (p == 0) throw Error(Errc::ZeroProduct, "first integral needs U1 U2 != 0");
  return BigRational((p * p + u1 + u2 + 1) / p);
}

}  // namespace cpl::analysis
