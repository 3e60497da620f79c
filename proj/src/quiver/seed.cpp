#include "cpl/quiver/seed.hpp"

#include "cpl/algebra/error.hpp"

namespace cpl::quiver {

void Seed::validate() const {
  if (x.size() != b.n() || y.size() != b.n()) throw Error(Errc::NonPositiveInitial, "seed size does not match matrix");
  for (std::size_t i = 0; i < b.n(); ++i)
    if (x[i] <= 0 || y[i] <= 0) throw Error(Errc::NonPositiveInitial, "seed entries must be positive");
}

std::vector<BigRational> mutate_coefficients(const ExchangeMatrix& b, const std::vector<BigRational>& y, std::size_t k) {
  const std::size_t n = b.n();
  if (k >= n) throw Error(Errc::IndexOutOfRange, "mutation index " + std::to_string(k));
  if (y.size() != n) throw Error(Errc::IndexOutOfRange, "coefficient tuple size does not match matrix");
  std::vector<BigRational> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (j == k) {
      out[j] = 1 / y[k];
      continue;
    }
    const long bkj = algebra::to_long(b(k, j));
    if (bkj == 0) {
      out[j] = y[j];
      continue;
    }
    // y_j (1 + y_k^{-sgn b_kj})^{-b_kj}
    BigRational base = 1 + (bkj > 0 ? 1 / y[k] : y[k]);
    out[j] = y[j] * algebra::pow(base, -bkj);
  }
  return out;
}

Seed mutate_seed(const Seed& s, std::size_t k) {
  s.validate();
  const std::size_t n = s.b.n();
  if (k >= n) throw Error(Errc::IndexOutOfRange, "mutation index " + std::to_string(k));
  BigRational plus = 1, minus = 1;
  for (std::size_t j = 0; j < n; ++j) {
    const long bkj = algebra::to_long(s.b(k, j));
    if (bkj > 0) plus *= algebra::pow(s.x[j], bkj);
    if (bkj < 0) minus *= algebra::pow(s.x[j], -bkj);
  }
  Seed out{mutate_matrix(s.b, k), s.x, mutate_coefficients(s.b, s.y, k)};
  out.x[k] = (s.y[k] * plus + minus) / ((1 + s.y[k]) * s.x[k]);
  return out;
}

}  // namespace cpl::quiver
