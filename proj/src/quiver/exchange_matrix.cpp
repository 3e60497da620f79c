#include "cpl/quiver/exchange_matrix.hpp"

#include <sstream>

#include "cpl/algebra/error.hpp"

namespace cpl::quiver {

namespace {

BigInt pos(const BigInt& x) { return x > 0 ? x : BigInt(0); }

}  // namespace

ExchangeMatrix::ExchangeMatrix(IntMatrix b) : b_(std::move(b)) {
  if (b_.rows() != b_.cols() || b_.rows() < 2) throw Error(Errc::NotSkewSymmetric, "exchange matrix must be square with N >= 2");
  for (std::size_t i = 0; i < n(); ++i)
    for (std::size_t j = i; j < n(); ++j)
      if (b_(i, j) != -b_(j, i))
        throw Error(Errc::NotSkewSymmetric, "entries (" + std::to_string(i) + "," + std::to_string(j) + ") violate skew symmetry");
}

ExchangeMatrix ExchangeMatrix::zero(std::size_t n) { return ExchangeMatrix(IntMatrix(n, n)); }

std::vector<long> ExchangeMatrix::first_row() const {
  std::vector<long> r;
  for (std::size_t j = 1; j < n(); ++j) r.push_back(algebra::to_long(b_(0, j)));
  return r;
}

PalindromicTuple::PalindromicTuple(std::vector<long> a) : a_(std::move(a)) {
  if (a_.empty()) throw Error(Errc::NotPalindromic, "tuple must have at least one entry");
  for (std::size_t i = 0; i < a_.size(); ++i)
    if (a_[i] != a_[a_.size() - 1 - i]) throw Error(Errc::NotPalindromic, "tuple " + to_string() + " is not palindromic");
}

bool PalindromicTuple::is_zero() const {
  for (long x : a_)
    if (x != 0) return false;
  return true;
}

std::string PalindromicTuple::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < a_.size(); ++i) os << (i ? "," : "") << a_[i];
  os << ")";
  return os.str();
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k) {
  const std::size_t n = b.n();
  if (k >= n) throw Error(Errc::IndexOutOfRange, "mutation index " + std::to_string(k));
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == k || j == k) {
        m(i, j) = -b(i, j);
      } else {
        // (|b_ik| b_kj + b_ik |b_kj|) / 2
        const BigInt& bik = b(i, k);
        const BigInt& bkj = b(k, j);
        m(i, j) = b(i, j) + (algebra::abs(bik) * bkj + bik * algebra::abs(bkj)) / 2;
      }
    }
  return ExchangeMatrix(std::move(m));
}

ExchangeMatrix rho_conjugate(const ExchangeMatrix& b) {
  const std::size_t n = b.n();
  auto rho = [n](std::size_t j) { return j == 0 ? n - 1 : j - 1; };
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) m(j, k) = b(rho(j), rho(k));
  return ExchangeMatrix(std::move(m));
}

Period1Report check_period1(const ExchangeMatrix& b) {
  const std::size_t n = b.n();
  Period1Report rep;
  rep.period1 = true;
  // 0-based: b(j-1, N-1) = b(0, j) and
  // b(j, k) = b(j-1, k-1) + b(0, j)[-b(0, k)]_+ - b(0, k)[-b(0, j)]_+.
  for (std::size_t j = 1; j < n && rep.period1; ++j)
    if (b(j - 1, n - 1) != b(0, j)) {
      rep.period1 = false;
      rep.witness = "first-row relation fails at j=" + std::to_string(j) + ": b(" + std::to_string(j - 1) + "," +
                    std::to_string(n - 1) + ")=" + b(j - 1, n - 1).get_str() + " but b(0," + std::to_string(j) +
                    ")=" + b(0, j).get_str();
    }
  for (std::size_t j = 1; j < n && rep.period1; ++j)
    for (std::size_t k = 1; k < n && rep.period1; ++k) {
      BigInt want = b(j - 1, k - 1) + b(0, j) * pos(-b(0, k)) - b(0, k) * pos(-b(0, j));
      if (b(j, k) != want) {
        rep.period1 = false;
        rep.witness = "shift relation fails at (j,k)=(" + std::to_string(j) + "," + std::to_string(k) + "): b(" +
                      std::to_string(j) + "," + std::to_string(k) + ")=" + b(j, k).get_str() + " but expected " +
                      want.get_str();
      }
    }
  rep.mutation_matches_rho = mutate_matrix(b, 0) == rho_conjugate(b);
  return rep;
}

bool is_period1(const ExchangeMatrix& b) {
  auto rep = check_period1(b);
  if (rep.period1 != rep.mutation_matches_rho)
    throw Error(Errc::NotPeriod1, "relation test and mutation test disagree on " + b.matrix().to_string());
  return rep.period1;
}

ExchangeMatrix build_from_tuple(const PalindromicTuple& a) {
  const std::size_t n = a.order();
  IntMatrix m(n, n);
  for (std::size_t j = 1; j < n; ++j) {
    m(0, j) = a.at(j);
    m(j, 0) = -a.at(j);
  }
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t k = 1; k < n; ++k)
      m(j, k) = m(j - 1, k - 1) + m(0, j) * pos(-m(0, k)) - m(0, k) * pos(-m(0, j));
  ExchangeMatrix b(std::move(m));
  if (!is_period1(b)) throw Error(Errc::NotPeriod1, "constructed matrix fails the period-1 relations");
  return b;
}

PalindromicTuple tuple_of(const ExchangeMatrix& b) {
  if (!is_period1(b)) throw Error(Errc::NotPeriod1, check_period1(b).witness);
  return PalindromicTuple(b.first_row());
}

}  // namespace cpl::quiver
