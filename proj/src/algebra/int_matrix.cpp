#include "cpl/algebra/int_matrix.hpp"

#include <sstream>
#include <utility>

#include "cpl/algebra/error.hpp"

namespace cpl::algebra {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(Errc::ParseError, "ragged matrix literal");
    for (long x : r) a_.emplace_back(x);
  }
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw Error(Errc::ParseError, "ragged matrix rows");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t i) const { return IntVector(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw Error(Errc::IndexOutOfRange, "matrix shapes do not conform");
  IntMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const BigInt& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) mpz_addmul(r(i, j).get_mpz_t(), x.get_mpz_t(), o(k, j).get_mpz_t());
    }
  return r;
}

IntVector IntMatrix::operator*(const IntVector& v) const {
  if (cols_ != v.size()) throw Error(Errc::IndexOutOfRange, "vector length does not conform");
  IntVector r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) mpz_addmul(r[i].get_mpz_t(), (*this)(i, k).get_mpz_t(), v[k].get_mpz_t());
  return r;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : a_)
    if (x != 0) return false;
  return true;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

namespace {

// Unimodular row reduction on columns [0, ncols) of m: after return the first
// `rank` rows are in echelon form on those columns and the remaining rows are
// zero there. Pivots are made positive and entries above them reduced.
std::size_t integer_echelon(IntMatrix& m, std::size_t ncols) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::size_t pr = 0;
  BigInt g, s, t, u, v, tmp;
  for (std::size_t c = 0; c < ncols && pr < nr; ++c) {
    std::size_t piv = nr;
    for (std::size_t i = pr; i < nr; ++i)
      if (m(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv == nr) continue;
    if (piv != pr)
      for (std::size_t j = 0; j < nc; ++j) std::swap(m(piv, j), m(pr, j));
    for (std::size_t i = pr + 1; i < nr; ++i) {
      if (m(i, c) == 0) continue;
      // [s t; -b/g a/g] is unimodular and clears m(i,c).
      BigInt a = m(pr, c), b = m(i, c);
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      mpz_divexact(u.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(v.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
      for (std::size_t j = 0; j < nc; ++j) {
        BigInt x = m(pr, j), y = m(i, j);
        m(pr, j) = s * x + t * y;
        m(i, j) = u * y - v * x;
      }
    }
    if (m(pr, c) < 0)
      for (std::size_t j = 0; j < nc; ++j) m(pr, j) = -m(pr, j);
    for (std::size_t i = 0; i < pr; ++i) {
      if (m(i, c) == 0) continue;
      mpz_fdiv_q(tmp.get_mpz_t(), m(i, c).get_mpz_t(), m(pr, c).get_mpz_t());
      for (std::size_t j = 0; j < nc; ++j) mpz_submul(m(i, j).get_mpz_t(), tmp.get_mpz_t(), m(pr, j).get_mpz_t());
    }
    ++pr;
  }
  return pr;
}

}  // namespace

IntMatrix hermite_rows(const IntMatrix& m) {
  IntMatrix w = m;
  std::size_t r = integer_echelon(w, w.cols());
  IntMatrix out(r, w.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < w.cols(); ++j) out(i, j) = w(i, j);
  return out;
}

std::vector<RatVector> rational_rref(const IntMatrix& m) {
  std::vector<RatVector> a(m.rows(), RatVector(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = m(i, j);
  std::size_t pr = 0;
  for (std::size_t c = 0; c < m.cols() && pr < a.size(); ++c) {
    std::size_t piv = a.size();
    for (std::size_t i = pr; i < a.size(); ++i)
      if (a[i][c] != 0) {
        piv = i;
        break;
      }
    if (piv == a.size()) continue;
    std::swap(a[piv], a[pr]);
    BigRational inv = 1 / a[pr][c];
    for (auto& x : a[pr]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == pr || a[i][c] == 0) continue;
      BigRational f = a[i][c];
      for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] -= f * a[pr][j];
    }
    ++pr;
  }
  a.resize(pr);
  return a;
}

std::size_t rank(const IntMatrix& m) { return rational_rref(m).size(); }

std::vector<IntVector> kernel_basis(const IntMatrix& b) {
  const std::size_t n = b.cols(), m = b.rows();
  // [B^T | I]: rows of the unimodular block whose B^T part reduces to zero
  // span the kernel lattice.
  IntMatrix w(n, m + n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) w(i, j) = b(j, i);
    w(i, m + i) = 1;
  }
  std::size_t r = integer_echelon(w, m);
  IntMatrix k(n - r, n);
  for (std::size_t i = r; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) k(i - r, j) = w(i, m + j);
  return hermite_rows(k).row_list();
}

IntMatrix image_lattice_basis(const IntMatrix& b) {
  const std::size_t n = b.rows();
  auto perp = kernel_basis(b.transpose());
  if (perp.empty()) return IntMatrix::identity(n);
  auto sat = kernel_basis(IntMatrix::from_rows(perp, n));
  if (sat.empty()) return IntMatrix(0, n);
  return hermite_rows(IntMatrix::from_rows(sat, n));
}

std::optional<IntVector> solve_echelon(const IntMatrix& echelon, const IntVector& v) {
  if (v.size() != echelon.cols()) throw Error(Errc::IndexOutOfRange, "vector length does not conform");
  IntVector rem = v;
  IntVector coef(echelon.rows());
  std::size_t col = 0;
  for (std::size_t k = 0; k < echelon.rows(); ++k) {
    while (col < echelon.cols() && echelon(k, col) == 0) {
      if (rem[col] != 0) return std::nullopt;
      ++col;
    }
    if (col == echelon.cols()) break;
    if (!mpz_divisible_p(rem[col].get_mpz_t(), echelon(k, col).get_mpz_t())) return std::nullopt;
    mpz_divexact(coef[k].get_mpz_t(), rem[col].get_mpz_t(), echelon(k, col).get_mpz_t());
    for (std::size_t j = col; j < echelon.cols(); ++j)
      mpz_submul(rem[j].get_mpz_t(), coef[k].get_mpz_t(), echelon(k, j).get_mpz_t());
    ++col;
  }
  for (const auto& x : rem)
    if (x != 0) return std::nullopt;
  return coef;
}

bool same_lattice(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix ha = hermite_rows(a), hb = hermite_rows(b);
  for (std::size_t i = 0; i < b.rows(); ++i)
    if (!solve_echelon(ha, b.row(i))) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    if (!solve_echelon(hb, a.row(i))) return false;
  return true;
}

bool in_rational_span(const IntMatrix& m, const IntVector& v) {
  IntMatrix ext(m.rows() + 1, m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) ext(i, j) = m(i, j);
  for (std::size_t j = 0; j < m.cols(); ++j) ext(m.rows(), j) = v[j];
  return rank(ext) == rank(m);
}

IntVector primitive_part(const IntVector& v) {
  BigInt g = content(v);
  if (g == 0) return v;
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) mpz_divexact(r[i].get_mpz_t(), v[i].get_mpz_t(), g.get_mpz_t());
  return r;
}

}  // namespace cpl::algebra
