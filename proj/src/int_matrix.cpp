#include "glat/int_matrix.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <sstream>

#include "glat/errors.hpp"

namespace glat {

namespace {

std::strong_ordering compare_big(const BigInt& a, const BigInt& b) {
  const int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::size_t hash_big(const BigInt& x) {
  // Low limb plus sign is enough to spread small entries; equality resolves collisions.
  const auto size = x.get_mpz_t()->_mp_size;
  std::size_t h = size == 0 ? 0 : static_cast<std::size_t>(mpz_getlimbn(x.get_mpz_t(), 0));
  return h * 0x9e3779b97f4a7c15ULL ^ static_cast<std::size_t>(size);
}

}  // namespace

IntVector::IntVector(std::initializer_list<long> values) {
  entries_.reserve(values.size());
  for (long v : values) entries_.emplace_back(v);
}

IntVector IntVector::unit(std::size_t dim, std::size_t i) {
  IntVector v(dim);
  v[i] = 1;
  return v;
}

IntVector IntVector::ones(std::size_t dim) {
  IntVector v(dim);
  for (auto& e : v.entries_) e = 1;
  return v;
}

bool IntVector::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const BigInt& x) { return sgn(x) == 0; });
}

std::size_t IntVector::support_size() const {
  return static_cast<std::size_t>(
      std::count_if(entries_.begin(), entries_.end(), [](const BigInt& x) { return sgn(x) != 0; }));
}

bool IntVector::is_binary() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const BigInt& x) { return x == 0 || x == 1; });
}

IntVector& IntVector::operator+=(const IntVector& other) {
  if (other.dim() != dim()) throw DimensionMismatch("vector addition");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

IntVector& IntVector::operator-=(const IntVector& other) {
  if (other.dim() != dim()) throw DimensionMismatch("vector subtraction");
  for (std::size_t i = 0; i < dim(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

IntVector& IntVector::operator*=(const BigInt& scalar) {
  for (auto& e : entries_) e *= scalar;
  return *this;
}

IntVector IntVector::operator-() const {
  IntVector r = *this;
  for (auto& e : r.entries_) e = -e;
  return r;
}

std::strong_ordering operator<=>(const IntVector& a, const IntVector& b) {
  const std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = compare_big(a[i], b[i]); c != 0) return c;
  }
  return a.dim() <=> b.dim();
}

IntVector operator+(IntVector a, const IntVector& b) { return a += b; }
IntVector operator-(IntVector a, const IntVector& b) { return a -= b; }
IntVector operator*(const BigInt& s, IntVector v) { return v *= s; }

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) throw DimensionMismatch("matrix entry count");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const BigInt> diag) {
  IntMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  std::vector<BigInt> e(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  return IntVector(std::move(e));
}

IntVector IntMatrix::col(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<IntVector> IntMatrix::row_vectors() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

void IntMatrix::set_row(std::size_t r, const IntVector& v) {
  if (v.dim() != cols_) throw DimensionMismatch("set_row");
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

void IntMatrix::append_row(const IntVector& v) {
  if (rows_ == 0 && cols_ == 0) cols_ = v.dim();
  if (v.dim() != cols_) throw DimensionMismatch("append_row");
  for (std::size_t c = 0; c < cols_; ++c) data_.push_back(v[c]);
  ++rows_;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool IntMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

bool IntMatrix::is_diagonal() const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (r != c && sgn((*this)(r, c)) != 0) return false;
  return true;
}

bool IntMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

std::strong_ordering operator<=>(const IntMatrix& a, const IntMatrix& b) {
  if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
  if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
  for (std::size_t i = 0; i < a.data_.size(); ++i) {
    if (auto c = compare_big(a.data_[i], b.data_[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product");
  IntMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

IntVector operator*(const IntMatrix& a, const IntVector& v) {
  if (a.cols() != v.dim()) throw DimensionMismatch("matrix-vector product");
  IntVector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BigInt acc = 0;
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * v[k];
    out[i] = acc;
  }
  return out;
}

IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix sum");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) + b(r, c);
  return out;
}

IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference");
  IntMatrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c) - b(r, c);
  return out;
}

BigInt determinant(const IntMatrix& m) {
  if (!m.is_square()) throw DimensionMismatch("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  BigInt sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && sgn(a(swap_row, k)) == 0) ++swap_row;
      if (swap_row == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(swap_row, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  BigInt prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(a(piv, c)) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(piv, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt t = a(i, j) * a(r, c) - a(i, c) * a(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = t;
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

bool is_unimodular(const IntMatrix& m) {
  if (!m.is_square()) return false;
  const BigInt d = determinant(m);
  return d == 1 || d == -1;
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (!is_unimodular(m)) throw NotUnimodular("matrix is not invertible over the integers");
  const std::size_t n = m.rows();
  // Gauss-Jordan over Q; the result is integral because det = +-1.
  std::vector<mpq_class> a(n * 2 * n);
  auto at = [&](std::size_t r, std::size_t c) -> mpq_class& { return a[r * 2 * n + c]; };
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) at(r, c) = mpq_class(m(r, c));
    at(r, n + r) = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (sgn(at(piv, c)) == 0) ++piv;
    if (piv != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(at(c, j), at(piv, j));
    const mpq_class inv = 1 / at(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) at(c, j) *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || sgn(at(r, c)) == 0) continue;
      const mpq_class f = at(r, c);
      for (std::size_t j = 0; j < 2 * n; ++j) at(r, j) -= f * at(c, j);
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      const mpq_class& q = at(r, n + c);
      inv(r, c) = q.get_num();
    }
  return inv;
}

BigInt gcd_of_entries(std::span<const BigInt> values) {
  BigInt g = 0;
  for (const auto& v : values) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

std::ostream& operator<<(std::ostream& os, const IntVector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.dim(); ++i) os << (i ? "," : "") << v[i];
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "," : "") << '[';
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? "," : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::size_t IntVectorHash::operator()(const IntVector& v) const noexcept {
  std::size_t h = v.dim();
  for (const auto& e : v.entries()) h = (h << 7 | h >> 57) ^ hash_big(e);
  return h;
}

std::size_t IntMatrixHash::operator()(const IntMatrix& m) const noexcept {
  std::size_t h = m.rows() * 31 + m.cols();
  for (const auto& e : m.data()) h = (h << 7 | h >> 57) ^ hash_big(e);
  return h;
}

}  // namespace glat
