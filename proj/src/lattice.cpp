#include "glat/lattice.hpp"

#include <ostream>
#include <utility>

#include "glat/errors.hpp"

namespace glat {

namespace {

void row_axpy(IntMatrix& a, std::size_t dst, const BigInt& q, std::size_t src) {
  for (std::size_t c = 0; c < a.cols(); ++c) a(dst, c) -= q * a(src, c);
}

void swap_rows(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(i, c), a(j, c));
}

void swap_cols(IntMatrix& a, std::size_t i, std::size_t j) {
  if (i == j) return;
  for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
}

void col_axpy(IntMatrix& a, std::size_t dst, const BigInt& q, std::size_t src) {
  for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) -= q * a(r, src);
}

BigInt tdiv(const BigInt& a, const BigInt& b) {
  BigInt q;
  mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

LatticeBasis LatticeBasis::full(std::size_t n) { return hnf(IntMatrix::identity(n)); }

LatticeBasis LatticeBasis::scaled(std::size_t n, const BigInt& m) {
  IntMatrix a = IntMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = m;
  return hnf(a);
}

LatticeBasis LatticeBasis::zero(std::size_t n) { return hnf(IntMatrix(0, n)); }

std::vector<BigInt> SmithDecomposition::invariants() const {
  std::vector<BigInt> out;
  const std::size_t k = std::min(D.rows(), D.cols());
  for (std::size_t i = 0; i < k; ++i) out.push_back(D(i, i));
  return out;
}

LatticeBasis hnf(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    while (true) {
      std::size_t best = rows;
      for (std::size_t i = r; i < rows; ++i) {
        if (sgn(a(i, c)) == 0) continue;
        if (best == rows || mpz_cmpabs(a(i, c).get_mpz_t(), a(best, c).get_mpz_t()) < 0) best = i;
      }
      if (best == rows) break;
      swap_rows(a, r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (sgn(a(i, c)) == 0) continue;
        row_axpy(a, i, floor_div(a(i, c), a(r, c)), r);
        if (sgn(a(i, c)) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(a(r, c)) == 0) continue;
    if (sgn(a(r, c)) < 0)
      for (std::size_t j = 0; j < cols; ++j) a(r, j) = -a(r, j);
    for (std::size_t i = 0; i < r; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      row_axpy(a, i, floor_div(a(i, c), a(r, c)), r);
    }
    pivots.push_back(c);
    ++r;
  }
  LatticeBasis out;
  std::vector<BigInt> data(a.data().begin(), a.data().begin() + static_cast<std::ptrdiff_t>(r * cols));
  out.basis_ = IntMatrix(r, cols, std::move(data));
  out.pivots_ = std::move(pivots);
  return out;
}

LatticeBasis hnf(std::span<const IntVector> rows, std::size_t ambient_dim) {
  return hnf(IntMatrix::from_rows(rows, ambient_dim));
}

SmithDecomposition snf(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix p = IntMatrix::identity(m.rows());
  IntMatrix q = IntMatrix::identity(m.cols());
  const std::size_t rows = d.rows();
  const std::size_t cols = d.cols();
  const std::size_t k = std::min(rows, cols);

  for (std::size_t t = 0; t < k; ++t) {
    while (true) {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (sgn(d(i, j)) == 0) continue;
          if (bi == rows || mpz_cmpabs(d(i, j).get_mpz_t(), d(bi, bj).get_mpz_t()) < 0) bi = i, bj = j;
        }
      if (bi == rows) break;
      swap_rows(d, t, bi);
      swap_rows(p, t, bi);
      swap_cols(d, t, bj);
      swap_cols(q, t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(d(i, t)) == 0) continue;
        const BigInt f = tdiv(d(i, t), d(t, t));
        row_axpy(d, i, f, t);
        row_axpy(p, i, f, t);
        if (sgn(d(i, t)) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(d(t, j)) == 0) continue;
        const BigInt f = tdiv(d(t, j), d(t, t));
        col_axpy(d, j, f, t);
        col_axpy(q, j, f, t);
        if (sgn(d(t, j)) != 0) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!mpz_divisible_p(d(i, j).get_mpz_t(), d(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      // Fold the offending row into the pivot row; the next pass shrinks the pivot.
      for (std::size_t j = 0; j < cols; ++j) d(t, j) += d(bad, j);
      for (std::size_t j = 0; j < p.cols(); ++j) p(t, j) += p(bad, j);
    }
    if (sgn(d(t, t)) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < p.cols(); ++j) p(t, j) = -p(t, j);
    }
  }
  return {std::move(p), std::move(d), std::move(q)};
}

std::optional<std::vector<BigInt>> coordinates(const IntVector& v, const LatticeBasis& l) {
  if (v.dim() != l.ambient_dim()) throw DimensionMismatch("membership test");
  IntVector w = v;
  std::vector<BigInt> coeff(l.rank());
  const IntMatrix& b = l.basis();
  std::size_t col = 0;
  for (std::size_t i = 0; i < l.rank(); ++i) {
    const std::size_t pc = l.pivot(i);
    for (; col < pc; ++col)
      if (sgn(w[col]) != 0) return std::nullopt;
    if (!mpz_divisible_p(w[pc].get_mpz_t(), b(i, pc).get_mpz_t())) return std::nullopt;
    BigInt c;
    mpz_divexact(c.get_mpz_t(), w[pc].get_mpz_t(), b(i, pc).get_mpz_t());
    if (sgn(c) != 0)
      for (std::size_t j = pc; j < w.dim(); ++j) w[j] -= c * b(i, j);
    coeff[i] = std::move(c);
    col = pc + 1;
  }
  for (; col < w.dim(); ++col)
    if (sgn(w[col]) != 0) return std::nullopt;
  return coeff;
}

bool member(const IntVector& v, const LatticeBasis& l) { return coordinates(v, l).has_value(); }

bool contains(const LatticeBasis& sup, const LatticeBasis& sub) {
  if (sup.ambient_dim() != sub.ambient_dim()) throw DimensionMismatch("lattice containment");
  for (std::size_t i = 0; i < sub.rank(); ++i)
    if (!member(sub.basis().row(i), sup)) return false;
  return true;
}

std::optional<BigInt> index(const LatticeBasis& sub, const LatticeBasis& sup) {
  if (sub.ambient_dim() != sup.ambient_dim()) throw DimensionMismatch("lattice index");
  IntMatrix coords(sub.rank(), sup.rank());
  for (std::size_t i = 0; i < sub.rank(); ++i) {
    auto c = coordinates(sub.basis().row(i), sup);
    if (!c) throw NotASublattice("index: first lattice is not contained in the second");
    for (std::size_t j = 0; j < sup.rank(); ++j) coords(i, j) = (*c)[j];
  }
  if (sub.rank() != sup.rank()) return std::nullopt;
  BigInt d = determinant(coords);
  return BigInt(abs(d));
}

BigInt content(const LatticeBasis& l) { return gcd_of_entries(l.basis().data()); }

bool is_primitive(const LatticeBasis& l) { return content(l) == 1; }

LatticeBasis lattice_sum(const LatticeBasis& a, const LatticeBasis& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("lattice sum");
  IntMatrix m(0, a.ambient_dim());
  for (std::size_t i = 0; i < a.rank(); ++i) m.append_row(a.basis().row(i));
  for (std::size_t i = 0; i < b.rank(); ++i) m.append_row(b.basis().row(i));
  return hnf(m);
}

LatticeBasis transform_lattice(const LatticeBasis& l, const IntMatrix& a) {
  if (a.cols() != l.ambient_dim()) throw DimensionMismatch("lattice transform");
  return hnf(l.basis() * a.transpose());
}

std::ostream& operator<<(std::ostream& os, const LatticeBasis& l) { return os << l.basis(); }

}  // namespace glat
