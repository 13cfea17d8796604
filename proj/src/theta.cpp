#include "glat/theta.hpp"

#include <algorithm>
#include <atomic>
#include <set>

#include "glat/lattice.hpp"

namespace glat {

namespace {

BigInt floor_q(const mpq_class& q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt ceil_q(const mpq_class& q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Q(x) = sum_i d_i (x_i + sum_{j>i} mu_ij x_j)^2, exact over Q.
struct Decomposition {
  std::size_t n;
  std::vector<mpq_class> d;
  std::vector<std::vector<mpq_class>> mu;
};

Decomposition decompose(const IntMatrix& x) {
  const std::size_t n = x.rows();
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = mpq_class(x(i, j));
  Decomposition out{n, std::vector<mpq_class>(n), std::vector<std::vector<mpq_class>>(n, std::vector<mpq_class>(n))};
  for (std::size_t i = 0; i < n; ++i) {
    out.d[i] = a[i][i];
    for (std::size_t j = i + 1; j < n; ++j) out.mu[i][j] = a[i][j] / a[i][i];
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = i + 1; k < n; ++k) a[j][k] -= out.mu[i][j] * a[i][k];
  }
  return out;
}

class Enumerator {
 public:
  Enumerator(const GramForm& f, const BigInt& bound, std::size_t cap, std::atomic<std::size_t>& count)
      : f_(f), dec_(decompose(f.matrix())), bound_(bound), cap_(cap), count_(count), x_(f.dim()) {}

  // Integer candidates for coordinate i given coordinates i+1.. are fixed.
  std::vector<BigInt> candidates(std::size_t i, const mpq_class& budget, mpq_class& center) const {
    center = 0;
    for (std::size_t j = i + 1; j < dec_.n; ++j) center -= dec_.mu[i][j] * mpq_class(x_[j]);
    std::vector<BigInt> out;
    if (budget < 0) return out;
    const mpq_class ratio = budget / dec_.d[i];
    BigInt k = sqrt(floor_q(ratio)) + 1;
    const BigInt lo = floor_q(center) - k;
    const BigInt hi = ceil_q(center) + k;
    for (BigInt v = lo; v <= hi; ++v) {
      const mpq_class t = mpq_class(v) - center;
      if (dec_.d[i] * t * t <= budget) out.push_back(v);
    }
    return out;
  }

  void set(std::size_t i, const BigInt& v) { x_[i] = v; }

  void run(std::size_t i, const mpq_class& budget, std::vector<ShortVector>& out) {
    mpq_class center;
    for (const BigInt& v : candidates(i, budget, center)) {
      x_[i] = v;
      const mpq_class t = mpq_class(v) - center;
      const mpq_class rest = budget - dec_.d[i] * t * t;
      if (i == 0) {
        if (++count_ > cap_) throw CapExceeded("short vector enumeration", cap_);
        IntVector vec(std::vector<BigInt>(x_.begin(), x_.end()));
        BigInt nrm = f_.norm(vec);
        out.push_back({std::move(vec), std::move(nrm)});
      } else {
        run(i - 1, rest, out);
      }
    }
  }

  const Decomposition& dec() const { return dec_; }

 private:
  const GramForm& f_;
  Decomposition dec_;
  BigInt bound_;
  std::size_t cap_;
  std::atomic<std::size_t>& count_;
  std::vector<BigInt> x_;
};

std::vector<ShortVector> enumerate(const GramForm& f, const BigInt& bound, std::size_t cap, bool parallel) {
  if (sgn(bound) < 0) throw InvalidArgument("norm bound must be nonnegative");
  const std::size_t n = f.dim();
  std::atomic<std::size_t> count{0};
  Enumerator top(f, bound, cap, count);
  const mpq_class budget(bound);
  mpq_class center;
  const std::vector<BigInt> outer = top.candidates(n - 1, budget, center);

  std::vector<std::vector<ShortVector>> parts(outer.size());
  std::atomic<bool> capped{false};
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (std::size_t c = 0; c < outer.size(); ++c) {
    if (capped.load()) continue;
    try {
      Enumerator e(f, bound, cap, count);
      e.set(n - 1, outer[c]);
      const mpq_class t = mpq_class(outer[c]) - center;
      const mpq_class rest = budget - e.dec().d[n - 1] * t * t;
      if (n == 1) {
        if (++count > cap) throw CapExceeded("short vector enumeration", cap);
        IntVector vec{0};
        vec[0] = outer[c];
        parts[c].push_back({vec, f.norm(vec)});
      } else {
        e.run(n - 2, rest, parts[c]);
      }
    } catch (const CapExceeded&) {
      capped.store(true);
    }
  }
  if (capped.load()) throw CapExceeded("short vector enumeration", cap);

  std::vector<ShortVector> out;
  for (auto& p : parts)
    for (auto& sv : p) out.push_back(std::move(sv));
  std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) { return a.vector < b.vector; });
  for (const auto& sv : out)
    if (sv.norm > bound) throw Error("enumeration produced a vector above the bound");
  return out;
}

}  // namespace

GramForm::GramForm(IntMatrix matrix) : matrix_(std::move(matrix)) {
  if (!matrix_.is_square() || matrix_.rows() == 0) throw NotPositiveDefinite("Gram matrix must be square and nonempty");
  if (!matrix_.is_symmetric()) throw NotPositiveDefinite("Gram matrix is not symmetric");
  for (std::size_t k = 1; k <= matrix_.rows(); ++k) {
    IntMatrix lead(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) lead(i, j) = matrix_(i, j);
    if (determinant(lead) <= 0) throw NotPositiveDefinite("leading principal minor " + std::to_string(k) + " is not positive");
  }
}

BigInt GramForm::norm(const IntVector& v) const {
  const IntVector xv = matrix_ * v;
  BigInt s = 0;
  for (std::size_t i = 0; i < v.dim(); ++i) s += v[i] * xv[i];
  return s;
}

std::vector<ShortVector> short_vectors(const GramForm& f, const BigInt& bound, std::size_t cap) {
  return enumerate(f, bound, cap, true);
}

std::vector<ShortVector> short_vectors_serial(const GramForm& f, const BigInt& bound, std::size_t cap) {
  return enumerate(f, bound, cap, false);
}

std::vector<BigInt> theta_prefix(const GramForm& f, unsigned long horizon, std::size_t cap) {
  std::vector<BigInt> n(horizon + 1, 0);
  for (const auto& sv : short_vectors(f, BigInt(horizon), cap)) n[sv.norm.get_ui()] += 1;
  return n;
}

DiagonalBound diagonal_bound(const GramForm& f, std::size_t cap) {
  std::set<BigInt> diag;
  for (std::size_t i = 0; i < f.dim(); ++i) diag.insert(f.matrix()(i, i));
  DiagonalBound out;
  out.norms.assign(diag.begin(), diag.end());
  out.bound = 0;
  for (const auto& sv : short_vectors(f, out.norms.back(), cap)) {
    if (diag.count(sv.norm)) {
      out.witness.push_back(sv.vector);
      out.bound += 1;
    }
  }
  return out;
}

NormClassOrbit orbit_within_norm_class(const MatGroup& g, const GramForm& f, const IntVector& v, std::size_t cap) {
  if (g.dim() != f.dim()) throw DimensionMismatch("group and form dimensions differ");
  for (const auto& h : g.generators())
    if (h.transpose() * f.matrix() * h != f.matrix()) throw FormNotPreserved("a generator does not preserve the form");
  NormClassOrbit out{orbit(g, v, cap), f.norm(v), true, false, 0};
  for (const auto& w : out.orbit.elements)
    if (f.norm(w) != out.norm) out.norms_equal = false;
  const LatticeBasis span = hnf(out.orbit.elements, g.dim());
  out.span_rank = span.rank();
  out.spans_full = span == LatticeBasis::full(g.dim());
  return out;
}

}  // namespace glat
