#pragma once

// Independent brute-force routines used to freeze expected values in tests.
// Nothing here calls the normal-form code under test.

#include <gmpxx.h>

#include <functional>
#include <random>
#include <vector>

#include "glat/int_matrix.hpp"

namespace oracle {

using glat::BigInt;
using glat::IntMatrix;
using glat::IntVector;

// Determinant by cofactor expansion.
inline BigInt cofactor_det(const std::vector<std::vector<BigInt>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  BigInt total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<std::vector<BigInt>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<BigInt> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(a[r][k]);
      minor.push_back(row);
    }
    const BigInt term = a[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : BigInt(-term);
  }
  return total;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t start) {
    if (pos == k) {
      f(idx);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      idx[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

// Smith invariants from determinantal divisors: d_k = gcd of k x k minors.
inline std::vector<BigInt> smith_invariants_by_minors(const IntMatrix& m) {
  const std::size_t kmax = std::min(m.rows(), m.cols());
  std::vector<BigInt> divisors{1};
  for (std::size_t k = 1; k <= kmax; ++k) {
    BigInt g = 0;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rs) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cs) {
        std::vector<std::vector<BigInt>> sub(k, std::vector<BigInt>(k));
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub[i][j] = m(rs[i], cs[j]);
        const BigInt d = cofactor_det(sub);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    divisors.push_back(g);
  }
  std::vector<BigInt> inv;
  for (std::size_t k = 1; k <= kmax; ++k) {
    if (divisors[k] == 0) {
      inv.push_back(0);
    } else {
      inv.push_back(divisors[k] / divisors[k - 1]);
    }
  }
  return inv;
}

// Integer points in the half-open parallelepiped spanned by the rows of b
// (full-rank, small entries). Equals the index of the row lattice in Z^n.
inline long parallelepiped_point_count(const IntMatrix& b) {
  const std::size_t n = b.rows();
  // Inverse over Q by adjugate.
  std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i][j] = b(i, j);
  const BigInt det = cofactor_det(a);
  std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<std::vector<BigInt>> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        std::vector<BigInt> row;
        for (std::size_t c = 0; c < n; ++c)
          if (c != i) row.push_back(a[r][c]);
        minor.push_back(row);
      }
      BigInt cof = cofactor_det(minor);
      if ((i + j) % 2) cof = -cof;
      inv[i][j] = mpq_class(cof, det);
      inv[i][j].canonicalize();
    }
  // Bounding box of the parallelepiped.
  std::vector<long> lo(n, 0), hi(n, 0);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) {
      const long v = b(r, c).get_si();
      (v < 0 ? lo[c] : hi[c]) += v;
    }
  long count = 0;
  std::vector<long> y(n);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (pos == n) {
      // x = y * inv must lie in [0,1)^n.
      for (std::size_t j = 0; j < n; ++j) {
        mpq_class x = 0;
        for (std::size_t k = 0; k < n; ++k) x += mpq_class(y[k]) * inv[k][j];
        if (x < 0 || x >= 1) return;
      }
      ++count;
      return;
    }
    for (long v = lo[pos]; v <= hi[pos]; ++v) {
      y[pos] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  return count;
}

inline IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = d(rng);
  return m;
}

// Random unimodular matrix as a product of elementary operations.
inline IntMatrix random_unimodular(std::mt19937& rng, std::size_t n, int steps = 6) {
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = pick(rng), j = pick(rng);
    if (i == j) continue;
    const int c = coef(rng);
    for (std::size_t k = 0; k < n; ++k) u(i, k) += c * u(j, k);
  }
  return u;
}

// Orbit by naive closure: apply every group element to v and deduplicate.
inline std::size_t orbit_size_by_elements(const std::vector<IntMatrix>& elements, const IntVector& v) {
  std::vector<IntVector> seen;
  for (const auto& g : elements) {
    IntVector w = g * v;
    bool dup = false;
    for (const auto& s : seen) dup = dup || s == w;
    if (!dup) seen.push_back(w);
  }
  return seen.size();
}

}  // namespace oracle
