#pragma once

#include <optional>
#include <span>
#include <vector>

#include "glat/int_matrix.hpp"

namespace glat {

/// Sublattice of Z^n stored as a row-style Hermite normal form basis.
///
/// Rows are upper-triangular with strictly increasing pivot columns, positive
/// pivots, and entries above each pivot reduced into [0, pivot). Two bases are
/// equal iff they span the same lattice.
class LatticeBasis {
 public:
  LatticeBasis() = default;

  static LatticeBasis full(std::size_t n);
  static LatticeBasis scaled(std::size_t n, const BigInt& m);
  static LatticeBasis zero(std::size_t n);

  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t rank() const { return basis_.rows(); }
  const IntMatrix& basis() const { return basis_; }
  std::size_t pivot(std::size_t row) const { return pivots_[row]; }
  bool is_full_rank() const { return rank() == ambient_dim(); }

  friend bool operator==(const LatticeBasis& a, const LatticeBasis& b) { return a.basis_ == b.basis_; }

 private:
  friend LatticeBasis hnf(const IntMatrix& m);
  IntMatrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Smith decomposition P * m * Q = D with P, Q unimodular.
struct SmithDecomposition {
  IntMatrix P;
  IntMatrix D;
  IntMatrix Q;
  std::vector<BigInt> invariants() const;
};

LatticeBasis hnf(const IntMatrix& m);
LatticeBasis hnf(std::span<const IntVector> rows, std::size_t ambient_dim);

SmithDecomposition snf(const IntMatrix& m);

bool member(const IntVector& v, const LatticeBasis& l);

/// Coordinates of v in the HNF basis of l, or nullopt when v is not in l.
std::optional<std::vector<BigInt>> coordinates(const IntVector& v, const LatticeBasis& l);

/// True when every basis row of sub lies in sup.
bool contains(const LatticeBasis& sup, const LatticeBasis& sub);

/// [sup : sub]; nullopt means infinite (ranks differ). Throws NotASublattice.
std::optional<BigInt> index(const LatticeBasis& sub, const LatticeBasis& sup);

bool is_primitive(const LatticeBasis& l);

/// Largest m with l = m * M for an integral lattice M (0 for the zero lattice).
BigInt content(const LatticeBasis& l);

LatticeBasis lattice_sum(const LatticeBasis& a, const LatticeBasis& b);

/// Image of l under v -> a v (rows mapped by a^T), re-canonicalized.
LatticeBasis transform_lattice(const LatticeBasis& l, const IntMatrix& a);

std::ostream& operator<<(std::ostream& os, const LatticeBasis& l);

}  // namespace glat
