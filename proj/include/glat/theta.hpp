#pragma once

#include <vector>

#include "glat/errors.hpp"
#include "glat/int_matrix.hpp"
#include "glat/matgroup.hpp"

namespace glat {

/// Symmetric positive definite integral Gram matrix.
class GramForm {
 public:
  /// Throws NotPositiveDefinite (also for asymmetric input).
  explicit GramForm(IntMatrix matrix);

  std::size_t dim() const { return matrix_.rows(); }
  const IntMatrix& matrix() const { return matrix_; }
  BigInt norm(const IntVector& v) const;

 private:
  IntMatrix matrix_;
};

struct ShortVector {
  IntVector vector;
  BigInt norm;
};

/// Every v with v^T X v <= bound (zero included), sorted lexicographically.
std::vector<ShortVector> short_vectors(const GramForm& f, const BigInt& bound,
                                       std::size_t cap = kDefaultCap);
std::vector<ShortVector> short_vectors_serial(const GramForm& f, const BigInt& bound,
                                              std::size_t cap = kDefaultCap);

/// N_0 .. N_horizon.
std::vector<BigInt> theta_prefix(const GramForm& f, unsigned long horizon,
                                 std::size_t cap = kDefaultCap);

struct DiagonalBound {
  std::vector<BigInt> norms;     // distinct diagonal entries, ascending
  BigInt bound;                  // sum of N_i over those norms
  std::vector<IntVector> witness;  // all vectors whose norm is a diagonal entry
};

DiagonalBound diagonal_bound(const GramForm& f, std::size_t cap = kDefaultCap);

struct NormClassOrbit {
  Orbit orbit;
  BigInt norm;
  bool norms_equal;
  bool spans_full;       // orbit span is Z^dim
  std::size_t span_rank;
};

/// Orbit of v under g after checking h^T X h = X for every generator.
NormClassOrbit orbit_within_norm_class(const MatGroup& g, const GramForm& f, const IntVector& v,
                                       std::size_t cap = kDefaultCap);

}  // namespace glat
