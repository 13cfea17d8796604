#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "glat/int_matrix.hpp"
#include "glat/lattice.hpp"

namespace glat {

/// Polynomial over F_2, bit k = coefficient of x^k. Also used as a bit vector.
class GF2Poly {
 public:
  GF2Poly() = default;
  static GF2Poly monomial(std::size_t k);
  static GF2Poly from_bits(const std::string& lsb_first);  // "1101" = 1 + x + x^3

  /// -1 for the zero polynomial.
  long degree() const;
  bool is_zero() const { return words_.empty(); }
  bool coeff(std::size_t k) const;
  void set(std::size_t k, bool value = true);
  void flip(std::size_t k);
  std::size_t weight() const;

  GF2Poly& operator+=(const GF2Poly& o);
  friend GF2Poly operator+(GF2Poly a, const GF2Poly& b) { return a += b; }
  friend GF2Poly operator*(const GF2Poly& a, const GF2Poly& b);
  friend bool operator==(const GF2Poly&, const GF2Poly&) = default;

  /// Order by value of the coefficient bit string read as a binary integer.
  friend bool operator<(const GF2Poly& a, const GF2Poly& b);

  std::string to_bits() const;  // LSB first, length degree + 1 ("0" for zero)
  std::string to_string() const;  // "x^3 + x + 1"
  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void trim();
  std::vector<std::uint64_t> words_;
};

/// Quotient and remainder; throws InvalidArgument on division by zero.
void divmod(const GF2Poly& a, const GF2Poly& b, GF2Poly& q, GF2Poly& r);
GF2Poly operator%(const GF2Poly& a, const GF2Poly& b);
GF2Poly operator/(const GF2Poly& a, const GF2Poly& b);
GF2Poly gcd(GF2Poly a, GF2Poly b);

/// Multiplicative order of 2 mod p. Throws NotOddPrime.
unsigned long ord2(unsigned long p);
bool is_odd_prime(unsigned long p);

struct CyclotomicFactorization {
  unsigned long p;
  unsigned long d;
  std::vector<GF2Poly> factors;                    // f_0 = x + 1, then f_1, ...
  std::vector<std::vector<unsigned long>> cosets;  // cosets[i] indexes factors[i]; cosets[0] = {0}

  std::size_t count() const { return factors.size(); }
  /// g_i = (x^p + 1) / f_i.
  GF2Poly cofactor(std::size_t i) const;
};

/// Deterministic factorization of x^p + 1 over F_2. Nontrivial factors are
/// labeled by fixing a root zeta of the smallest nontrivial factor; f_t has the
/// roots zeta^(t 2^j). Throws NotOddPrime.
CyclotomicFactorization factor_xp_plus_1(unsigned long p);

/// Subspace of F_2^n in reduced row echelon form (bit k = coordinate k + 1).
class GF2Subspace {
 public:
  explicit GF2Subspace(std::size_t n) : n_(n) {}
  static GF2Subspace span(std::size_t n, const std::vector<GF2Poly>& vectors);

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<GF2Poly>& basis() const { return basis_; }
  bool contains(const GF2Poly& v) const;
  /// Adds v; returns false when v was already in the span.
  bool insert(GF2Poly v);
  GF2Poly reduce(GF2Poly v) const;

  friend bool operator==(const GF2Subspace&, const GF2Subspace&) = default;

 private:
  std::size_t n_;
  std::vector<GF2Poly> basis_;  // sorted by leading bit, descending
};

/// Subset S of factor indices as a bitmask (bit i = factor i).
using FactorSubset = std::uint64_t;

/// Span of all cyclic shifts of g_i for i in S.
GF2Subspace cp_stable_subspace(const CyclotomicFactorization& f, FactorSubset s);

/// Every subset S with its subspace, ordered by mask.
std::vector<std::pair<FactorSubset, GF2Subspace>> cp_stable_subspaces(const CyclotomicFactorization& f);

/// D_i: diagonal sign matrix, -1 at j where x^(j-1) occurs in g_i.
IntMatrix diag_generator(const CyclotomicFactorization& f, std::size_t i);
std::vector<IntMatrix> diag_generators(const CyclotomicFactorization& f);

/// v_i: binary vector of the coefficients of g_i.
IntVector binary_vector(const CyclotomicFactorization& f, std::size_t i);

/// Sum of L_i over i in S, L_i = span(cyclic shifts of v_i) + 2Z^p; S = 0 gives 0.
LatticeBasis binary_sublattice(const CyclotomicFactorization& f, FactorSubset s);
std::vector<std::pair<FactorSubset, LatticeBasis>> binary_sublattices(const CyclotomicFactorization& f);

/// The lattice generated by the all-ones vector, with and without 2Z^p.
LatticeBasis ones_lattice(unsigned long p);
LatticeBasis ones_lattice_with_even(unsigned long p);

/// Reduction of a lattice containing 2Z^n modulo 2.
GF2Subspace reduce_mod2(const LatticeBasis& l);

/// Cyclic shift permutation matrix e_j -> e_(j+1 mod p).
IntMatrix cyclic_shift_matrix(std::size_t p);

std::string subset_to_string(FactorSubset s, std::size_t count);

}  // namespace glat
