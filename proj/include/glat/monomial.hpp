#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "glat/errors.hpp"
#include "glat/gf2cyclo.hpp"
#include "glat/int_matrix.hpp"
#include "glat/lattice.hpp"
#include "glat/matgroup.hpp"

namespace glat {

/// Signed permutation g = D P acting by (g v)[perm[j]] = signs[perm[j]] * v[j].
class MonomialElement {
 public:
  MonomialElement(std::vector<int> signs, std::vector<std::size_t> perm);
  static MonomialElement identity(std::size_t n);
  static MonomialElement minus_identity(std::size_t n);
  static MonomialElement sign_flip(std::size_t n, std::size_t i);
  static MonomialElement from_signs(std::vector<int> signs);
  static MonomialElement from_perm(std::vector<std::size_t> perm);
  /// e_j -> e_(j+1 mod n).
  static MonomialElement cycle(std::size_t n);
  static MonomialElement transposition(std::size_t n, std::size_t i, std::size_t j);
  /// Throws InvalidArgument when m is not a signed permutation matrix.
  static MonomialElement from_matrix(const IntMatrix& m);

  std::size_t dim() const { return perm_.size(); }
  const std::vector<int>& signs() const { return signs_; }
  const std::vector<std::size_t>& perm() const { return perm_; }
  bool is_diagonal() const;

  IntMatrix matrix() const;
  IntVector apply(const IntVector& v) const;
  std::vector<long> apply(const std::vector<long>& v) const;
  MonomialElement inverse() const;

  friend MonomialElement operator*(const MonomialElement& g, const MonomialElement& h);
  friend bool operator==(const MonomialElement&, const MonomialElement&) = default;
  friend auto operator<=>(const MonomialElement&, const MonomialElement&) = default;

 private:
  std::vector<int> signs_;
  std::vector<std::size_t> perm_;
};

struct MonomialElementHash {
  std::size_t operator()(const MonomialElement& g) const;
};

class MonomialGroup {
 public:
  MonomialGroup(std::size_t n, std::vector<MonomialElement> generators);
  /// Mon_n(Z) = D_n(Z) x| S_n.
  static MonomialGroup full(std::size_t n);

  std::size_t dim() const { return n_; }
  const std::vector<MonomialElement>& generators() const { return gens_; }
  MatGroup as_matgroup() const;

  /// Explicit element list by BFS. Throws CapExceeded.
  std::vector<MonomialElement> elements(std::size_t cap = kDefaultCap) const;
  bool contains_minus_identity(std::size_t cap = kDefaultCap) const;

 private:
  std::size_t n_;
  std::vector<MonomialElement> gens_;
};

struct PermutationImage {
  std::vector<std::vector<std::size_t>> generators;
  BigInt order;
  bool has_n_cycle;
};

/// The image of g in S_n, closed explicitly. Throws CapExceeded.
PermutationImage project_pi(const MonomialGroup& g, std::size_t cap = kDefaultCap);

/// Sign patterns of G intersected with D_n, as a subspace of F_2^n (bit j set
/// when coordinate j is negated). Needs n odd and an n-cycle in the image;
/// throws HypothesisNotMet otherwise.
GF2Subspace o2_diagonal_part(const MonomialGroup& g, std::size_t cap = kDefaultCap);

/// Binary vector of l with support at most floor(2n/3), built by adding two
/// binary members and clearing the 2s. Throws HypothesisNotMet when l is not
/// a primitive lattice containing 2Z^n and stable under the cyclic shift, or
/// when l is 0 or Z1 + 2Z^n.
IntVector support_reduce(const LatticeBasis& l);

/// 2^|supp v| times pi_order. v must be binary.
BigInt monomial_orbit_bound(const IntVector& v, const BigInt& pi_order);

/// |Mon_n(Z) v| by counting arrangements of absolute values and signs.
BigInt full_monomial_orbit_size(const IntVector& v);

/// Explicit orbit under the structural action, sorted. Throws CapExceeded.
std::vector<std::vector<long>> monomial_orbit(const MonomialGroup& g, const std::vector<long>& v,
                                              std::size_t cap = kDefaultCap);

/// The even-coordinate-sum lattice L_E.
LatticeBasis even_sum_lattice(std::size_t n);

struct GeneratingOrbitRow {
  std::string lattice;  // "Z^p", "L_E", "L_1"
  IntVector witness;
  BigInt orbit_size;                   // by formula
  std::optional<BigInt> bfs_orbit_size;  // explicit BFS when small
  bool spans;
  bool within_power_bound;  // orbit_size <= 2^p
};

enum class PermutationImageKind { Alternating, Symmetric, Cyclic, Other };

struct ThreeLatticeReport {
  unsigned long p;
  std::vector<GeneratingOrbitRow> rows;
  bool pair_inequality;  // 2p(p-1) < 2^p
  bool all_within_bound;
  std::string hypothesis;  // "verified" or "hypothesis unverified"
};

/// Generating orbits of Z^p, L_E and L_1 under Mon_p(Z). BFS sizes are
/// computed up to bfs_max_p. Throws NotOddPrime.
ThreeLatticeReport three_lattice_check(unsigned long p,
                                       PermutationImageKind image = PermutationImageKind::Symmetric,
                                       unsigned long bfs_max_p = 13);

/// Whether the four subspaces 0, V_1, V_E, F_2^p are all the image-stable ones,
/// as far as can be decided from the image kind.
bool four_subspace_hypothesis(unsigned long p, PermutationImageKind image);

struct SubsetClassRow {
  FactorSubset subset;
  GF2Subspace subspace;
  BigInt diagonal_group_order;  // 2^dim
  LatticeBasis sublattice;
  std::optional<BigInt> index;  // in Z^p
  std::string name;             // "0", "V_1 / L_1", "V_E / L_E", "full", or ""
};

/// Subsets of factor indices with their subspace, diagonal group and sublattice.
std::vector<SubsetClassRow> classify_subsets(unsigned long p);

}  // namespace glat
