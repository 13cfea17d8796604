#pragma once

#include <optional>
#include <string>
#include <vector>

#include "glat/errors.hpp"
#include "glat/lattice.hpp"
#include "glat/matgroup.hpp"

namespace glat {

enum class Exactness { ExactWithinBound, UpperOnly };
std::string to_string(Exactness e);

struct WitnessOrbit {
  IntVector representative;  // smallest orbit element
  BigInt size;
};

struct SymrankResult {
  BigInt upper_bound;
  std::vector<WitnessOrbit> witness;
  BigInt lower_bound;  // rank(l)
  Exactness exactness;
  unsigned long search_radius;
  std::optional<BigInt> group_bound;  // |G| * rank(l) when |G| is known
  std::size_t orbits_considered = 0;
  bool certified() const { return upper_bound == lower_bound; }
};

struct SearchCaps {
  std::size_t vectors = kDefaultCap;  // box points plus orbit elements
  std::size_t nodes = kDefaultCap;    // branch-and-bound nodes
};

/// Smallest G-stable generating set of l made of G-orbits of vectors whose
/// coordinates in the basis of l lie in [-radius, radius].
/// Throws NotGStable, CapExceeded.
SymrankResult symrank_search(const MatGroup& g, const LatticeBasis& l, unsigned long radius = 3,
                             const SearchCaps& caps = {});

/// Upper bound from a single orbit, labelled UpperOnly.
/// Throws NotAMember, NotGStable, and InvalidArgument when the orbit does not span l.
SymrankResult symrank_from_orbit(const MatGroup& g, const LatticeBasis& l, const IntVector& v,
                                 std::size_t cap = kDefaultCap);

struct OrbitGeneration {
  bool generates;
  BigInt orbit_size;
};

/// Whether G v spans l. Throws NotAMember when v is not in l.
OrbitGeneration verify_orbit_generates(const MatGroup& g, const LatticeBasis& l, const IntVector& v,
                                       std::size_t cap = kDefaultCap);

struct Candidate {
  std::string label;
  MatGroup group;
  LatticeBasis lattice;
};

struct DimensionMaximum {
  std::vector<std::pair<std::string, SymrankResult>> results;
  BigInt maximum;
  std::string tag = "conditional on candidate completeness";
};

/// Maximum search value over caller-supplied representatives of one dimension.
/// Throws DimensionMismatch when a candidate lives in another dimension.
DimensionMaximum table_dimension_maximum(std::size_t n, const std::vector<Candidate>& candidates,
                                         unsigned long radius = 3, const SearchCaps& caps = {});

}  // namespace glat
