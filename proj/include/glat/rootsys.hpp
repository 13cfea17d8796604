#pragma once

#include <string>
#include <vector>

#include "glat/int_matrix.hpp"
#include "glat/lattice.hpp"
#include "glat/matgroup.hpp"

namespace glat {

enum class Family { A, B, C, D, E, F, G };

struct RootSystemSpec {
  Family family;
  int rank;

  std::string name() const;  // e.g. "E_6"
  friend bool operator==(const RootSystemSpec&, const RootSystemSpec&) = default;
};

/// Accepts "A3", "A_3", "e6". Throws InvalidRank / InvalidArgument.
RootSystemSpec parse_root_system(const std::string& text);
void validate(const RootSystemSpec& spec);
char family_letter(Family f);

/// Cartan matrix with C_ij = <alpha_i, alpha_j^vee>; row i is alpha_i in the
/// fundamental-weight basis. Bourbaki node numbering.
IntMatrix cartan_matrix(const RootSystemSpec& spec);

BigInt weyl_group_order(const RootSystemSpec& spec);

/// Weyl group acting on fundamental-weight coordinates.
struct WeylModel {
  RootSystemSpec spec;
  IntMatrix cartan;
  std::vector<IntMatrix> simple_reflections;
  BigInt weyl_order;

  std::size_t rank() const { return static_cast<std::size_t>(spec.rank); }
  IntVector simple_root(std::size_t i) const { return cartan.row(i); }
  IntVector fundamental_weight(std::size_t i) const { return IntVector::unit(rank(), i); }
  MatGroup group() const;
};

/// Builds the model and checks involutions and braid relations. Throws InvalidRank.
WeylModel build(const RootSystemSpec& spec);

enum class LatticeKind { Weight, Root, Intermediate, IntermediateDPenultimate, IntermediateDLast };

struct LatticeKindSpec {
  LatticeKind kind;
  int d = 0;  // index parameter for Intermediate

  std::string name() const;  // "weight", "root", "intermediate(3)", "intermediate_D(n-1)", ...
  friend bool operator==(const LatticeKindSpec&, const LatticeKindSpec&) = default;
};

LatticeKindSpec parse_lattice_kind(const std::string& text);

struct NamedLattice {
  LatticeKindSpec kind;
  LatticeBasis basis;       // weight coordinates
  IntVector generator_hint;
  std::string generator_name;  // "lambda_1", "alpha_n", ...
};

/// Kinds valid for the family/rank, in canonical table order.
std::vector<LatticeKindSpec> available_kinds(const RootSystemSpec& spec);

/// Throws KindUnavailable.
NamedLattice lattice(const WeylModel& model, const LatticeKindSpec& kind);

/// W-translate of v with all coordinates >= 0, by simple reflections.
IntVector dominant_representative(const WeylModel& model, const IntVector& v);

/// Order of the parabolic subgroup on {i : v_i = 0} for dominant v.
BigInt parabolic_order(const WeylModel& model, const IntVector& dominant);

/// |W v| = |W| / |Stab(v)|, from the dominant representative.
BigInt weyl_orbit_size(const WeylModel& model, const IntVector& v);

/// Relative squared root lengths of simple roots (shortest = 1).
std::vector<int> simple_root_lengths(const WeylModel& model);

/// Number of short roots (all roots when simply laced).
BigInt short_root_count(const WeylModel& model);

/// Weyl group acting on simple-root coordinates, and the invariant Gram
/// matrix (alpha_i, alpha_j) normalized so short roots have norm 2.
MatGroup root_coordinate_group(const WeylModel& model);
IntMatrix root_gram(const WeylModel& model);

/// Membership in the root lattice by solving C^T w = v through the Smith form.
bool root_lattice_member_via_smith(const WeylModel& model, const IntVector& v);

struct SymrankTableRow {
  RootSystemSpec spec;
  LatticeKindSpec kind;
  std::string generator;
  BigInt symrank;          // orbit size of the generator
  bool span_matches;       // orbit span equals the named lattice
  std::string method;      // "orbit" or "stabilizer"
  BigInt formula_check;    // orbit size from the stabilizer formula
};

/// All rows with rank <= max_rank, plus B_n / D_n rows up to bd_max_rank.
/// Rows up to enumeration_max_rank enumerate orbits explicitly; larger rows use
/// the stabilizer formula and an iterated stable span.
std::vector<SymrankTableRow> root_system_symrank_table(int max_rank, int bd_max_rank = 0,
                                                       int enumeration_max_rank = 8);

struct RdimBound {
  int n;
  BigInt value;
  RootSystemSpec witness_system;
  LatticeKindSpec witness_lattice;
};

RdimBound rdim_lower_bound(int n);

}  // namespace glat
