#include <doctest.h>

#include <random>

#include "glat/errors.hpp"
#include "glat/monomial.hpp"

using namespace glat;

namespace {

MonomialElement random_element(std::mt19937& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t j = 0; j < n; ++j) perm[j] = j;
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<int> signs(n);
  for (auto& s : signs) s = rng() % 2 ? 1 : -1;
  return MonomialElement(signs, perm);
}

// Kernel of the projection by filtering the explicit closure.
GF2Subspace diagonal_part_by_closure(const MonomialGroup& g) {
  GF2Subspace out(g.dim());
  for (const auto& e : g.elements()) {
    if (!e.is_diagonal()) continue;
    GF2Poly bits;
    for (std::size_t j = 0; j < g.dim(); ++j)
      if (e.signs()[j] == -1) bits.set(j);
    out.insert(bits);
  }
  return out;
}

MonomialGroup cycle_with_diagonals(unsigned long p, const std::vector<IntMatrix>& diags) {
  std::vector<MonomialElement> gens{MonomialElement::cycle(p)};
  for (const auto& d : diags) gens.push_back(MonomialElement::from_matrix(d));
  return MonomialGroup(p, gens);
}

}  // namespace

TEST_CASE("structural composition matches matrix multiplication") {
  std::mt19937 rng(5);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + rng() % 9;
    const auto g = random_element(rng, n);
    const auto h = random_element(rng, n);
    CHECK((g * h).matrix() == g.matrix() * h.matrix());
    CHECK(MonomialElement::from_matrix(g.matrix()) == g);
    CHECK((g * g.inverse()) == MonomialElement::identity(n));
    IntVector v(n);
    for (std::size_t j = 0; j < n; ++j) v[j] = static_cast<long>(rng() % 7) - 3;
    CHECK(g.apply(v) == g.matrix() * v);
  }
  CHECK_THROWS_AS(MonomialElement::from_matrix(IntMatrix{{1, 1}, {0, 1}}), InvalidArgument);
  CHECK_THROWS_AS(MonomialElement({1, 1}, {0, 0}), InvalidArgument);
}

TEST_CASE("permutation image") {
  const auto full = project_pi(MonomialGroup::full(3));
  CHECK(full.order == 6);
  CHECK(full.has_n_cycle);
  const MonomialGroup diag(4, {MonomialElement::sign_flip(4, 0), MonomialElement::sign_flip(4, 2)});
  CHECK(project_pi(diag).order == 1);
  CHECK_FALSE(project_pi(diag).has_n_cycle);
  const MonomialGroup c5(5, {MonomialElement::cycle(5), MonomialElement::minus_identity(5)});
  CHECK(project_pi(c5).order == 5);
  CHECK(project_pi(c5).has_n_cycle);
  CHECK(c5.contains_minus_identity());
  CHECK(MonomialGroup::full(4).elements().size() == 384);
}

TEST_CASE("diagonal part of groups containing an n-cycle") {
  std::vector<MonomialElement> gens{MonomialElement::cycle(7)};
  for (std::size_t i = 0; i < 7; ++i) gens.push_back(MonomialElement::sign_flip(7, i));
  CHECK(o2_diagonal_part(MonomialGroup(7, gens)).dim() == 7);

  const MonomialGroup pm(7, {MonomialElement::cycle(7), MonomialElement::minus_identity(7)});
  const GF2Subspace v1 = o2_diagonal_part(pm);
  CHECK(v1.dim() == 1);
  CHECK(v1.contains(GF2Poly::from_bits("1111111")));

  const auto f = factor_xp_plus_1(7);
  for (FactorSubset s = 0; s < 8; ++s) {
    std::vector<IntMatrix> diags;
    for (std::size_t i = 0; i < 3; ++i)
      if ((s >> i) & 1U) diags.push_back(diag_generator(f, i));
    const MonomialGroup g = cycle_with_diagonals(7, diags);
    CHECK(o2_diagonal_part(g) == cp_stable_subspace(f, s));
    CHECK(o2_diagonal_part(g) == diagonal_part_by_closure(g));
  }
  CHECK(o2_diagonal_part(cycle_with_diagonals(7, {diag_generator(f, 1)})).dim() == 3);

  CHECK_THROWS_AS(o2_diagonal_part(MonomialGroup::full(4)), HypothesisNotMet);
  CHECK_THROWS_AS(o2_diagonal_part(MonomialGroup(5, {MonomialElement::transposition(5, 0, 1)})), HypothesisNotMet);
}

TEST_CASE("support reduction") {
  const IntVector le = support_reduce(even_sum_lattice(7));
  CHECK(le.is_binary());
  CHECK(le.support_size() <= 4);
  CHECK(support_reduce(LatticeBasis::full(7)).support_size() == 1);
  CHECK_THROWS_AS(support_reduce(ones_lattice_with_even(7)), HypothesisNotMet);
  CHECK_THROWS_AS(support_reduce(LatticeBasis::zero(7)), HypothesisNotMet);
  CHECK_THROWS_AS(support_reduce(ones_lattice(7)), HypothesisNotMet);

  for (unsigned long p : {3UL, 5UL, 7UL, 11UL, 13UL}) {
    const auto f = factor_xp_plus_1(p);
    for (const auto& [s, l] : binary_sublattices(f)) {
      if (s == 0 || s == 1) continue;
      const IntVector v = support_reduce(l);
      CHECK(v.is_binary());
      CHECK(member(v, l));
      CHECK(v.support_size() <= 2 * p / 3);
    }
  }
}

TEST_CASE("binary orbit sizes under the full monomial group") {
  for (unsigned long p : {3UL, 5UL, 7UL}) {
    const MonomialGroup mon = MonomialGroup::full(p);
    BigInt fact;
    mpz_fac_ui(fact.get_mpz_t(), p);
    for (unsigned long mask = 1; mask < (1UL << p); ++mask) {
      std::vector<long> lv(p);
      IntVector v(p);
      for (std::size_t j = 0; j < p; ++j) {
        lv[j] = (mask >> j) & 1U;
        v[j] = lv[j];
      }
      const BigInt exact(static_cast<unsigned long>(monomial_orbit(mon, lv).size()));
      CHECK(exact == full_monomial_orbit_size(v));
      CHECK(monomial_orbit_bound(v, fact) >= exact);
    }
  }
  CHECK_THROWS_AS(monomial_orbit_bound(IntVector{2, 0}, 2), InvalidArgument);
  CHECK(full_monomial_orbit_size(IntVector{1, 1, 0, 0, 0, 0, 0}) == 84);
  CHECK(full_monomial_orbit_size(IntVector{2, -1, 1}) == 24);
}

TEST_CASE("three generating orbits") {
  const auto r7 = three_lattice_check(7);
  REQUIRE(r7.rows.size() == 3);
  CHECK(r7.rows[0].orbit_size == 14);
  CHECK(r7.rows[1].orbit_size == 84);
  CHECK(r7.rows[2].orbit_size == 128);
  for (const auto& row : r7.rows) {
    CHECK(row.spans);
    REQUIRE(row.bfs_orbit_size);
    CHECK(*row.bfs_orbit_size == row.orbit_size);
  }
  CHECK(r7.pair_inequality);
  CHECK(r7.all_within_bound);
  CHECK(r7.hypothesis == "verified");

  const auto r11 = three_lattice_check(11);
  CHECK(r11.rows[0].orbit_size == 22);
  CHECK(r11.rows[1].orbit_size == 220);
  CHECK(r11.rows[2].orbit_size == 2048);

  CHECK_FALSE(three_lattice_check(5).pair_inequality);
  CHECK(three_lattice_check(7, PermutationImageKind::Cyclic).hypothesis == "hypothesis unverified");
  CHECK(three_lattice_check(11, PermutationImageKind::Cyclic).hypothesis == "verified");
  CHECK_THROWS_AS(three_lattice_check(9), NotOddPrime);
}

TEST_CASE("subset classification") {
  const auto rows = classify_subsets(7);
  CHECK(rows.size() == 8);
  for (const auto& row : rows) {
    if (row.name == "0") CHECK(row.subspace.dim() == 0);
    if (row.name == "V_1 / L_1") {
      CHECK(row.subspace == GF2Subspace::span(7, {GF2Poly::from_bits("1111111")}));
      CHECK(row.sublattice == ones_lattice_with_even(7));
    }
    if (row.name == "V_E / L_E") {
      CHECK(row.subspace.dim() == 6);
      for (const auto& b : row.subspace.basis()) CHECK(b.weight() % 2 == 0);
      CHECK(row.sublattice == even_sum_lattice(7));
    }
    if (row.name == "F_2^p / Z^p") CHECK(row.sublattice == LatticeBasis::full(7));
    CHECK(row.diagonal_group_order == BigInt(1) << static_cast<unsigned>(row.subspace.dim()));
  }
  CHECK(classify_subsets(3)[2].sublattice == even_sum_lattice(3));
}
