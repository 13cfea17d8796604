#include <doctest.h>

#include "glat/errors.hpp"
#include "glat/rootsys.hpp"
#include "glat/symrank.hpp"

using namespace glat;

namespace {

struct Setup {
  WeylModel model;
  MatGroup group;
  LatticeBasis weight;
  LatticeBasis root;
};

Setup setup(const char* name) {
  WeylModel m = build(parse_root_system(name));
  MatGroup g = m.group();
  return {m, g, LatticeBasis::full(m.rank()), lattice(m, {LatticeKind::Root}).basis};
}

}  // namespace

TEST_CASE("small searches") {
  const Setup a1 = setup("A1");
  const SymrankResult r = symrank_search(a1.group, a1.root);
  CHECK(r.upper_bound == 2);
  REQUIRE(r.witness.size() == 1);
  CHECK(r.witness[0].size == 2);
  CHECK(r.exactness == Exactness::ExactWithinBound);
  CHECK(r.lower_bound == 1);

  const Setup g2 = setup("G2");
  const SymrankResult rg = symrank_search(g2.group, g2.root, 3);
  CHECK(rg.upper_bound == 6);
  CHECK(rg.witness.size() == 1);

  for (std::size_t n = 1; n <= 4; ++n) {
    const SymrankResult t = symrank_search(trivial_group(n), LatticeBasis::full(n));
    CHECK(t.upper_bound == static_cast<unsigned long>(n));
    CHECK(t.certified());
    CHECK(t.witness.size() == n);
  }

  const Setup a2 = setup("A2");
  CHECK(symrank_search(a2.group, a2.weight).upper_bound == 3);
  CHECK(symrank_search(a2.group, a2.root).upper_bound == 6);
  const Setup b3 = setup("B3");
  CHECK(symrank_search(b3.group, b3.weight).upper_bound == 8);
}

TEST_CASE("search preconditions") {
  const Setup a2 = setup("A2");
  CHECK_THROWS_AS(symrank_search(a2.group, hnf(IntMatrix{{1, 0}})), NotGStable);
  CHECK_THROWS_AS(symrank_search(a2.group, a2.weight, 3, {10, 10}), CapExceeded);
  CHECK(symrank_search(a2.group, LatticeBasis::zero(2)).upper_bound == 0);
}

TEST_CASE("orbit generation") {
  const Setup b3 = setup("B3");
  const OrbitGeneration o = verify_orbit_generates(b3.group, b3.weight, IntVector{0, 0, 1});
  CHECK(o.generates);
  CHECK(o.orbit_size == 8);
  const Setup a2 = setup("A2");
  CHECK_THROWS_AS(verify_orbit_generates(a2.group, a2.root, IntVector{1, 0}), NotAMember);
  const OrbitGeneration w = verify_orbit_generates(a2.group, a2.weight, IntVector{1, 0});
  CHECK(w.generates);
  CHECK(w.orbit_size == 3);
  CHECK_FALSE(verify_orbit_generates(a2.group, a2.weight, IntVector{1, 1}).generates);

  const SymrankResult u = symrank_from_orbit(a2.group, a2.weight, IntVector{1, 0});
  CHECK(u.upper_bound == 3);
  CHECK(u.exactness == Exactness::UpperOnly);
  CHECK_THROWS_AS(symrank_from_orbit(a2.group, a2.weight, IntVector{1, 1}), InvalidArgument);
}

TEST_CASE("witness orbits span and are closed") {
  for (const char* name : {"A3", "B2", "C3", "G2"}) {
    const Setup s = setup(name);
    for (const auto& l : {s.weight, s.root}) {
      const SymrankResult r = symrank_search(s.group, l, 2);
      std::vector<IntVector> all;
      for (const auto& w : r.witness) {
        const Orbit o = orbit(s.group, w.representative);
        CHECK(BigInt(static_cast<unsigned long>(o.size())) == w.size);
        for (const auto& h : s.group.generators())
          for (const auto& x : o.elements) CHECK(std::binary_search(o.elements.begin(), o.elements.end(), h * x));
        all.insert(all.end(), o.elements.begin(), o.elements.end());
      }
      CHECK(hnf(all, l.ambient_dim()) == l);
      CHECK(r.lower_bound <= r.upper_bound);
    }
  }
}

TEST_CASE("radius monotonicity") {
  for (const char* name : {"A2", "B2", "A3", "C3"}) {
    const Setup s = setup(name);
    for (const auto& l : {s.weight, s.root}) {
      BigInt prev = symrank_search(s.group, l, 1).upper_bound;
      for (unsigned long b = 2; b <= 3; ++b) {
        const BigInt cur = symrank_search(s.group, l, b).upper_bound;
        CHECK(cur <= prev);
        prev = cur;
      }
    }
  }
}

TEST_CASE("subgroup search value does not exceed the group value") {
  const Setup b3 = setup("B3");
  const MatGroup k(3, {b3.model.simple_reflections[0], b3.model.simple_reflections[1]});
  for (const auto& l : {b3.weight, b3.root}) {
    CHECK(symrank_search(k, l, 2).upper_bound <= symrank_search(b3.group, l, 2).upper_bound);
  }
  const Setup a3 = setup("A3");
  const MatGroup ka(3, {a3.model.simple_reflections[0], a3.model.simple_reflections[2]});
  CHECK(symrank_search(ka, a3.weight, 2).upper_bound <= symrank_search(a3.group, a3.weight, 2).upper_bound);
}

TEST_CASE("maximum over supplied candidates") {
  const MatGroup pm(1, {IntMatrix{{-1}}});
  const DimensionMaximum one = table_dimension_maximum(1, {{"+-1", pm, LatticeBasis::full(1)}});
  CHECK(one.maximum == 2);
  CHECK(one.tag == "conditional on candidate completeness");

  std::vector<Candidate> two;
  for (const char* name : {"G2", "A2", "B2"}) {
    const Setup s = setup(name);
    two.push_back({std::string(name) + " weight", s.group, s.weight});
    two.push_back({std::string(name) + " root", s.group, s.root});
  }
  const DimensionMaximum m2 = table_dimension_maximum(2, two);
  CHECK(m2.maximum == 6);
  CHECK(m2.results.size() == 6);

  const Setup e6 = setup("E6");
  const DimensionMaximum m6 = table_dimension_maximum(6, {{"E6 root", e6.group, e6.root}}, 1);
  CHECK(m6.maximum == 72);
  CHECK_THROWS_AS(table_dimension_maximum(3, two), DimensionMismatch);
}
