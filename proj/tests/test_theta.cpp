#include <doctest.h>

#include <filesystem>
#include <functional>
#include <random>

#include "glat/json_io.hpp"
#include "glat/rootsys.hpp"
#include "glat/theta.hpp"

using namespace glat;

namespace {

// All v in [-r, r]^n with v^T X v <= bound, in lexicographic order.
std::vector<std::pair<IntVector, BigInt>> box_brute_force(const IntMatrix& x, long r, long bound) {
  const std::size_t n = x.rows();
  std::vector<std::pair<IntVector, BigInt>> out;
  IntVector v(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      BigInt q = 0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) q += v[a] * x(a, b) * v[b];
      if (q <= bound) out.emplace_back(v, q);
      return;
    }
    for (long c = -r; c <= r; ++c) {
      v[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

IntMatrix random_positive_definite(std::mt19937& rng, std::size_t n) {
  // B^T B + I for a small random B.
  std::uniform_int_distribution<int> d(-2, 2);
  IntMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = d(rng);
  return b.transpose() * b + IntMatrix::identity(n);
}

}  // namespace

TEST_CASE("forms are validated exactly") {
  CHECK_THROWS_AS(GramForm(IntMatrix{{1, 0}, {0, 0}}), NotPositiveDefinite);
  CHECK_THROWS_AS(GramForm(IntMatrix{{1, 2}, {0, 1}}), NotPositiveDefinite);
  CHECK_THROWS_AS(GramForm(IntMatrix{{1, 2}, {2, 1}}), NotPositiveDefinite);
  CHECK_NOTHROW(GramForm(IntMatrix{{2, -1}, {-1, 2}}));
}

TEST_CASE("short vectors of small forms") {
  const auto i2 = short_vectors(GramForm(IntMatrix::identity(2)), 1);
  CHECK(i2.size() == 5);
  const auto a2 = short_vectors(GramForm(IntMatrix{{2, -1}, {-1, 2}}), 2);
  CHECK(std::count_if(a2.begin(), a2.end(), [](const ShortVector& s) { return s.norm == 2; }) == 6);
  const auto zero = short_vectors(GramForm(IntMatrix{{3, 1}, {1, 5}}), 0);
  CHECK(zero.size() == 1);
  CHECK(zero[0].vector.is_zero());
}

TEST_CASE("short vectors agree with box brute force") {
  // Every vector of norm <= b has |v_i| <= b when X - I is positive semidefinite,
  // which holds for B^T B + I, so the box [-b, b]^n is exhaustive.
  std::mt19937 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const IntMatrix x = random_positive_definite(rng, n);
    const long bound = 1 + trial % 6;
    const auto expected = box_brute_force(x, bound, bound);
    const auto got = short_vectors(GramForm(x), bound);
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
      CHECK(got[i].vector == expected[i].first);
      CHECK(got[i].norm == expected[i].second);
    }
    const auto serial = short_vectors_serial(GramForm(x), bound);
    CHECK(serial.size() == got.size());
    for (std::size_t i = 0; i < got.size(); ++i) CHECK(serial[i].vector == got[i].vector);
  }
}

TEST_CASE("theta prefixes") {
  CHECK(theta_prefix(GramForm(IntMatrix::identity(3)), 2) == std::vector<BigInt>{1, 6, 12});
  CHECK(theta_prefix(GramForm(IntMatrix{{1}}), 4) == std::vector<BigInt>{1, 2, 0, 0, 2});
  CHECK(theta_prefix(GramForm(IntMatrix{{2, -1}, {-1, 2}}), 2) == std::vector<BigInt>{1, 0, 6});
  for (std::size_t n = 1; n <= 10; ++n) CHECK(theta_prefix(GramForm(IntMatrix::identity(n)), 1)[1] == 2 * n);
  const auto e8 = theta_prefix(GramForm(root_gram(build(parse_root_system("E8")))), 4);
  CHECK(e8 == std::vector<BigInt>{1, 0, 240, 0, 2160});
  const auto t = theta_prefix(GramForm(IntMatrix{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}}), 8);
  CHECK(t[0] == 1);
  for (std::size_t i = 1; i < t.size(); ++i) CHECK(t[i] % 2 == 0);
}

TEST_CASE("diagonal bound") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(diagonal_bound(GramForm(IntMatrix::identity(n))).bound == 2 * n);
  CHECK(diagonal_bound(GramForm(IntMatrix{{2, -1}, {-1, 2}})).bound == 6);
  const auto d = diagonal_bound(GramForm(IntMatrix{{1, 0}, {0, 3}}));
  CHECK(d.norms == std::vector<BigInt>{1, 3});
  CHECK(d.bound == 4);
}

TEST_CASE("diagonal witness sets span and are stable under form automorphisms") {
  for (const char* name : {"A2", "B3", "G2", "F4", "D4"}) {
    const WeylModel m = build(parse_root_system(name));
    const GramForm f(root_gram(m));
    const DiagonalBound d = diagonal_bound(f);
    CHECK(hnf(d.witness, f.dim()) == LatticeBasis::full(f.dim()));
    for (std::size_t i = 0; i < f.dim(); ++i)
      CHECK(std::find(d.witness.begin(), d.witness.end(), IntVector::unit(f.dim(), i)) != d.witness.end());
    std::vector<IntVector> sorted = d.witness;
    std::sort(sorted.begin(), sorted.end());
    const MatGroup g = root_coordinate_group(m);
    for (const auto& h : g.generators())
      for (const auto& w : d.witness) CHECK(std::binary_search(sorted.begin(), sorted.end(), h * w));
  }
}

TEST_CASE("orbits inside a norm class") {
  const NormClassOrbit t = orbit_within_norm_class(MatGroup(2, {IntMatrix{{-1, 0}, {0, -1}}}),
                                                   GramForm(IntMatrix::identity(2)), IntVector{1, 0});
  CHECK(t.orbit.size() == 2);
  CHECK(t.norm == 1);
  CHECK(t.span_rank == 1);

  const WeylModel a2 = build(parse_root_system("A2"));
  const NormClassOrbit r = orbit_within_norm_class(root_coordinate_group(a2), GramForm(root_gram(a2)), IntVector{1, 0});
  CHECK(r.orbit.size() == 6);
  CHECK(r.norms_equal);
  CHECK(r.spans_full);

  const NormClassOrbit z = orbit_within_norm_class(root_coordinate_group(a2), GramForm(root_gram(a2)), IntVector{0, 0});
  CHECK(z.orbit.size() == 1);
  CHECK(z.span_rank == 0);

  CHECK_THROWS_AS(orbit_within_norm_class(root_coordinate_group(a2), GramForm(IntMatrix::identity(2)), IntVector{1, 0}),
                  FormNotPreserved);
}

TEST_CASE("cap is honored") {
  CHECK_THROWS_AS(short_vectors(GramForm(IntMatrix::identity(4)), 9, 50), CapExceeded);
}

TEST_CASE("optional external dimension-23 form") {
  const char* env = std::getenv("SYMRANK_DATA_DIR");
  const std::filesystem::path dir = env ? env : GLAT_TEST_DATA_DIR;
  const auto path = dir / "imf_23_3_2.json";
  if (!std::filesystem::exists(path)) {
    MESSAGE("SKIP: " << path.string() << " not present; the 93150-vector check needs externally exported data");
    return;
  }
  const GroupFile gf = group_from_json(read_json_file(path));
  REQUIRE(gf.gram.has_value());
  const GramForm f(*gf.gram);
  const auto sv = short_vectors(f, 3);
  const auto minimal = std::count_if(sv.begin(), sv.end(), [](const ShortVector& s) { return s.norm == 3; });
  CHECK(minimal == 93150);
  const auto first = std::find_if(sv.begin(), sv.end(), [](const ShortVector& s) { return s.norm == 3; });
  const NormClassOrbit o = orbit_within_norm_class(gf.group, f, first->vector);
  CHECK(o.spans_full);
  CHECK(o.orbit.size() <= 93150);
}
