#include "glat/symrank.hpp"

#include <algorithm>
#include <unordered_set>

namespace glat {

namespace {

void require_stable(const MatGroup& g, const LatticeBasis& l) {
  if (g.dim() != l.ambient_dim()) throw DimensionMismatch("group and lattice dimensions differ");
  if (!is_stable(g, l)) throw NotGStable("a generator moves the lattice");
}

struct OrbitEntry {
  IntVector representative;
  BigInt size;
  BigInt euclidean_norm;
  LatticeBasis span;
};

BigInt as_big(std::size_t x) { return BigInt(static_cast<unsigned long>(x)); }

class BranchAndBound {
 public:
  BranchAndBound(const std::vector<OrbitEntry>& orbits, const LatticeBasis& target, std::size_t node_cap)
      : orbits_(orbits), target_(target), node_cap_(node_cap) {}

  void run() {
    std::vector<std::size_t> chosen;
    dfs(0, LatticeBasis::zero(target_.ambient_dim()), BigInt(0), chosen);
  }

  const std::optional<BigInt>& best() const { return best_; }
  const std::vector<std::size_t>& best_set() const { return best_set_; }

 private:
  void dfs(std::size_t start, const LatticeBasis& span, const BigInt& total, std::vector<std::size_t>& chosen) {
    if (++nodes_ > node_cap_) throw CapExceeded("branch-and-bound nodes", node_cap_);
    for (std::size_t i = start; i < orbits_.size(); ++i) {
      const BigInt next_total = total + orbits_[i].size;
      if (best_ && next_total >= *best_) break;
      // Each orbit raises the rank by at most its own span rank.
      const std::size_t reach = span.rank() + orbits_[i].span.rank();
      if (best_ && reach < target_.rank()) {
        BigInt more = as_big(target_.rank() - reach);
        if (i + 1 < orbits_.size() && orbits_[i + 1].size > more) more = orbits_[i + 1].size;
        if (next_total + more >= *best_) continue;
      }
      if (contains(span, orbits_[i].span)) continue;
      const LatticeBasis grown = lattice_sum(span, orbits_[i].span);
      chosen.push_back(i);
      if (grown == target_) {
        best_ = next_total;
        best_set_ = chosen;
      } else if (i + 1 < orbits_.size()) {
        BigInt more = std::max(as_big(target_.rank() - grown.rank()), BigInt(1));
        if (orbits_[i + 1].size > more) more = orbits_[i + 1].size;
        if (!best_ || next_total + more < *best_) dfs(i + 1, grown, next_total, chosen);
      }
      chosen.pop_back();
    }
  }

  const std::vector<OrbitEntry>& orbits_;
  const LatticeBasis& target_;
  std::size_t node_cap_;
  std::size_t nodes_ = 0;
  std::optional<BigInt> best_;
  std::vector<std::size_t> best_set_;
};

std::optional<BigInt> known_group_bound(const MatGroup& g, const LatticeBasis& l) {
  std::optional<BigInt> order = g.known_order();
  if (!order && g.has_elements()) order = BigInt(static_cast<unsigned long>(g.elements().size()));
  if (!order) return std::nullopt;
  return *order * BigInt(static_cast<unsigned long>(l.rank()));
}

}  // namespace

std::string to_string(Exactness e) { return e == Exactness::ExactWithinBound ? "exact_within_bound" : "upper_only"; }

SymrankResult symrank_search(const MatGroup& g, const LatticeBasis& l, unsigned long radius, const SearchCaps& caps) {
  require_stable(g, l);
  const std::size_t n = l.ambient_dim();
  const std::size_t r = l.rank();
  SymrankResult out{0, {}, BigInt(static_cast<unsigned long>(r)), Exactness::ExactWithinBound, radius,
                    known_group_bound(g, l), 0};
  if (r == 0) return out;

  // Orbits of every nonzero box point, each recorded once.
  std::vector<Orbit> orbits;
  std::unordered_set<IntVector, IntVectorHash> seen;
  std::size_t budget = 0;
  std::vector<long> c(r, -static_cast<long>(radius));
  const std::vector<IntVector> basis = l.basis().row_vectors();
  while (true) {
    IntVector v(n);
    for (std::size_t i = 0; i < r; ++i)
      if (c[i] != 0) v += BigInt(c[i]) * basis[i];
    if (++budget > caps.vectors) throw CapExceeded("coefficient box enumeration", caps.vectors);
    if (!v.is_zero() && !seen.count(v)) {
      Orbit o = orbit(g, v, caps.vectors);
      budget += o.size();
      if (budget > caps.vectors) throw CapExceeded("coefficient box enumeration", caps.vectors);
      for (const auto& w : o.elements) seen.insert(w);
      orbits.push_back(std::move(o));
    }
    std::size_t k = 0;
    while (k < r && c[k] == static_cast<long>(radius)) c[k++] = -static_cast<long>(radius);
    if (k == r) break;
    ++c[k];
  }

  std::vector<OrbitEntry> entries(orbits.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    BigInt nrm = 0;
    for (const auto& x : orbits[i].representative.entries()) nrm += x * x;
    entries[i] = {orbits[i].representative, as_big(orbits[i].size()), nrm,
                  stable_span(g, hnf(std::vector<IntVector>{orbits[i].representative}, n))};
  }
  // Short vectors first, so the first descent already finds a good incumbent.
  std::sort(entries.begin(), entries.end(), [](const OrbitEntry& a, const OrbitEntry& b) {
    if (a.size != b.size) return a.size < b.size;
    if (a.euclidean_norm != b.euclidean_norm) return a.euclidean_norm < b.euclidean_norm;
    return a.representative < b.representative;
  });
  out.orbits_considered = entries.size();

  BranchAndBound bb(entries, l, caps.nodes);
  bb.run();
  if (!bb.best()) throw Error("no generating orbit set inside the search box");
  out.upper_bound = *bb.best();
  for (auto i : bb.best_set()) out.witness.push_back({entries[i].representative, entries[i].size});

  // Re-verify the witness independently of the search state.
  std::vector<IntVector> all;
  for (const auto& w : out.witness)
    for (const auto& x : orbit(g, w.representative, caps.vectors).elements) all.push_back(x);
  if (!(hnf(all, n) == l)) throw Error("witness orbits do not span the lattice");
  return out;
}

OrbitGeneration verify_orbit_generates(const MatGroup& g, const LatticeBasis& l, const IntVector& v, std::size_t cap) {
  if (v.dim() != l.ambient_dim() || !member(v, l)) throw NotAMember("vector is not in the lattice");
  const Orbit o = orbit(g, v, cap);
  return {hnf(o.elements, l.ambient_dim()) == l, BigInt(static_cast<unsigned long>(o.size()))};
}

SymrankResult symrank_from_orbit(const MatGroup& g, const LatticeBasis& l, const IntVector& v, std::size_t cap) {
  require_stable(g, l);
  const OrbitGeneration gen = verify_orbit_generates(g, l, v, cap);
  if (!gen.generates) throw InvalidArgument("the orbit does not span the lattice");
  const Orbit o = orbit(g, v, cap);
  return {gen.orbit_size, {{o.representative, gen.orbit_size}}, BigInt(static_cast<unsigned long>(l.rank())),
          Exactness::UpperOnly, 0, known_group_bound(g, l), 1};
}

DimensionMaximum table_dimension_maximum(std::size_t n, const std::vector<Candidate>& candidates, unsigned long radius,
                                         const SearchCaps& caps) {
  DimensionMaximum out{{}, 0};
  for (const auto& c : candidates)
    if (c.group.dim() != n) throw DimensionMismatch("candidate " + c.label + " is not in dimension " + std::to_string(n));
  for (const auto& c : candidates) {
    SymrankResult r = symrank_search(c.group, c.lattice, radius, caps);
    if (r.upper_bound > out.maximum) out.maximum = r.upper_bound;
    out.results.emplace_back(c.label, std::move(r));
  }
  return out;
}

}  // namespace glat
