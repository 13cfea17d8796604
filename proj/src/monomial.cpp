#include "glat/monomial.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace glat {

namespace {

struct PermHash {
  std::size_t operator()(const std::vector<std::size_t>& p) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : p) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

struct LongVecHash {
  std::size_t operator()(const std::vector<long>& v) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

std::vector<std::size_t> compose(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> out(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) out[j] = a[b[j]];
  return out;
}

bool is_full_cycle(const std::vector<std::size_t>& p) {
  std::size_t j = 0, len = 0;
  do {
    j = p[j];
    ++len;
  } while (j != 0);
  return len == p.size();
}

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt pow2(unsigned long e) { return BigInt(1) << e; }

}  // namespace

MonomialElement::MonomialElement(std::vector<int> signs, std::vector<std::size_t> perm)
    : signs_(std::move(signs)), perm_(std::move(perm)) {
  if (signs_.size() != perm_.size()) throw DimensionMismatch("sign and permutation lengths differ");
  std::vector<bool> hit(perm_.size(), false);
  for (auto x : perm_) {
    if (x >= perm_.size() || hit[x]) throw InvalidArgument("not a permutation");
    hit[x] = true;
  }
  for (int s : signs_)
    if (s != 1 && s != -1) throw InvalidArgument("signs must be +1 or -1");
}

MonomialElement MonomialElement::identity(std::size_t n) { return from_signs(std::vector<int>(n, 1)); }

MonomialElement MonomialElement::minus_identity(std::size_t n) { return from_signs(std::vector<int>(n, -1)); }

MonomialElement MonomialElement::sign_flip(std::size_t n, std::size_t i) {
  std::vector<int> s(n, 1);
  s.at(i) = -1;
  return from_signs(std::move(s));
}

MonomialElement MonomialElement::from_signs(std::vector<int> signs) {
  std::vector<std::size_t> perm(signs.size());
  for (std::size_t j = 0; j < perm.size(); ++j) perm[j] = j;
  return MonomialElement(std::move(signs), std::move(perm));
}

MonomialElement MonomialElement::from_perm(std::vector<std::size_t> perm) {
  std::vector<int> s(perm.size(), 1);
  return MonomialElement(std::move(s), std::move(perm));
}

MonomialElement MonomialElement::cycle(std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t j = 0; j < n; ++j) perm[j] = (j + 1) % n;
  return from_perm(std::move(perm));
}

MonomialElement MonomialElement::transposition(std::size_t n, std::size_t i, std::size_t j) {
  std::vector<std::size_t> perm(n);
  for (std::size_t k = 0; k < n; ++k) perm[k] = k;
  std::swap(perm.at(i), perm.at(j));
  return from_perm(std::move(perm));
}

MonomialElement MonomialElement::from_matrix(const IntMatrix& m) {
  if (!m.is_square()) throw InvalidArgument("monomial matrix must be square");
  const std::size_t n = m.rows();
  std::vector<int> signs(n, 0);
  std::vector<std::size_t> perm(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const BigInt& x = m(i, j);
      if (x == 0) continue;
      if ((x != 1 && x != -1) || perm[j] != n) throw InvalidArgument("not a signed permutation matrix");
      perm[j] = i;
      signs[i] = x == 1 ? 1 : -1;
    }
    if (perm[j] == n) throw InvalidArgument("not a signed permutation matrix");
  }
  return MonomialElement(std::move(signs), std::move(perm));
}

bool MonomialElement::is_diagonal() const {
  for (std::size_t j = 0; j < perm_.size(); ++j)
    if (perm_[j] != j) return false;
  return true;
}

IntMatrix MonomialElement::matrix() const {
  IntMatrix m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) m(perm_[j], j) = signs_[perm_[j]];
  return m;
}

IntVector MonomialElement::apply(const IntVector& v) const {
  if (v.dim() != dim()) throw DimensionMismatch("vector and monomial element dimensions differ");
  IntVector out(dim());
  for (std::size_t j = 0; j < dim(); ++j) out[perm_[j]] = signs_[perm_[j]] * v[j];
  return out;
}

std::vector<long> MonomialElement::apply(const std::vector<long>& v) const {
  std::vector<long> out(dim());
  for (std::size_t j = 0; j < dim(); ++j) out[perm_[j]] = signs_[perm_[j]] * v[j];
  return out;
}

MonomialElement MonomialElement::inverse() const {
  std::vector<std::size_t> inv(dim());
  std::vector<int> s(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    inv[perm_[j]] = j;
    s[j] = signs_[perm_[j]];
  }
  return MonomialElement(std::move(s), std::move(inv));
}

MonomialElement operator*(const MonomialElement& g, const MonomialElement& h) {
  if (g.dim() != h.dim()) throw DimensionMismatch("monomial element dimensions differ");
  const std::size_t n = g.dim();
  std::vector<std::size_t> perm = compose(g.perm_, h.perm_);
  std::vector<int> s(n);
  for (std::size_t k = 0; k < n; ++k) s[g.perm_[k]] = g.signs_[g.perm_[k]] * h.signs_[k];
  return MonomialElement(std::move(s), std::move(perm));
}

std::size_t MonomialElementHash::operator()(const MonomialElement& g) const {
  std::size_t h = PermHash{}(g.perm());
  for (int s : g.signs()) h = (h * 3) ^ static_cast<std::size_t>(s + 1);
  return h;
}

MonomialGroup::MonomialGroup(std::size_t n, std::vector<MonomialElement> generators)
    : n_(n), gens_(std::move(generators)) {
  for (const auto& g : gens_)
    if (g.dim() != n_) throw DimensionMismatch("generator dimension differs from group dimension");
}

MonomialGroup MonomialGroup::full(std::size_t n) {
  std::vector<MonomialElement> gens{MonomialElement::sign_flip(n, 0)};
  if (n > 1) {
    gens.push_back(MonomialElement::transposition(n, 0, 1));
    gens.push_back(MonomialElement::cycle(n));
  }
  return MonomialGroup(n, std::move(gens));
}

MatGroup MonomialGroup::as_matgroup() const {
  std::vector<IntMatrix> mats;
  for (const auto& g : gens_) mats.push_back(g.matrix());
  return MatGroup(n_, std::move(mats));
}

std::vector<MonomialElement> MonomialGroup::elements(std::size_t cap) const {
  std::unordered_set<MonomialElement, MonomialElementHash> seen;
  std::vector<MonomialElement> out{MonomialElement::identity(n_)};
  seen.insert(out.front());
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (const auto& s : gens_) {
      MonomialElement x = out[head] * s;
      if (seen.insert(x).second) {
        if (out.size() >= cap) throw CapExceeded("monomial group closure", cap);
        out.push_back(std::move(x));
      }
    }
  }
  return out;
}

bool MonomialGroup::contains_minus_identity(std::size_t cap) const {
  const auto minus = MonomialElement::minus_identity(n_);
  for (const auto& g : elements(cap))
    if (g == minus) return true;
  return false;
}

PermutationImage project_pi(const MonomialGroup& g, std::size_t cap) {
  PermutationImage out;
  for (const auto& s : g.generators()) out.generators.push_back(s.perm());
  std::vector<std::size_t> id(g.dim());
  for (std::size_t j = 0; j < id.size(); ++j) id[j] = j;
  std::unordered_set<std::vector<std::size_t>, PermHash> seen{id};
  std::vector<std::vector<std::size_t>> queue{id};
  out.has_n_cycle = g.dim() == 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& s : out.generators) {
      auto x = compose(queue[head], s);
      if (seen.insert(x).second) {
        if (queue.size() >= cap) throw CapExceeded("permutation image closure", cap);
        if (!out.has_n_cycle && is_full_cycle(x)) out.has_n_cycle = true;
        queue.push_back(std::move(x));
      }
    }
  }
  out.order = BigInt(static_cast<unsigned long>(queue.size()));
  return out;
}

GF2Subspace o2_diagonal_part(const MonomialGroup& g, std::size_t cap) {
  const std::size_t n = g.dim();
  if (n % 2 == 0) throw HypothesisNotMet("dimension must be odd");
  if (!project_pi(g, cap).has_n_cycle) throw HypothesisNotMet("permutation image has no n-cycle");

  // Schreier generators t_(s sigma)^-1 s t_sigma span the kernel of the projection.
  GF2Subspace out(n);
  auto record = [&](const MonomialElement& k) {
    GF2Poly bits;
    for (std::size_t j = 0; j < n; ++j)
      if (k.signs()[j] == -1) bits.set(j);
    out.insert(bits);
  };
  std::unordered_map<std::vector<std::size_t>, MonomialElement, PermHash> transversal;
  std::vector<std::vector<std::size_t>> queue;
  const auto id = MonomialElement::identity(n);
  transversal.emplace(id.perm(), id);
  queue.push_back(id.perm());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const MonomialElement t = transversal.at(queue[head]);
    for (const auto& s : g.generators()) {
      MonomialElement cand = s * t;
      auto it = transversal.find(cand.perm());
      if (it == transversal.end()) {
        if (queue.size() >= cap) throw CapExceeded("permutation image closure", cap);
        queue.push_back(cand.perm());
        transversal.emplace(cand.perm(), std::move(cand));
      } else {
        const MonomialElement k = it->second.inverse() * cand;
        if (!k.is_diagonal()) throw Error("Schreier generator is not diagonal");
        record(k);
      }
    }
  }
  return out;
}

IntVector support_reduce(const LatticeBasis& l) {
  const std::size_t n = l.ambient_dim();
  if (l.rank() == 0) throw HypothesisNotMet("the zero lattice has no binary generator");
  if (!contains(l, LatticeBasis::scaled(n, 2))) throw HypothesisNotMet("lattice does not contain 2Z^n");
  if (!is_primitive(l)) throw HypothesisNotMet("lattice is not primitive");
  if (!(transform_lattice(l, cyclic_shift_matrix(n)) == l)) throw HypothesisNotMet("lattice is not stable under the n-cycle");
  if (l == ones_lattice_with_even(n)) throw HypothesisNotMet("lattice is Z1 + 2Z^n");

  const std::size_t limit = 2 * n / 3;
  auto support = [](const std::vector<long>& v) {
    return static_cast<std::size_t>(std::count(v.begin(), v.end(), 1L));
  };
  std::vector<std::vector<long>> pool;
  std::set<std::vector<long>> seen;
  auto add = [&](std::vector<long> v) {
    if (support(v) == 0) return;
    if (seen.insert(v).second) pool.push_back(std::move(v));
  };
  for (std::size_t r = 0; r < l.rank(); ++r) {
    std::vector<long> v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = mpz_odd_p(l.basis()(r, c).get_mpz_t()) ? 1 : 0;
    for (std::size_t k = 0; k < n; ++k) {
      std::vector<long> w(n);
      for (std::size_t c = 0; c < n; ++c) w[(c + k) % n] = v[c];
      add(w);
    }
  }

  for (std::size_t step = 0; step <= n; ++step) {
    auto best = std::min_element(pool.begin(), pool.end(), [&](const auto& a, const auto& b) {
      return support(a) != support(b) ? support(a) < support(b) : a < b;
    });
    if (best == pool.end()) break;
    if (support(*best) <= limit) {
      IntVector out(n);
      for (std::size_t c = 0; c < n; ++c) out[c] = (*best)[c];
      if (!member(out, l)) throw Error("reduced vector is not a lattice member");
      return out;
    }
    const std::vector<long> v = *best;
    auto other = std::find_if(pool.begin(), pool.end(), [&](const auto& w) { return w != v; });
    if (other == pool.end()) break;
    std::vector<long> sum(n);
    for (std::size_t c = 0; c < n; ++c) sum[c] = (v[c] + (*other)[c]) % 2;
    const std::size_t before = pool.size();
    add(sum);
    if (pool.size() == before) break;
  }
  throw HypothesisNotMet("support reduction made no progress");
}

BigInt monomial_orbit_bound(const IntVector& v, const BigInt& pi_order) {
  if (!v.is_binary()) throw InvalidArgument("orbit bound needs a binary vector");
  return pow2(v.support_size()) * pi_order;
}

BigInt full_monomial_orbit_size(const IntVector& v) {
  std::map<BigInt, unsigned long> mult;
  for (std::size_t j = 0; j < v.dim(); ++j) mult[abs(v[j])] += 1;
  BigInt r = factorial(v.dim());
  for (const auto& [value, m] : mult) r /= factorial(m);
  return r * pow2(v.support_size());
}

std::vector<std::vector<long>> monomial_orbit(const MonomialGroup& g, const std::vector<long>& v, std::size_t cap) {
  if (v.size() != g.dim()) throw DimensionMismatch("vector and group dimensions differ");
  std::unordered_set<std::vector<long>, LongVecHash> seen{v};
  std::vector<std::vector<long>> queue{v};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (const auto& s : g.generators()) {
      auto w = s.apply(queue[head]);
      if (seen.insert(w).second) {
        if (queue.size() >= cap) throw CapExceeded("monomial orbit", cap);
        queue.push_back(std::move(w));
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

LatticeBasis even_sum_lattice(std::size_t n) {
  std::vector<IntVector> rows;
  for (std::size_t j = 1; j < n; ++j) rows.push_back(IntVector::unit(n, 0) + IntVector::unit(n, j));
  IntVector two(n);
  two[0] = 2;
  rows.push_back(two);
  return hnf(rows, n);
}

bool four_subspace_hypothesis(unsigned long p, PermutationImageKind image) {
  switch (image) {
    case PermutationImageKind::Alternating:
    case PermutationImageKind::Symmetric:
      return p >= 3;
    case PermutationImageKind::Cyclic:
      return ord2(p) == p - 1;
    case PermutationImageKind::Other:
      return false;
  }
  return false;
}

ThreeLatticeReport three_lattice_check(unsigned long p, PermutationImageKind image, unsigned long bfs_max_p) {
  if (!is_odd_prime(p)) throw NotOddPrime(std::to_string(p) + " is not an odd prime");
  ThreeLatticeReport out{p, {}, false, true,
                         four_subspace_hypothesis(p, image) ? "verified" : "hypothesis unverified"};
  const MonomialGroup mon = MonomialGroup::full(p);
  const MatGroup mat = mon.as_matgroup();
  const BigInt bound = pow2(p);

  IntVector pair = IntVector::unit(p, 0) + IntVector::unit(p, 1);
  const std::vector<std::tuple<std::string, IntVector, LatticeBasis>> cases{
      {"Z^p", IntVector::unit(p, 0), LatticeBasis::full(p)},
      {"L_E", pair, even_sum_lattice(p)},
      {"L_1", IntVector::ones(p), ones_lattice_with_even(p)},
  };
  for (const auto& [name, v, target] : cases) {
    GeneratingOrbitRow row{name, v, full_monomial_orbit_size(v), std::nullopt, false, false};
    if (p <= bfs_max_p) {
      std::vector<long> lv(p);
      for (std::size_t j = 0; j < p; ++j) lv[j] = v[j].get_si();
      row.bfs_orbit_size = BigInt(static_cast<unsigned long>(monomial_orbit(mon, lv).size()));
    }
    row.spans = stable_span(mat, hnf(std::vector<IntVector>{v}, p)) == target;
    row.within_power_bound = row.orbit_size <= bound;
    out.all_within_bound = out.all_within_bound && row.within_power_bound && row.spans;
    out.rows.push_back(std::move(row));
  }
  out.pair_inequality = BigInt(2 * p * (p - 1)) < bound;
  return out;
}

std::vector<SubsetClassRow> classify_subsets(unsigned long p) {
  const auto f = factor_xp_plus_1(p);
  const FactorSubset all = (FactorSubset{1} << f.count()) - 1;
  std::vector<SubsetClassRow> out;
  for (const auto& [s, l] : binary_sublattices(f)) {
    SubsetClassRow row{s, cp_stable_subspace(f, s), pow2(0), l, std::nullopt, ""};
    row.diagonal_group_order = pow2(row.subspace.dim());
    row.index = index(l, LatticeBasis::full(p));
    if (s == 0)
      row.name = "0";
    else if (s == 1)
      row.name = "V_1 / L_1";
    else if (s == (all & ~FactorSubset{1}))
      row.name = "V_E / L_E";
    else if (s == all)
      row.name = "F_2^p / Z^p";
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace glat
