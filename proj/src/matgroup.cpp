#include "glat/matgroup.hpp"

#include <algorithm>

#include "glat/kernels.hpp"

namespace glat {

MatGroup::MatGroup(std::size_t dim, std::vector<IntMatrix> generators)
    : dim_(dim), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (const auto& g : generators_) {
    if (g.rows() != dim_ || g.cols() != dim_) throw DimensionMismatch("generator is not dim x dim");
    if (!is_unimodular(g)) throw NonUnimodularGenerator("generator determinant is not +-1");
  }
}

const std::vector<IntMatrix>& MatGroup::elements(std::size_t cap) const {
  if (!cache_->elements) cache_->elements = kernels::closure_parallel(generators_, dim_, cap);
  if (cache_->elements->size() > cap) throw CapExceeded("group closure", cap);
  return *cache_->elements;
}

BigInt MatGroup::order(std::size_t cap) const {
  if (known_order_) return *known_order_;
  return BigInt(static_cast<unsigned long>(elements(cap).size()));
}

MatGroup trivial_group(std::size_t dim) { return MatGroup(dim, {}); }

Orbit orbit(const MatGroup& g, const IntVector& v, std::size_t cap) {
  if (v.dim() != g.dim()) throw DimensionMismatch("orbit vector dimension");
  Orbit o;
  o.elements = kernels::orbit_parallel(g.generators(), v, cap);
  std::sort(o.elements.begin(), o.elements.end());
  o.representative = o.elements.front();
  return o;
}

LatticeBasis orbit_span(const MatGroup& g, const IntVector& v, std::size_t cap) {
  const Orbit o = orbit(g, v, cap);
  return hnf(o.elements, g.dim());
}

LatticeBasis stable_span(const MatGroup& g, const LatticeBasis& l) {
  if (l.ambient_dim() != g.dim()) throw DimensionMismatch("stable_span");
  LatticeBasis cur = l;
  while (true) {
    IntMatrix stacked = cur.basis();
    for (const auto& h : g.generators()) {
      const IntMatrix img = cur.basis() * h.transpose();
      for (std::size_t r = 0; r < img.rows(); ++r) stacked.append_row(img.row(r));
    }
    LatticeBasis next = hnf(stacked);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

bool is_stable(const MatGroup& g, const LatticeBasis& l) {
  if (l.ambient_dim() != g.dim()) throw DimensionMismatch("stability check");
  for (const auto& h : g.generators())
    for (std::size_t r = 0; r < l.rank(); ++r)
      if (!member(h * l.basis().row(r), l)) return false;
  return true;
}

BigInt stabilizer_order(const MatGroup& g, const IntVector& v, std::size_t cap) {
  const BigInt total = g.order(cap);
  const BigInt size = static_cast<unsigned long>(orbit(g, v, cap).size());
  if (!mpz_divisible_p(total.get_mpz_t(), size.get_mpz_t()))
    throw Error("orbit size does not divide the group order");
  return total / size;
}

MatGroup conjugate(const MatGroup& g, const IntMatrix& a) {
  if (a.rows() != g.dim() || a.cols() != g.dim()) throw DimensionMismatch("conjugator dimension");
  if (!is_unimodular(a)) throw NonUnimodularConjugator("conjugator determinant is not +-1");
  const IntMatrix inv = unimodular_inverse(a);
  std::vector<IntMatrix> gens;
  gens.reserve(g.generators().size());
  for (const auto& h : g.generators()) gens.push_back(a * h * inv);
  MatGroup out(g.dim(), std::move(gens));
  if (g.known_order()) out.set_known_order(*g.known_order());
  return out;
}

LatticeBasis restrict_lattice(const LatticeBasis& l, const IntMatrix& a) {
  if (!is_unimodular(a)) throw NonUnimodularConjugator("conjugator determinant is not +-1");
  return transform_lattice(l, a);
}

std::size_t commutant_dimension(const MatGroup& g) {
  const std::size_t n = g.dim();
  const std::size_t vars = n * n;
  IntMatrix system(0, vars);
  for (const auto& h : g.generators()) {
    // Row (i, j) of X h - h X = 0.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        IntVector eq(vars);
        for (std::size_t k = 0; k < n; ++k) {
          eq[i * n + k] += h(k, j);
          eq[k * n + j] -= h(i, k);
        }
        if (!eq.is_zero()) system.append_row(eq);
      }
  }
  if (system.rows() == 0) return vars;
  return vars - rank(system);
}

std::string irreducibility_certificate(const MatGroup& g) {
  return commutant_dimension(g) == 1 ? "certified irreducible" : "not certified";
}

}  // namespace glat
