#include "glat/gf2cyclo.hpp"

#include <algorithm>
#include <bit>

#include "glat/errors.hpp"

namespace glat {

namespace {

constexpr std::size_t kWordBits = 64;

void xor_shifted(std::vector<std::uint64_t>& acc, const std::vector<std::uint64_t>& b, std::size_t shift) {
  const std::size_t ws = shift / kWordBits;
  const std::size_t bs = shift % kWordBits;
  const std::size_t need = b.size() + ws + 1;
  if (acc.size() < need) acc.resize(need, 0);
  for (std::size_t i = 0; i < b.size(); ++i) {
    acc[i + ws] ^= b[i] << bs;
    if (bs) acc[i + ws + 1] ^= b[i] >> (kWordBits - bs);
  }
}

GF2Poly rotate(const GF2Poly& v, std::size_t n, std::size_t k) {
  GF2Poly out;
  for (long i = v.degree(); i >= 0; --i)
    if (v.coeff(static_cast<std::size_t>(i))) out.set((static_cast<std::size_t>(i) + k) % n);
  return out;
}

GF2Poly xp_plus_1(unsigned long p) {
  GF2Poly n = GF2Poly::monomial(p);
  n.flip(0);
  return n;
}

GF2Poly mulmod(const GF2Poly& a, const GF2Poly& b, const GF2Poly& m) { return (a * b) % m; }

GF2Poly powmod_x(unsigned long e, const GF2Poly& m) {
  GF2Poly result = GF2Poly::monomial(0) % m;
  GF2Poly base = GF2Poly::monomial(1) % m;
  while (e) {
    if (e & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

// h(x^t) mod m by Horner's rule.
GF2Poly compose_power(const GF2Poly& h, unsigned long t, const GF2Poly& m) {
  const GF2Poly xt = powmod_x(t, m);
  GF2Poly acc;
  for (long k = h.degree(); k >= 0; --k) {
    acc = mulmod(acc, xt, m);
    if (h.coeff(static_cast<std::size_t>(k))) acc.flip(0);
    acc = acc % m;
  }
  return acc;
}

}  // namespace

GF2Poly GF2Poly::monomial(std::size_t k) {
  GF2Poly p;
  p.set(k);
  return p;
}

GF2Poly GF2Poly::from_bits(const std::string& lsb_first) {
  GF2Poly p;
  for (std::size_t i = 0; i < lsb_first.size(); ++i) {
    if (lsb_first[i] == '1')
      p.set(i);
    else if (lsb_first[i] != '0')
      throw InvalidArgument("binary coefficient string may only contain 0 and 1");
  }
  return p;
}

long GF2Poly::degree() const {
  if (words_.empty()) return -1;
  const std::uint64_t top = words_.back();
  return static_cast<long>((words_.size() - 1) * kWordBits + (kWordBits - 1 - std::countl_zero(top)));
}

bool GF2Poly::coeff(std::size_t k) const {
  const std::size_t w = k / kWordBits;
  return w < words_.size() && ((words_[w] >> (k % kWordBits)) & 1U);
}

void GF2Poly::set(std::size_t k, bool value) {
  const std::size_t w = k / kWordBits;
  if (value) {
    if (words_.size() <= w) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (k % kWordBits);
  } else if (w < words_.size()) {
    words_[w] &= ~(std::uint64_t{1} << (k % kWordBits));
    trim();
  }
}

void GF2Poly::flip(std::size_t k) {
  const std::size_t w = k / kWordBits;
  if (words_.size() <= w) words_.resize(w + 1, 0);
  words_[w] ^= std::uint64_t{1} << (k % kWordBits);
  trim();
}

std::size_t GF2Poly::weight() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

void GF2Poly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

GF2Poly& GF2Poly::operator+=(const GF2Poly& o) {
  if (words_.size() < o.words_.size()) words_.resize(o.words_.size(), 0);
  for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] ^= o.words_[i];
  trim();
  return *this;
}

GF2Poly operator*(const GF2Poly& a, const GF2Poly& b) {
  GF2Poly out;
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    std::uint64_t w = a.words_[i];
    while (w) {
      const int bit = std::countr_zero(w);
      xor_shifted(out.words_, b.words_, i * kWordBits + static_cast<std::size_t>(bit));
      w &= w - 1;
    }
  }
  out.trim();
  return out;
}

bool operator<(const GF2Poly& a, const GF2Poly& b) {
  if (a.words_.size() != b.words_.size()) return a.words_.size() < b.words_.size();
  for (std::size_t i = a.words_.size(); i-- > 0;)
    if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
  return false;
}

std::string GF2Poly::to_bits() const {
  if (is_zero()) return "0";
  std::string s;
  for (long k = 0; k <= degree(); ++k) s.push_back(coeff(static_cast<std::size_t>(k)) ? '1' : '0');
  return s;
}

std::string GF2Poly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (long k = degree(); k >= 0; --k) {
    if (!coeff(static_cast<std::size_t>(k))) continue;
    if (!s.empty()) s += " + ";
    s += k == 0 ? "1" : k == 1 ? "x" : "x^" + std::to_string(k);
  }
  return s;
}

void divmod(const GF2Poly& a, const GF2Poly& b, GF2Poly& q, GF2Poly& r) {
  if (b.is_zero()) throw InvalidArgument("division by the zero polynomial");
  q = GF2Poly();
  r = a;
  const long db = b.degree();
  while (r.degree() >= db) {
    const auto shift = static_cast<std::size_t>(r.degree() - db);
    q.set(shift);
    r += GF2Poly::monomial(shift) * b;
  }
}

GF2Poly operator%(const GF2Poly& a, const GF2Poly& b) {
  GF2Poly q, r;
  divmod(a, b, q, r);
  return r;
}

GF2Poly operator/(const GF2Poly& a, const GF2Poly& b) {
  GF2Poly q, r;
  divmod(a, b, q, r);
  return q;
}

GF2Poly gcd(GF2Poly a, GF2Poly b) {
  while (!b.is_zero()) {
    GF2Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_odd_prime(unsigned long p) {
  if (p < 3 || p % 2 == 0) return false;
  for (unsigned long f = 3; f * f <= p; f += 2)
    if (p % f == 0) return false;
  return true;
}

unsigned long ord2(unsigned long p) {
  if (!is_odd_prime(p)) throw NotOddPrime(std::to_string(p) + " is not an odd prime");
  unsigned long d = 1, v = 2 % p;
  while (v != 1) {
    v = (v * 2) % p;
    ++d;
  }
  return d;
}

GF2Poly CyclotomicFactorization::cofactor(std::size_t i) const { return xp_plus_1(p) / factors.at(i); }

CyclotomicFactorization factor_xp_plus_1(unsigned long p) {
  CyclotomicFactorization out{p, ord2(p), {}, {}};
  const GF2Poly n = xp_plus_1(p);

  std::vector<std::vector<unsigned long>> cosets;
  std::vector<bool> seen(p, false);
  for (unsigned long t = 1; t < p; ++t) {
    if (seen[t]) continue;
    std::vector<unsigned long> c;
    for (unsigned long v = t; !seen[v]; v = (v * 2) % p) {
      seen[v] = true;
      c.push_back(v);
    }
    std::sort(c.begin(), c.end());
    cosets.push_back(std::move(c));
  }

  // Coset sums are fixed by squaring, so each splits x^p + 1 as
  // gcd(N, b) * gcd(N, b + 1); together they separate all irreducible factors.
  std::vector<GF2Poly> parts{n};
  for (const auto& c : cosets) {
    GF2Poly b;
    for (auto e : c) b.set(e);
    GF2Poly b1 = b;
    b1.flip(0);
    std::vector<GF2Poly> next;
    for (const auto& f : parts) {
      const GF2Poly g0 = gcd(f, b % f);
      const GF2Poly g1 = gcd(f, b1 % f);
      if (g0.degree() > 0 && g1.degree() > 0) {
        next.push_back(g0);
        next.push_back(g1);
      } else {
        next.push_back(f);
      }
    }
    parts = std::move(next);
  }
  if (parts.size() != cosets.size() + 1) throw Error("coset splitting did not separate all factors");

  GF2Poly linear = GF2Poly::from_bits("11");
  std::vector<GF2Poly> nontrivial;
  for (auto& f : parts)
    if (!(f == linear)) nontrivial.push_back(f);
  const GF2Poly zeta_poly = *std::min_element(nontrivial.begin(), nontrivial.end());

  out.factors.push_back(linear);
  out.cosets.push_back({0});
  for (const auto& c : cosets) {
    const unsigned long t = c.front();
    auto it = std::find_if(nontrivial.begin(), nontrivial.end(),
                           [&](const GF2Poly& h) { return compose_power(h, t, zeta_poly).is_zero(); });
    if (it == nontrivial.end()) throw Error("no factor vanishes at zeta^" + std::to_string(t));
    out.factors.push_back(*it);
    out.cosets.push_back(c);
  }
  return out;
}

GF2Subspace GF2Subspace::span(std::size_t n, const std::vector<GF2Poly>& vectors) {
  GF2Subspace s(n);
  for (const auto& v : vectors) s.insert(v);
  return s;
}

GF2Poly GF2Subspace::reduce(GF2Poly v) const {
  for (const auto& b : basis_)
    if (v.coeff(static_cast<std::size_t>(b.degree()))) v += b;
  return v;
}

bool GF2Subspace::contains(const GF2Poly& v) const { return reduce(v).is_zero(); }

bool GF2Subspace::insert(GF2Poly v) {
  if (v.degree() >= static_cast<long>(n_)) throw DimensionMismatch("bit vector longer than the ambient space");
  v = reduce(std::move(v));
  if (v.is_zero()) return false;
  const auto lead = static_cast<std::size_t>(v.degree());
  for (auto& b : basis_)
    if (b.coeff(lead)) b += v;
  auto pos = std::find_if(basis_.begin(), basis_.end(), [&](const GF2Poly& b) { return b.degree() < v.degree(); });
  basis_.insert(pos, std::move(v));
  return true;
}

GF2Subspace cp_stable_subspace(const CyclotomicFactorization& f, FactorSubset s) {
  GF2Subspace out(f.p);
  for (std::size_t i = 0; i < f.count(); ++i) {
    if (!((s >> i) & 1U)) continue;
    const GF2Poly g = f.cofactor(i);
    for (std::size_t k = 0; k < f.p; ++k) out.insert(rotate(g, f.p, k));
  }
  return out;
}

std::vector<std::pair<FactorSubset, GF2Subspace>> cp_stable_subspaces(const CyclotomicFactorization& f) {
  if (f.count() > 20) throw CapExceeded("subset enumeration of factor indices", std::size_t{1} << 20);
  std::vector<std::pair<FactorSubset, GF2Subspace>> out;
  for (FactorSubset s = 0; s < (FactorSubset{1} << f.count()); ++s) out.emplace_back(s, cp_stable_subspace(f, s));
  return out;
}

IntMatrix diag_generator(const CyclotomicFactorization& f, std::size_t i) {
  const GF2Poly g = f.cofactor(i);
  IntMatrix d = IntMatrix::identity(f.p);
  for (std::size_t j = 0; j < f.p; ++j)
    if (g.coeff(j)) d(j, j) = -1;
  return d;
}

std::vector<IntMatrix> diag_generators(const CyclotomicFactorization& f) {
  std::vector<IntMatrix> out;
  for (std::size_t i = 0; i < f.count(); ++i) out.push_back(diag_generator(f, i));
  return out;
}

IntVector binary_vector(const CyclotomicFactorization& f, std::size_t i) {
  const GF2Poly g = f.cofactor(i);
  IntVector v(f.p);
  for (std::size_t j = 0; j < f.p; ++j)
    if (g.coeff(j)) v[j] = 1;
  return v;
}

LatticeBasis binary_sublattice(const CyclotomicFactorization& f, FactorSubset s) {
  const std::size_t p = f.p;
  if (s == 0) return LatticeBasis::zero(p);
  IntMatrix rows(0, p);
  for (std::size_t i = 0; i < f.count(); ++i) {
    if (!((s >> i) & 1U)) continue;
    const IntVector v = binary_vector(f, i);
    for (std::size_t k = 0; k < p; ++k) {
      IntVector w(p);
      for (std::size_t j = 0; j < p; ++j) w[(j + k) % p] = v[j];
      rows.append_row(w);
    }
  }
  for (std::size_t j = 0; j < p; ++j) {
    IntVector e(p);
    e[j] = 2;
    rows.append_row(e);
  }
  return hnf(rows);
}

std::vector<std::pair<FactorSubset, LatticeBasis>> binary_sublattices(const CyclotomicFactorization& f) {
  if (f.count() > 20) throw CapExceeded("subset enumeration of factor indices", std::size_t{1} << 20);
  std::vector<std::pair<FactorSubset, LatticeBasis>> out;
  for (FactorSubset s = 0; s < (FactorSubset{1} << f.count()); ++s) out.emplace_back(s, binary_sublattice(f, s));
  return out;
}

LatticeBasis ones_lattice(unsigned long p) { return hnf(std::vector<IntVector>{IntVector::ones(p)}, p); }

LatticeBasis ones_lattice_with_even(unsigned long p) { return lattice_sum(ones_lattice(p), LatticeBasis::scaled(p, 2)); }

GF2Subspace reduce_mod2(const LatticeBasis& l) {
  if (!contains(l, LatticeBasis::scaled(l.ambient_dim(), 2)))
    throw InvalidArgument("reduction mod 2 needs a lattice containing 2Z^n");
  GF2Subspace out(l.ambient_dim());
  for (std::size_t r = 0; r < l.rank(); ++r) {
    GF2Poly v;
    for (std::size_t c = 0; c < l.ambient_dim(); ++c)
      if (mpz_odd_p(l.basis()(r, c).get_mpz_t())) v.set(c);
    out.insert(v);
  }
  return out;
}

IntMatrix cyclic_shift_matrix(std::size_t p) {
  IntMatrix m(p, p);
  for (std::size_t j = 0; j < p; ++j) m((j + 1) % p, j) = 1;
  return m;
}

std::string subset_to_string(FactorSubset s, std::size_t count) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < count; ++i) {
    if (!((s >> i) & 1U)) continue;
    out += (first ? "" : ",") + std::to_string(i);
    first = false;
  }
  return out + "}";
}

}  // namespace glat
