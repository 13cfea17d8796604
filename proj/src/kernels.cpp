#include "glat/kernels.hpp"

#include <omp.h>

#include <atomic>
#include <cstdint>
#include <unordered_set>

#include "glat/errors.hpp"

namespace glat::kernels {

namespace {

struct Overflow {};

inline void mul_add(std::int64_t& acc, std::int64_t a, std::int64_t b) {
  std::int64_t p;
  if (__builtin_mul_overflow(a, b, &p) || __builtin_add_overflow(acc, p, &acc)) throw Overflow{};
}

inline void mul_add(BigInt& acc, const BigInt& a, const BigInt& b) { acc += a * b; }

inline std::size_t hash_scalar(std::int64_t x) { return static_cast<std::size_t>(x); }

inline std::size_t hash_scalar(const BigInt& x) {
  const auto size = x.get_mpz_t()->_mp_size;
  std::size_t h = size == 0 ? 0 : static_cast<std::size_t>(mpz_getlimbn(x.get_mpz_t(), 0));
  return h ^ static_cast<std::size_t>(size) << 56;
}

template <class T>
struct VecHash {
  std::size_t operator()(const std::vector<T>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (const auto& x : v) h = (h ^ hash_scalar(x)) * 1099511628211ULL;
    return h;
  }
};

template <class T>
bool convert(const BigInt& x, T& out) {
  if constexpr (std::is_same_v<T, BigInt>) {
    out = x;
    return true;
  } else {
    if (!x.fits_slong_p()) return false;
    out = x.get_si();
    return true;
  }
}

template <class T>
BigInt to_big(const T& x) {
  if constexpr (std::is_same_v<T, BigInt>) {
    return x;
  } else {
    return BigInt(static_cast<long>(x));
  }
}

// Matrix stored as per-row nonzero lists for products M * v.
template <class T>
struct SparseRows {
  std::vector<std::vector<std::pair<std::size_t, T>>> rows;
};

template <class T>
bool to_sparse_rows(const IntMatrix& m, SparseRows<T>& out) {
  out.rows.assign(m.rows(), {});
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (sgn(m(r, c)) == 0) continue;
      T x;
      if (!convert(m(r, c), x)) return false;
      out.rows[r].emplace_back(c, x);
    }
  return true;
}

template <class T>
std::vector<T> apply_sparse(const SparseRows<T>& g, const std::vector<T>& v) {
  std::vector<T> out(g.rows.size());
  for (std::size_t r = 0; r < g.rows.size(); ++r) {
    T acc = 0;
    for (const auto& [c, x] : g.rows[r]) mul_add(acc, x, v[c]);
    out[r] = acc;
  }
  return out;
}

// Right multiplication h * g for flattened n x n matrices; g stored by columns.
template <class T>
std::vector<T> right_mul(const std::vector<T>& h, const SparseRows<T>& g_cols, std::size_t n) {
  std::vector<T> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      T acc = 0;
      for (const auto& [k, x] : g_cols.rows[j]) mul_add(acc, h[i * n + k], x);
      out[i * n + j] = acc;
    }
  return out;
}

// Shared BFS driver. step(elem, gen) computes one image.
template <class T, class Step>
std::vector<std::vector<T>> bfs(std::vector<T> start, std::size_t gen_count, std::size_t cap,
                                bool parallel, const char* what, Step step) {
  std::vector<std::vector<T>> order;
  std::unordered_set<std::vector<T>, VecHash<T>> seen;
  order.push_back(start);
  seen.insert(std::move(start));
  if (order.size() > cap) throw CapExceeded(what, cap);

  if (!parallel) {
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (std::size_t g = 0; g < gen_count; ++g) {
        std::vector<T> img = step(order[head], g);
        if (seen.insert(img).second) {
          order.push_back(std::move(img));
          if (order.size() > cap) throw CapExceeded(what, cap);
        }
      }
    }
    return order;
  }

  std::size_t level_begin = 0;
  while (level_begin < order.size()) {
    const std::size_t level_end = order.size();
    const std::size_t count = (level_end - level_begin) * gen_count;
    std::vector<std::vector<T>> images(count);
    std::atomic<bool> overflow{false};
#pragma omp parallel for schedule(static)
    for (std::int64_t idx = 0; idx < static_cast<std::int64_t>(count); ++idx) {
      if (overflow.load(std::memory_order_relaxed)) continue;
      const std::size_t u = static_cast<std::size_t>(idx);
      try {
        images[u] = step(order[level_begin + u / gen_count], u % gen_count);
      } catch (const Overflow&) {
        overflow.store(true);
      }
    }
    if (overflow.load()) throw Overflow{};
    for (auto& img : images) {
      if (seen.insert(img).second) {
        order.push_back(std::move(img));
        if (order.size() > cap) throw CapExceeded(what, cap);
      }
    }
    level_begin = level_end;
  }
  return order;
}

template <class T>
bool orbit_typed(std::span<const IntMatrix> gens, const IntVector& v, std::size_t cap,
                 bool parallel, std::vector<IntVector>& out) {
  std::vector<SparseRows<T>> sg(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!to_sparse_rows(gens[i], sg[i])) return false;
  std::vector<T> start(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (!convert(v[i], start[i])) return false;
  std::vector<std::vector<T>> raw;
  try {
    raw = bfs<T>(std::move(start), gens.size(), cap, parallel, "orbit enumeration",
                 [&](const std::vector<T>& x, std::size_t g) { return apply_sparse(sg[g], x); });
  } catch (const Overflow&) {
    return false;
  }
  out.clear();
  out.reserve(raw.size());
  for (const auto& r : raw) {
    std::vector<BigInt> e;
    e.reserve(r.size());
    for (const auto& x : r) e.push_back(to_big(x));
    out.emplace_back(std::move(e));
  }
  return true;
}

template <class T>
bool closure_typed(std::span<const IntMatrix> gens, std::size_t n, std::size_t cap, bool parallel,
                   std::vector<IntMatrix>& out) {
  std::vector<SparseRows<T>> cols(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (!to_sparse_rows(gens[i].transpose(), cols[i])) return false;
  std::vector<T> id(n * n, T(0));
  for (std::size_t i = 0; i < n; ++i) id[i * n + i] = 1;
  std::vector<std::vector<T>> raw;
  try {
    raw = bfs<T>(std::move(id), gens.size(), cap, parallel, "group closure",
                 [&](const std::vector<T>& h, std::size_t g) { return right_mul(h, cols[g], n); });
  } catch (const Overflow&) {
    return false;
  }
  out.clear();
  out.reserve(raw.size());
  for (const auto& r : raw) {
    std::vector<BigInt> e;
    e.reserve(r.size());
    for (const auto& x : r) e.push_back(to_big(x));
    out.emplace_back(n, n, std::move(e));
  }
  return true;
}

void check_square(std::span<const IntMatrix> gens, std::size_t dim) {
  for (const auto& g : gens)
    if (g.rows() != dim || g.cols() != dim) throw DimensionMismatch("generator dimension");
}

std::vector<IntVector> orbit_impl(std::span<const IntMatrix> gens, const IntVector& v,
                                  std::size_t cap, bool parallel) {
  check_square(gens, v.dim());
  std::vector<IntVector> out;
  if (orbit_typed<std::int64_t>(gens, v, cap, parallel, out)) return out;
  orbit_typed<BigInt>(gens, v, cap, parallel, out);
  return out;
}

std::vector<IntMatrix> closure_impl(std::span<const IntMatrix> gens, std::size_t dim,
                                    std::size_t cap, bool parallel) {
  check_square(gens, dim);
  std::vector<IntMatrix> out;
  if (closure_typed<std::int64_t>(gens, dim, cap, parallel, out)) return out;
  closure_typed<BigInt>(gens, dim, cap, parallel, out);
  return out;
}

}  // namespace

std::vector<IntVector> orbit_serial(std::span<const IntMatrix> gens, const IntVector& v,
                                    std::size_t cap) {
  return orbit_impl(gens, v, cap, false);
}

std::vector<IntVector> orbit_parallel(std::span<const IntMatrix> gens, const IntVector& v,
                                      std::size_t cap) {
  return orbit_impl(gens, v, cap, true);
}

std::vector<IntMatrix> closure_serial(std::span<const IntMatrix> gens, std::size_t dim,
                                      std::size_t cap) {
  return closure_impl(gens, dim, cap, false);
}

std::vector<IntMatrix> closure_parallel(std::span<const IntMatrix> gens, std::size_t dim,
                                        std::size_t cap) {
  return closure_impl(gens, dim, cap, true);
}

int thread_count() { return omp_get_max_threads(); }

}  // namespace glat::kernels
