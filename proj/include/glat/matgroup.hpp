#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "glat/errors.hpp"
#include "glat/int_matrix.hpp"
#include "glat/lattice.hpp"

namespace glat {

struct Orbit {
  IntVector representative;        // lexicographically smallest element
  std::vector<IntVector> elements; // sorted ascending
  std::size_t size() const { return elements.size(); }
};

/// Finite subgroup of GL_n(Z) given by generators. Elements are materialized
/// on demand and cached; copies share the cache.
class MatGroup {
 public:
  MatGroup(std::size_t dim, std::vector<IntMatrix> generators);

  std::size_t dim() const { return dim_; }
  const std::vector<IntMatrix>& generators() const { return generators_; }

  /// Order known without materializing (e.g. a closed-form Weyl group order).
  void set_known_order(BigInt order) { known_order_ = std::move(order); }
  const std::optional<BigInt>& known_order() const { return known_order_; }

  /// Full element set (identity first, BFS order). Throws CapExceeded.
  const std::vector<IntMatrix>& elements(std::size_t cap = kDefaultCap) const;

  /// |G|: the known order if set, else via closure.
  BigInt order(std::size_t cap = kDefaultCap) const;

  bool has_elements() const { return static_cast<bool>(cache_->elements); }

 private:
  struct Cache {
    std::optional<std::vector<IntMatrix>> elements;
  };
  std::size_t dim_;
  std::vector<IntMatrix> generators_;
  std::optional<BigInt> known_order_;
  std::shared_ptr<Cache> cache_;
};

MatGroup trivial_group(std::size_t dim);

Orbit orbit(const MatGroup& g, const IntVector& v, std::size_t cap = kDefaultCap);
LatticeBasis orbit_span(const MatGroup& g, const IntVector& v, std::size_t cap = kDefaultCap);

/// Smallest lattice containing l and stable under g, by iterating l + g l.
/// Agrees with orbit_span for l = Zv without enumerating the orbit.
LatticeBasis stable_span(const MatGroup& g, const LatticeBasis& l);

bool is_stable(const MatGroup& g, const LatticeBasis& l);

BigInt stabilizer_order(const MatGroup& g, const IntVector& v, std::size_t cap = kDefaultCap);

MatGroup conjugate(const MatGroup& g, const IntMatrix& a);
LatticeBasis restrict_lattice(const LatticeBasis& l, const IntMatrix& a);

std::size_t commutant_dimension(const MatGroup& g);

/// "certified irreducible" for commutant dimension 1, else "not certified".
std::string irreducibility_certificate(const MatGroup& g);

}  // namespace glat
