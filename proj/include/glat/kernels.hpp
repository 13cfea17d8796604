#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "glat/int_matrix.hpp"

namespace glat::kernels {

// Breadth-first enumeration kernels. The serial versions are the reference;
// the parallel versions expand each BFS level with OpenMP and merge images in
// (frontier position, generator index) order, so both return the same
// sequence. Entries are processed in int64 with overflow checks and the whole
// computation is redone in GMP arithmetic on the first overflow.

/// Orbit of v under the matrices in gens (acting on column vectors), in BFS order.
std::vector<IntVector> orbit_serial(std::span<const IntMatrix> gens, const IntVector& v,
                                    std::size_t cap);
std::vector<IntVector> orbit_parallel(std::span<const IntMatrix> gens, const IntVector& v,
                                      std::size_t cap);

/// All products of generators (identity first), in BFS order of right multiplication.
std::vector<IntMatrix> closure_serial(std::span<const IntMatrix> gens, std::size_t dim,
                                      std::size_t cap);
std::vector<IntMatrix> closure_parallel(std::span<const IntMatrix> gens, std::size_t dim,
                                        std::size_t cap);

/// Number of OpenMP threads the parallel kernels will use.
int thread_count();

}  // namespace glat::kernels
