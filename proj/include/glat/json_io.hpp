#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include <json.hpp>

#include "glat/int_matrix.hpp"
#include "glat/lattice.hpp"
#include "glat/matgroup.hpp"

namespace glat {

using Json = nlohmann::ordered_json;

// Matrices: {"rows": r, "cols": c, "entries": ["..", ...]} row-major decimal strings.
// Vectors:  {"dim": n, "entries": [...]}.
// Groups:   {"dim": n, "generators": [matrix...], "gram": matrix?, "label": string?}.

Json to_json(const BigInt& x);
Json to_json(const IntVector& v);
Json to_json(const IntMatrix& m);
Json to_json(const LatticeBasis& l);

BigInt bigint_from_json(const Json& j);
IntVector vector_from_json(const Json& j);
IntMatrix matrix_from_json(const Json& j);

/// Lattice file: a matrix whose rows span the lattice.
LatticeBasis lattice_from_json(const Json& j);

struct GroupFile {
  MatGroup group;
  std::optional<IntMatrix> gram;
  std::string label;
};

GroupFile group_from_json(const Json& j);
Json to_json(const MatGroup& g, const std::optional<IntMatrix>& gram = std::nullopt,
             const std::string& label = "");

Json read_json_file(const std::filesystem::path& path);

}  // namespace glat
