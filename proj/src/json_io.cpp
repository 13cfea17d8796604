#include "glat/json_io.hpp"

#include <fstream>

#include "glat/errors.hpp"

namespace glat {

Json to_json(const BigInt& x) { return x.get_str(); }

Json to_json(const IntVector& v) {
  Json entries = Json::array();
  for (const auto& e : v.entries()) entries.push_back(e.get_str());
  return Json{{"dim", v.dim()}, {"entries", std::move(entries)}};
}

Json to_json(const IntMatrix& m) {
  Json entries = Json::array();
  for (const auto& e : m.data()) entries.push_back(e.get_str());
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json to_json(const LatticeBasis& l) { return to_json(l.basis()); }

BigInt bigint_from_json(const Json& j) {
  try {
    if (j.is_string()) return BigInt(j.get<std::string>());
    if (j.is_number_integer()) return BigInt(std::to_string(j.get<long long>()));
  } catch (const std::invalid_argument&) {
  }
  throw FormatError("expected an integer or decimal string, got " + j.dump());
}

IntVector vector_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("entries")) throw FormatError("vector JSON needs \"entries\"");
  std::vector<BigInt> e;
  for (const auto& x : j.at("entries")) e.push_back(bigint_from_json(x));
  if (j.contains("dim") && j.at("dim").get<std::size_t>() != e.size())
    throw FormatError("vector \"dim\" does not match entry count");
  return IntVector(std::move(e));
}

IntMatrix matrix_from_json(const Json& j) {
  if (j.is_array()) {
    // Nested rows, as GAP prints them.
    std::vector<BigInt> e;
    std::size_t cols = j.empty() ? 0 : j.at(0).size();
    for (const auto& row : j) {
      if (!row.is_array() || row.size() != cols) throw FormatError("matrix rows must be arrays of equal length");
      for (const auto& x : row) e.push_back(bigint_from_json(x));
    }
    return IntMatrix(j.size(), cols, std::move(e));
  }
  if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw FormatError("matrix JSON needs \"rows\", \"cols\", \"entries\"");
  const auto rows = j.at("rows").get<std::size_t>();
  const auto cols = j.at("cols").get<std::size_t>();
  std::vector<BigInt> e;
  for (const auto& x : j.at("entries")) e.push_back(bigint_from_json(x));
  if (e.size() != rows * cols) throw FormatError("matrix entry count is not rows * cols");
  return IntMatrix(rows, cols, std::move(e));
}

LatticeBasis lattice_from_json(const Json& j) { return hnf(matrix_from_json(j)); }

GroupFile group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("generators"))
    throw FormatError("group JSON needs \"dim\" and \"generators\"");
  const auto dim = j.at("dim").get<std::size_t>();
  std::vector<IntMatrix> gens;
  for (const auto& g : j.at("generators")) gens.push_back(matrix_from_json(g));
  GroupFile out{MatGroup(dim, std::move(gens)), std::nullopt, ""};
  if (j.contains("gram") && !j.at("gram").is_null()) out.gram = matrix_from_json(j.at("gram"));
  if (j.contains("label") && j.at("label").is_string()) out.label = j.at("label").get<std::string>();
  return out;
}

Json to_json(const MatGroup& g, const std::optional<IntMatrix>& gram, const std::string& label) {
  Json gens = Json::array();
  for (const auto& h : g.generators()) gens.push_back(to_json(h));
  Json out{{"dim", g.dim()}, {"generators", std::move(gens)}};
  if (gram) out["gram"] = to_json(*gram);
  if (!label.empty()) out["label"] = label;
  return out;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MissingExternalData("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

}  // namespace glat
