#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "glat/bounds.hpp"
#include "glat/errors.hpp"
#include "glat/json_io.hpp"

namespace glat {

enum class Format { Text, Csv, Json };
/// Throws InvalidArgument.
Format parse_format(const std::string& s);

struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

struct FixtureComparison {
  Json expected;
  Json got;
  bool match;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFixtureMismatch = 2;
inline constexpr int kExitMissingData = 3;
inline constexpr int kExitCapExceeded = 4;

struct RunReport {
  std::string command;
  Json parameters = Json::object();
  Json result = Json::object();
  Table table;
  std::optional<FixtureComparison> fixture_comparison;
  std::vector<std::string> missing_data;
  int exit_code = kExitOk;

  Json to_json() const;
};

/// Text output is the table followed by a one-line summary.
std::string render(const Table& t, Format f);
std::string render(const RunReport& r, Format f);

/// --data flag, then SYMRANK_DATA_DIR, then the bundled directory.
std::filesystem::path resolve_data_dir(const std::optional<std::string>& flag);

RunReport cmd_rootsys_table(int max_rank, int bd_max_rank, const std::filesystem::path& data);
RunReport cmd_rdim_table(int max_n, const std::filesystem::path& data);
RunReport cmd_theta(const std::filesystem::path& gram_file, unsigned long horizon, bool diagonal,
                    std::size_t cap);
RunReport cmd_gf2_factor(unsigned long p);
RunReport cmd_gf2_subspaces(unsigned long p);
RunReport cmd_monomial_classify(unsigned long p);
/// mode: "exact", "orbit:v1,v2,...", "diagonal-theta".
RunReport cmd_symrank(const std::filesystem::path& group_file, const std::optional<std::filesystem::path>& lattice_file,
                      unsigned long radius, const std::string& mode, std::size_t cap);
RunReport cmd_bounds_prime(unsigned long a, const std::optional<std::string>& case_name, unsigned long horizon,
                           unsigned long l);
RunReport cmd_bounds_almost_simple(const std::filesystem::path& data_file, const ScanCaps& caps);
RunReport cmd_bounds_prime_of_form(unsigned long q_max, unsigned long m_max);
/// name in {low-dims, prop515, thmA, thmA2, almost-simple}.
/// imf overrides <data>/imf for low-dims.
RunReport cmd_verify(const std::string& name, const std::filesystem::path& data, std::size_t cap,
                     const std::optional<std::filesystem::path>& imf = std::nullopt);

}  // namespace glat
