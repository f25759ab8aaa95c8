#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bergmod/serialization.hpp"

namespace bergmod::cli {

using io::Json;

inline const std::vector<std::string> kScenarios = {"identities", "linear-pair", "boundary-pair", "decompose",
                                                    "carleson"};

struct Overrides {
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  std::optional<std::vector<double>> ladder;
};

// Built-in configuration for a scenario.
Json default_config(const std::string& scenario);

// Merges a user config over the defaults, applies overrides and validates.
// Relative measure paths are resolved against `base_dir`.
Json resolve_config(const std::string& scenario, const Json& user, const Overrides& overrides,
                    const std::string& base_dir = ".");

struct CsvTable {
  std::string name;  // file suffix, e.g. "sweep"
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

struct ScenarioResult {
  Json results;
  std::string verdict;
  // Set when the scenario has its own pass/fail criterion (identities).
  std::optional<bool> passed;
  std::vector<CsvTable> tables;
};

ScenarioResult run_identities(const Json& config);
ScenarioResult run_linear_pair(const Json& config);
ScenarioResult run_boundary_pair(const Json& config);
ScenarioResult run_decompose(const Json& config);
ScenarioResult run_carleson(const Json& config);
ScenarioResult run_scenario(const std::string& scenario, const Json& config);

struct RunOutcome {
  int exit_code = 0;
  std::string report_path;
  std::vector<std::string> table_paths;
  std::string verdict;
  Json report;
};

// Runs a resolved config and writes <out>/<stem>.json plus one CSV per table.
// Exit code 0 iff the verdict matches expected_verdict (when given) and the
// scenario's own checks passed; 1 otherwise.
RunOutcome execute(const std::string& scenario, const Json& config);

// The report with its timestamp header removed, serialized; equal for
// identical configs.
std::string strip_header(const std::string& report_text);

}  // namespace bergmod::cli
