#include <chrono>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "bergmod/csv.hpp"
#include "bergmod/experiments.hpp"

namespace bergmod::cli {

namespace {

constexpr const char* kToolName = "bergmod";
constexpr const char* kToolVersion = "0.1.0";

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open '" + path.string() + "' for writing");
  f << text;
  if (!f) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace

RunOutcome execute(const std::string& scenario, const Json& config) {
  ScenarioResult res = run_scenario(scenario, config);

  const Json& expected = config.at("expected_verdict");
  const bool has_expected = !expected.is_null();
  const bool matches = !has_expected || expected.get<std::string>() == res.verdict;

  Json report;
  report["header"] = {{"tool", kToolName}, {"version", kToolVersion}, {"generated_at", utc_timestamp()}};
  report["scenario"] = scenario;
  report["config"] = config;
  report["results"] = res.results;
  report["verdict"] = res.verdict;
  report["expected_verdict"] = expected;
  report["verdict_matches"] = has_expected ? Json(matches) : Json(nullptr);
  if (res.passed) report["passed"] = *res.passed;

  const std::filesystem::path dir = config.at("output").at("dir").get<std::string>();
  const std::string stem = config.at("output").at("stem").get<std::string>();
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "': " + ec.message());

  RunOutcome out;
  out.report_path = (dir / (stem + ".json")).string();
  write_text(out.report_path, report.dump(2) + "\n");
  for (const auto& t : res.tables) {
    std::ostringstream os;
    csv::write_row(os, t.header);
    for (const auto& row : t.rows) csv::write_row(os, row);
    const auto path = dir / (stem + "-" + t.name + ".csv");
    write_text(path, os.str());
    out.table_paths.push_back(path.string());
  }
  out.verdict = res.verdict;
  out.exit_code = (matches && res.passed.value_or(true)) ? 0 : 1;
  out.report = std::move(report);
  return out;
}

std::string strip_header(const std::string& report_text) {
  Json j;
  try {
    j = Json::parse(report_text);
  } catch (const Json::parse_error& e) {
    throw SchemaError(std::string("report is not valid JSON: ") + e.what());
  }
  j.erase("header");
  return j.dump();
}

}  // namespace bergmod::cli
