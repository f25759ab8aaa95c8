#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "bergmod/experiments.hpp"

namespace {

using bergmod::cli::Json;

std::vector<double> parse_ladder(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
    if (used == 0 || used != item.size()) throw bergmod::SchemaError("--ladder: cannot parse '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) throw bergmod::SchemaError("--ladder: empty list");
  return out;
}

Json load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw bergmod::IoError("cannot open config '" + path + "'");
  try {
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw bergmod::SchemaError("config '" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kernel-span experiments on the Bergman space of the unit ball"};
  app.require_subcommand(1);

  std::string config_path, out_dir, ladder_text;
  std::uint64_t seed = 0;
  for (const auto& name : bergmod::cli::kScenarios) {
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " scenario");
    sub->add_option("--config", config_path, "JSON config merged over the built-in defaults")->check(CLI::ExistingFile);
    sub->add_option("--out", out_dir, "output directory");
    sub->add_option("--seed", seed, "root seed (overrides the config)");
    sub->add_option("--ladder", ladder_text, "comma-separated rho_max ladder, e.g. 0.9,0.99,0.999");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const CLI::App* sub = app.get_subcommands().front();
  const std::string scenario = sub->get_name();
  try {
    Json user = Json::object();
    std::string base_dir = ".";
    if (!config_path.empty()) {
      user = load_config(config_path);
      base_dir = std::filesystem::path(config_path).parent_path().string();
      if (base_dir.empty()) base_dir = ".";
    }
    bergmod::cli::Overrides ov;
    if (sub->count("--out")) ov.out_dir = out_dir;
    if (sub->count("--seed")) ov.seed = seed;
    if (sub->count("--ladder")) ov.ladder = parse_ladder(ladder_text);

    const Json config = bergmod::cli::resolve_config(scenario, user, ov, base_dir);
    const auto outcome = bergmod::cli::execute(scenario, config);
    std::cout << scenario << ": verdict " << outcome.verdict;
    const Json& expected = config.at("expected_verdict");
    if (!expected.is_null()) std::cout << " (expected " << expected.get<std::string>() << ")";
    std::cout << "\nreport: " << outcome.report_path << "\n";
    for (const auto& p : outcome.table_paths) std::cout << "table:  " << p << "\n";
    if (outcome.exit_code != 0) std::cerr << scenario << ": check failed\n";
    return outcome.exit_code;
  } catch (const bergmod::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
