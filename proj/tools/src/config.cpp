#include <cmath>
#include <filesystem>
#include <numbers>

#include "bergmod/experiments.hpp"

namespace bergmod::cli {

namespace {

Json vec(std::initializer_list<std::pair<double, double>> entries) {
  Json a = Json::array();
  for (const auto& [re, im] : entries) a.push_back(Json::array({re, im}));
  return a;
}

Json common_defaults(const std::string& scenario) {
  return Json{{"scenario", scenario},
              {"seed", 20240611u},
              {"expected_verdict", nullptr},
              {"output", {{"dir", "bergmod-out"}, {"stem", scenario}}},
              {"margin", 0.05},
              {"sample", {{"count", 200}, {"rho_max", 0.95}, {"scheme", "stratified"}, {"separation", 0.2}}},
              {"ladder", Json::array({0.9, 0.99, 0.999})}};
}

void require(bool ok, const std::string& message) {
  if (!ok) throw SchemaError(message);
}

void check_number(const Json& j, const char* key, const std::string& where) {
  require(j.contains(key) && j.at(key).is_number(), where + "." + key + " must be a number");
}

void validate_common(const Json& c) {
  require(c.at("seed").is_number_unsigned(), "seed must be a nonnegative integer");
  require(c.at("expected_verdict").is_null() || c.at("expected_verdict").is_string(),
          "expected_verdict must be a string or null");
  require(c.at("output").is_object() && c.at("output").at("dir").is_string() && c.at("output").at("stem").is_string(),
          "output must hold string fields dir and stem");
  check_number(c, "margin", "config");
  const double margin = c.at("margin").get<double>();
  require(margin > 0.0 && margin < 1.0, "margin must lie in (0,1)");
  const Json& s = c.at("sample");
  require(s.is_object(), "sample must be an object");
  require(s.at("count").is_number_integer() && s.at("count").get<long long>() >= 1, "sample.count must be >= 1");
  check_number(s, "rho_max", "sample");
  require(s.at("rho_max").get<double>() > 0.0 && s.at("rho_max").get<double>() < 1.0, "sample.rho_max must lie in (0,1)");
  require(s.at("scheme") == "stratified" || s.at("scheme") == "separated-net",
          "sample.scheme must be stratified or separated-net");
  check_number(s, "separation", "sample");
  const Json& ladder = c.at("ladder");
  require(ladder.is_array() && !ladder.empty(), "ladder must be a nonempty array");
  double prev = 0.0;
  for (const auto& v : ladder) {
    require(v.is_number(), "ladder entries must be numbers");
    const double x = v.get<double>();
    require(x > prev && x < 1.0, "ladder must increase strictly within (0,1)");
    prev = x;
  }
}

}  // namespace

Json default_config(const std::string& scenario) {
  Json c = common_defaults(scenario);
  const double pi = std::numbers::pi;
  if (scenario == "identities") {
    c["identities"] = {{"dims", {2, 3}}, {"samples", 10000}, {"tolerance", 1e-12}};
  } else if (scenario == "linear-pair") {
    c["expected_verdict"] = "closed";
    c["linear_pair"] = {{"line_angles", {pi / 6, pi / 4, pi / 3, pi / 2}}, {"plane_angles", {pi / 3}}};
  } else if (scenario == "boundary-pair") {
    c["expected_verdict"] = "not-closed";
    c["boundary_pair"] = {{"slope", {1.0, 0.0}}, {"witness_r", {0.9, 0.99, 0.999}}};
  } else if (scenario == "decompose") {
    // Two 2-planes in C^3 sharing the e1 axis; free directions at angle pi/3.
    c["expected_verdict"] = "positive";
    const double cs = std::cos(pi / 3), sn = std::sin(pi / 3);
    c["decompose"] = {
        {"varieties",
         {{{"kind", "linear"}, {"ambient_dim", 3}, {"basis", {vec({{1, 0}, {0, 0}, {0, 0}}), vec({{0, 0}, {1, 0}, {0, 0}})}}},
          {{"kind", "linear"},
           {"ambient_dim", 3},
           {"basis", {vec({{1, 0}, {0, 0}, {0, 0}}), vec({{0, 0}, {cs, 0}, {sn, 0}})}}}}},
        {"intersection", nullptr},
        {"boundary_points",
         {vec({{1, 0}, {0, 0}, {0, 0}}), vec({{std::cos(pi / 4), std::sin(pi / 4)}, {0, 0}, {0, 0}})}},
        {"q3_source", "auto"},
        {"sampled_check", true}};
  } else if (scenario == "carleson") {
    c["expected_verdict"] = "carleson";
    c["carleson"] = {{"measure", {{"source", "lebesgue"}, {"ambient_dim", 1}, {"grid", {{"radial", 128}, {"angular", 2048}}}}},
                     {"r", 1.0},
                     {"shells", {0.0, 0.5, 0.9, 0.99}},
                     {"corpus_degree", 2}};
  } else {
    throw SchemaError("unknown scenario '" + scenario + "'");
  }
  return c;
}

Json resolve_config(const std::string& scenario, const Json& user, const Overrides& overrides,
                    const std::string& base_dir) {
  Json c = default_config(scenario);
  if (!user.is_null()) {
    require(user.is_object(), "config must be a JSON object");
    if (user.contains("scenario"))
      require(user.at("scenario") == scenario, "config scenario does not match the requested subcommand");
    c.merge_patch(user);
    if (!c.contains("expected_verdict")) c["expected_verdict"] = nullptr;
  }
  if (overrides.out_dir) c["output"]["dir"] = *overrides.out_dir;
  if (overrides.seed) c["seed"] = *overrides.seed;
  if (overrides.ladder) c["ladder"] = *overrides.ladder;
  validate_common(c);

  if (scenario == "identities") {
    const Json& s = c.at("identities");
    require(s.at("dims").is_array() && !s.at("dims").empty(), "identities.dims must be a nonempty array");
    for (const auto& d : s.at("dims")) require(d.is_number_integer() && d.get<int>() >= 1, "identities.dims entries must be positive");
    require(s.at("samples").is_number_integer() && s.at("samples").get<long long>() >= 1, "identities.samples must be >= 1");
    check_number(s, "tolerance", "identities");
  } else if (scenario == "linear-pair") {
    const Json& s = c.at("linear_pair");
    for (const char* key : {"line_angles", "plane_angles"}) {
      require(s.at(key).is_array(), std::string("linear_pair.") + key + " must be an array");
      for (const auto& a : s.at(key)) require(a.is_number(), "angles must be numbers");
    }
  } else if (scenario == "boundary-pair") {
    const Json& s = c.at("boundary_pair");
    require(s.at("witness_r").is_array(), "boundary_pair.witness_r must be an array");
  } else if (scenario == "decompose") {
    const Json& s = c.at("decompose");
    require(s.at("varieties").is_array() && s.at("varieties").size() == 2, "decompose.varieties must hold two varieties");
    require(s.at("boundary_points").is_array() && !s.at("boundary_points").empty(),
            "decompose.boundary_points must be a nonempty array");
    const std::string q3 = s.at("q3_source").get<std::string>();
    require(q3 == "auto" || q3 == "projected-samples" || q3 == "intersection-samples",
            "decompose.q3_source must be auto, projected-samples or intersection-samples");
  } else if (scenario == "carleson") {
    Json& s = c.at("carleson");
    Json& m = s.at("measure");
    require(m.is_object() && m.contains("source") && m.at("source").is_string(), "carleson.measure.source is required");
    if (m.at("source") == "csv") {
      require(m.contains("path") && m.at("path").is_string(), "carleson.measure.path is required for csv sources");
      std::filesystem::path p = m.at("path").get<std::string>();
      if (p.is_relative()) p = std::filesystem::path(base_dir) / p;
      p = p.lexically_normal();
      require(std::filesystem::exists(p), "measure file does not exist: " + p.string());
      m["path"] = p.generic_string();
    }
    check_number(s, "r", "carleson");
    require(s.at("r").get<double>() > 0.0, "carleson.r must be positive");
    require(s.at("shells").is_array() && s.at("shells").size() >= 3, "carleson.shells needs at least three radii");
    require(s.at("corpus_degree").is_number_integer() && s.at("corpus_degree").get<int>() >= 0,
            "carleson.corpus_degree must be a nonnegative integer");
  }
  return c;
}

}  // namespace bergmod::cli
