#include "bergmod/serialization.hpp"

#include <variant>

namespace bergmod::io {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) throw SchemaError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Json polynomial_to_json(const Polynomial& p) {
  Json terms = Json::array();
  for (const auto& [alpha, c] : p.terms()) terms.push_back({{"exponent", alpha}, {"coeff", to_json(c)}});
  return terms;
}

Polynomial polynomial_from_json(const Json& j, int vars) {
  if (!j.is_array()) throw SchemaError("polynomial must be an array of terms");
  Polynomial p(vars);
  for (const auto& t : j) {
    const auto alpha = field(t, "exponent").get<std::vector<int>>();
    if (static_cast<int>(alpha.size()) != vars) throw SchemaError("polynomial exponent has wrong length");
    for (int a : alpha)
      if (a < 0) throw SchemaError("polynomial exponent must be nonnegative");
    p.add_term(alpha, complex_from_json(field(t, "coeff")));
  }
  return p;
}

}  // namespace

Json to_json(cplx c) { return Json::array({c.real(), c.imag()}); }

Json to_json(const CVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(to_json(v[i]));
  return a;
}

cplx complex_from_json(const Json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SchemaError("complex numbers must be [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

CVector vector_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("vector must be an array of [re, im] pairs");
  CVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v[static_cast<Eigen::Index>(i)] = complex_from_json(j[i]);
  return v;
}

CMatrix columns_from_json(const Json& j, int n) {
  if (!j.is_array()) throw SchemaError("expected an array of vectors");
  CMatrix m(n, static_cast<Eigen::Index>(j.size()));
  for (std::size_t k = 0; k < j.size(); ++k) {
    const CVector v = vector_from_json(j[k]);
    if (v.size() != n) throw SchemaError("vector length does not match ambient_dim");
    m.col(static_cast<Eigen::Index>(k)) = v;
  }
  return m;
}

Json columns_to_json(const CMatrix& m) {
  Json a = Json::array();
  for (Eigen::Index k = 0; k < m.cols(); ++k) a.push_back(to_json(CVector(m.col(k))));
  return a;
}

Variety variety_from_json(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  const int n = int_field(j, "ambient_dim");
  if (n < 1) throw SchemaError("ambient_dim must be positive");
  try {
    if (kind == "linear") return LinearVariety::span(columns_from_json(field(j, "basis"), n));
    if (kind == "affine") {
      const CVector base = vector_from_json(field(j, "base"));
      if (base.size() != n) throw SchemaError("affine base has wrong length");
      return AffineVariety(base, LinearVariety::span(columns_from_json(field(j, "direction"), n)));
    }
    if (kind == "graph") {
      const int d = int_field(j, "dim");
      if (d < 0 || d > n) throw SchemaError("graph dim must lie in [0, ambient_dim]");
      std::vector<Polynomial> comps;
      for (const auto& c : field(j, "components")) comps.push_back(polynomial_from_json(c, d));
      if (j.contains("chart")) return GraphVariety(d, std::move(comps), columns_from_json(j.at("chart"), n));
      if (static_cast<int>(comps.size()) != n - d) throw SchemaError("graph needs ambient_dim - dim components");
      return GraphVariety(d, std::move(comps));
    }
  } catch (const PreconditionError& e) {
    throw SchemaError(std::string("invalid ") + kind + " variety: " + e.what());
  }
  throw SchemaError("unknown variety kind '" + kind + "'");
}

Json variety_to_json(const Variety& v) {
  return std::visit(
      Overloaded{[](const LinearVariety& x) {
                   return Json{{"kind", "linear"}, {"ambient_dim", x.ambient_dim()}, {"basis", columns_to_json(x.basis())}};
                 },
                 [](const AffineVariety& x) {
                   return Json{{"kind", "affine"},
                               {"ambient_dim", x.ambient_dim()},
                               {"base", to_json(x.base())},
                               {"direction", columns_to_json(x.direction().basis())}};
                 },
                 [](const GraphVariety& x) {
                   Json comps = Json::array();
                   for (const auto& p : x.components()) comps.push_back(polynomial_to_json(p));
                   return Json{{"kind", "graph"},
                               {"ambient_dim", x.ambient_dim()},
                               {"dim", x.dim()},
                               {"components", comps},
                               {"chart", columns_to_json(x.chart())}};
                 }},
      v);
}

Json to_json(const LinearVariety& v) { return variety_to_json(Variety(v)); }

Json to_json(const AngleReport& r) {
  return Json{{"cos_angle", r.cos_angle},
              {"norm_21", r.norm_21},
              {"norm_121", r.norm_121},
              {"rank1", r.rank1},
              {"rank2", r.rank2},
              {"rank3", r.rank3},
              {"union_rank", r.union_rank},
              {"identity_residual", r.identity_residual},
              {"gram_residual", r.gram_residual},
              {"rank_collapse", r.rank_collapse},
              {"margin", r.margin},
              {"verdict", to_string(r.verdict)},
              {"note", r.note}};
}

Json to_json(const CarlesonReport& r) {
  Json rungs = Json::array();
  for (std::size_t k = 0; k < r.kernel_rungs.size(); ++k)
    rungs.push_back({{"shells", r.rung_shells[k]},
                     {"sup_kernel", r.kernel_rungs[k]},
                     {"sup_ratio", r.ratio_rungs[k]},
                     {"embedding_ratio", r.embedding_rungs[k]}});
  return Json{{"grid",
               {{"dim", r.dim},
                {"shells", r.shells},
                {"directions_per_shell", r.directions},
                {"measure_points", r.measure_points},
                {"measure_mass", r.measure_mass},
                {"corpus_size", r.corpus_size}}},
              {"r", r.r},
              {"sup_kernel", r.sup_kernel},
              {"sup_ratio", r.sup_ratio},
              {"embedding_ratio", r.embedding_ratio},
              {"ladder", rungs},
              {"verdicts",
               {{"kernel", to_string(r.kernel_verdict)},
                {"ratio", to_string(r.ratio_verdict)},
                {"embedding", to_string(r.embedding_verdict)}}},
              {"verdict", r.verdict},
              {"heuristic", "finite grids cannot certify; verdicts describe trends across the shell ladder"}};
}

}  // namespace bergmod::io
