#include "modp/serialize.hpp"

#include "modp/errors.hpp"

namespace modp {

using nlohmann::json;

json to_json(const Mat2& g) { return json::array({g.a(), g.b(), g.c(), g.d()}); }

json to_json(const FpMatrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (Index j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(std::move(r));
  }
  return rows;
}

json to_json(const CharacterH& c) { return json::array({c.x, c.y}); }
json to_json(const WeightLabel& w) { return json::array({w.r, w.s}); }

json module_to_json(const KModule& m) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["group"] = m.group().name();
  j["prime"] = m.prime();
  j["level"] = m.level();
  j["dim"] = m.dim();
  j["provenance"] = m.provenance();
  j["basis_labels"] = m.basis_labels;
  json gens = json::array();
  const auto all = m.gens().all();
  for (size_t k = 0; k < all.size(); ++k) gens.push_back({{"element", to_json(all[k])}, {"action", to_json(m.gen_action(k))}});
  j["generators"] = std::move(gens);
  return j;
}

KModule module_from_json(const json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion) throw ConfigError("unsupported schema_version");
    SubgroupId g = SubgroupId::parse(j.at("group").get<std::string>());
    i64 p = j.at("prime").get<i64>();
    int level = j.at("level").get<int>();
    Index dim = j.at("dim").get<Index>();
    const auto all = generators(g, p, level).all();
    const json& gens = j.at("generators");
    if (gens.size() != all.size()) throw ConfigError("generator count does not match " + g.name());
    std::vector<FpMatrix> mats;
    for (size_t k = 0; k < all.size(); ++k) {
      auto e = gens[k].at("element").get<std::vector<i64>>();
      if (e.size() != 4 || !(Mat2(e[0], e[1], e[2], e[3], p, level) == all[k]))
        throw ConfigError("generator element mismatch at index " + std::to_string(k));
      const json& a = gens[k].at("action");
      if (Index(a.size()) != dim) throw ConfigError("action matrix has wrong size");
      FpMatrix m(dim, dim);
      for (Index r = 0; r < dim; ++r) {
        auto row = a[r].get<std::vector<i64>>();
        if (Index(row.size()) != dim) throw ConfigError("action matrix has wrong size");
        for (Index c = 0; c < dim; ++c) {
          if (row[c] < 0 || row[c] >= p) throw ConfigError("matrix entry out of range");
          m(r, c) = row[c];
        }
      }
      mats.push_back(std::move(m));
    }
    KModule m(g, p, level, dim, std::move(mats), {}, j.value("provenance", ""));
    m.basis_labels = j.value("basis_labels", std::vector<std::string>{});
    m.validate();
    return m;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed module document: ") + e.what());
  }
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace modp
