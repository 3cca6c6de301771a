#pragma once
#include <json.hpp>
#include <string>

#include "modp/kmodule.hpp"

namespace modp {

constexpr int kSchemaVersion = 1;

nlohmann::json module_to_json(const KModule& m);
// generator matrices only; the element action does not survive
KModule module_from_json(const nlohmann::json& j);
std::string dump(const nlohmann::json& j);

nlohmann::json to_json(const Mat2& g);
nlohmann::json to_json(const FpMatrix& m);
nlohmann::json to_json(const CharacterH& c);
nlohmann::json to_json(const WeightLabel& w);

}  // namespace modp
