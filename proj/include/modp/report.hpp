#pragma once
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace modp {

inline constexpr const char* kToolVersion = "1.0.0";

struct Check {
  std::string name;
  std::string anchor;  // the statement being checked
  bool pass = false;
  nlohmann::json data = nlohmann::json::object();
  nlohmann::json witness;  // null unless something failed
};

struct Report {
  std::string command;
  nlohmann::json config = nlohmann::json::object();
  std::vector<Check> checks;
  std::vector<std::string> warnings;
  nlohmann::json extra;   // command specific payload, e.g. a lattice graph
  nlohmann::json timing;  // null unless timing was requested

  bool pass() const;
  // checks sorted by name, so equal runs give equal bytes
  nlohmann::json to_json() const;
};

// Runs body and turns mathematical failures (theorem violations, inconclusive
// truncations, internal errors) into a failed check with a witness. Config and
// precondition errors propagate.
Check run_check(const std::string& name, const std::string& anchor,
                const std::function<bool(nlohmann::json& data)>& body);

}  // namespace modp
