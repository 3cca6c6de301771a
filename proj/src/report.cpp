#include "modp/report.hpp"

#include <algorithm>

#include "modp/errors.hpp"

namespace modp {

bool Report::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

nlohmann::json Report::to_json() const {
  std::vector<const Check*> sorted;
  for (const auto& c : checks) sorted.push_back(&c);
  std::stable_sort(sorted.begin(), sorted.end(), [](const Check* a, const Check* b) { return a->name < b->name; });
  nlohmann::json j;
  j["schema_version"] = 1;
  j["tool_version"] = kToolVersion;
  j["command"] = command;
  j["config"] = config;
  j["pass"] = pass();
  j["warnings"] = warnings;
  j["checks"] = nlohmann::json::array();
  for (const Check* c : sorted) {
    nlohmann::json cj{{"name", c->name}, {"anchor", c->anchor}, {"pass", c->pass}, {"data", c->data}};
    if (!c->witness.is_null()) cj["witness"] = c->witness;
    j["checks"].push_back(cj);
  }
  if (!extra.is_null()) j["result"] = extra;
  if (!timing.is_null()) j["timing"] = timing;
  return j;
}

Check run_check(const std::string& name, const std::string& anchor,
                const std::function<bool(nlohmann::json& data)>& body) {
  Check c;
  c.name = name;
  c.anchor = anchor;
  auto fail = [&](const char* kind, const std::exception& e) {
    c.pass = false;
    c.witness = {{"error", kind}, {"message", e.what()}};
  };
  try {
    c.pass = body(c.data);
    if (!c.pass) c.witness = {{"error", "mismatch"}, {"message", "computed data differs from the expected values"}};
  } catch (const ConfigError&) {
    throw;
  } catch (const PreconditionError&) {
    throw;
  } catch (const TheoremViolation& e) {
    fail("theorem_violation", e);
  } catch (const InconclusiveTruncation& e) {
    fail("inconclusive_truncation", e);
  } catch (const InternalError& e) {
    fail("internal_error", e);
  } catch (const Error& e) {
    fail("error", e);
  }
  return c;
}

}  // namespace modp
