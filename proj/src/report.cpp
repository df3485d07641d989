#include "report.hpp"

#include <json.hpp>

namespace spq {

void Report::add(const std::string& anchor, const std::string& name, bool ok,
                 const std::string& witness) {
  checks.push_back(Check{anchor, name, ok ? "pass" : "fail", witness});
}

void Report::add_status(const std::string& anchor, const std::string& name,
                        const std::string& status, const std::string& witness) {
  checks.push_back(Check{anchor, name, status, witness});
}

bool Report::passed() const {
  for (const auto& c : checks)
    if (c.status != "pass") return false;
  return true;
}

bool Report::inconclusive() const {
  bool some = false;
  for (const auto& c : checks) {
    if (c.status == "fail") return false;
    some = some || c.status == "inconclusive";
  }
  return some;
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["case"] = {{"n", n}, {"blocks", blocks}, {"depth", depth}, {"mode", mode}, {"seed", seed}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["anchor"] = c.anchor;
    jc["name"] = c.name;
    jc["status"] = c.status;
    if (!c.witness.empty()) jc["witness"] = c.witness;
    j["checks"].push_back(jc);
  }
  return j.dump(2) + "\n";
}

}  // namespace spq
