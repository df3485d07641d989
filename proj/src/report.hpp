#pragma once

#include <string>
#include <vector>

namespace spq {

struct Check {
  std::string anchor;   // the identity being verified
  std::string name;     // concrete instance
  std::string status;   // "pass" | "fail" | "inconclusive"
  std::string witness;  // offending slice / vector on failure, optional
};

struct Report {
  std::string suite;
  int n = 0;
  std::string blocks;
  int depth = 0;
  std::string mode;  // "kappa" | "generic-lambda", plus z disposition
  uint64_t seed = 0;
  std::vector<Check> checks;

  void add(const std::string& anchor, const std::string& name, bool ok,
           const std::string& witness = "");
  void add_status(const std::string& anchor, const std::string& name, const std::string& status,
                  const std::string& witness = "");
  bool passed() const;
  bool inconclusive() const;
  std::string to_json() const;
};

}  // namespace spq
