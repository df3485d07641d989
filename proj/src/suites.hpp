#pragma once

#include "classical.hpp"

namespace spq {

struct RunConfig {
  int n = 2;
  std::string blocks = ";1,1";
  int depth = 8;
  uint64_t seed = 1;
  bool symbolic_z = false;
  bool generic_lambda = false;
  std::vector<std::string> suites = {"all"};
  std::string gl_eigs;  // optional extra GL case "v:mult,v:mult"
};

// Dependency-ordered names of all suites.
const std::vector<std::string>& suite_names();
// Every anchor string the suite registry can emit (the coverage rows).
const std::vector<std::string>& all_anchors();

struct RunResult {
  std::vector<Report> reports;
  // 0 all pass, 1 some failure, 2 inconclusive only
  int exit_code() const;
  std::string summary() const;
};

RunResult run_suites(const RunConfig& cfg);

// Self-test suites that do not need an Engine.
Report suite_scalars(uint64_t seed);
Report suite_rootdata(const RunConfig& cfg);

}  // namespace spq
