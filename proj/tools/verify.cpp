// Batch driver for the verification suites.  Links only the C API.

#include <CLI11.hpp>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "spqcc.h"

int main(int argc, char** argv) {
  CLI::App app{"exact verification suites for quantized symplectic conjugacy classes"};
  app.require_subcommand(0, 1);
  app.fallthrough(true);

  std::string suites = "all";
  int n = 2;
  std::string blocks = ";1,1";
  int depth = 8;
  unsigned long long seed = 1;
  bool symbolic_z = false, generic_lambda = false;
  std::string report_dir, gl_eigs;
  bool quiet = false;

  // suite selection doubles as the subcommand
  std::vector<CLI::App*> subs;
  {
    std::string all_names = std::string("all,") + spq_suite_names();
    size_t start = 0;
    while (start < all_names.size()) {
      size_t comma = all_names.find(',', start);
      std::string name =
          all_names.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      subs.push_back(app.add_subcommand(name, "run the '" + name + "' suite"));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
  }
  app.add_option("--n", n, "rank of sp(2n)")->check(CLI::Range(2, 4));
  app.add_option("--blocks", blocks, "block structure \"n1,..,nl;m,p\" (\";1,1\" means l = 0)");
  app.add_option("--depth", depth, "truncation depth D")->check(CLI::Range(1, 12));
  app.add_option("--seed", seed, "seed for the z specialization and property tests");
  app.add_flag("--symbolic-z", symbolic_z, "keep the GL-block parameters symbolic");
  app.add_flag("--generic-lambda", generic_lambda,
               "negative-control mode: the weight condition is not imposed");
  app.add_option("--report-dir", report_dir, "write one JSON report per suite into this directory");
  app.add_option("--gl-eigs", gl_eigs, "extra GL class \"value:mult,...\" for the classical suite");
  bool default_cases = false;
  app.add_flag("--default-cases", default_cases,
               "run the shipped cases (2,\";1,1\") (3,\";1,2\") (3,\";2,1\") (3,\"1;1,1\")");
  app.add_flag("--quiet", quiet, "suppress the summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 64;
  }

  for (CLI::App* sub : subs)
    if (sub->parsed()) suites = sub->get_name();

  struct Case {
    int n;
    const char* blocks;
    int depth;
  };
  std::vector<Case> cases;
  if (default_cases) {
    cases = {{2, ";1,1", 8}, {3, ";1,2", 6}, {3, ";2,1", 6}, {3, "1;1,1", 6}};
  } else {
    cases = {{n, blocks.c_str(), depth}};
  }
  int worst = 0;
  for (const Case& cs : cases) {
    n = cs.n;
    blocks = cs.blocks;
    depth = cs.depth;
    if (default_cases)
      std::printf("== case n=%d blocks=%s depth=%d\n", cs.n, cs.blocks, cs.depth);

  spq_verifier* v = spq_verifier_new();
  auto fail_config = [&](const char* what) {
    std::fprintf(stderr, "error: %s: %s\n", what, spq_verifier_last_error(v));
    spq_verifier_free(v);
    return 64;
  };
  if (spq_verifier_configure(v, "n", std::to_string(n).c_str()) != SPQ_OK)
    return fail_config("n");
  if (spq_verifier_configure(v, "blocks", blocks.c_str()) != SPQ_OK) return fail_config("blocks");
  if (spq_verifier_configure(v, "depth", std::to_string(depth).c_str()) != SPQ_OK)
    return fail_config("depth");
  if (spq_verifier_configure(v, "seed", std::to_string(seed).c_str()) != SPQ_OK)
    return fail_config("seed");
  if (spq_verifier_configure(v, "suites", suites.c_str()) != SPQ_OK) return fail_config("suites");
  if (spq_verifier_configure(v, "symbolic-z", symbolic_z ? "1" : "0") != SPQ_OK)
    return fail_config("symbolic-z");
  if (spq_verifier_configure(v, "generic-lambda", generic_lambda ? "1" : "0") != SPQ_OK)
    return fail_config("generic-lambda");
  if (!gl_eigs.empty() && spq_verifier_configure(v, "gl-eigs", gl_eigs.c_str()) != SPQ_OK)
    return fail_config("gl-eigs");

  spq_status st = spq_verifier_run(v);
  if (st != SPQ_OK) {
    std::fprintf(stderr, "error: %s\n", spq_verifier_last_error(v));
    spq_verifier_free(v);
    return st == SPQ_ERR_INVALID ? 64 : 1;
  }

  if (!report_dir.empty()) {
    std::filesystem::create_directories(report_dir);
    for (size_t i = 0; i < spq_verifier_report_count(v); ++i) {
      std::string name = spq_verifier_report_suite(v, i);
      std::string prefix = default_cases ? "n" + std::to_string(cs.n) + "-" +
                                               std::string(cs.blocks) + "-"
                                         : "";
      for (char& ch : prefix)
        if (ch == ';' || ch == ',') ch = '_';
      std::string path = report_dir + "/" + prefix + std::to_string(i) + "-" + name + ".json";
      std::ofstream out(path, std::ios::binary);
      out << spq_verifier_report_json(v, i);
    }
  }
  if (!quiet) std::fputs(spq_verifier_summary(v), stdout);
  int outcome = spq_verifier_outcome(v);
  spq_verifier_free(v);
  if (outcome == 1) worst = 1;
  else if (outcome == 2 && worst == 0) worst = 2;
  }
  return worst;
}
