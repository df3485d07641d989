#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include "spqcc.h"

TEST_CASE("configure, run, and read reports through the C interface") {
  spq_verifier* v = spq_verifier_new();
  REQUIRE(v != nullptr);
  CHECK(spq_verifier_configure(v, "n", "2") == SPQ_OK);
  CHECK(spq_verifier_configure(v, "blocks", ";1,1") == SPQ_OK);
  CHECK(spq_verifier_configure(v, "depth", "5") == SPQ_OK);
  CHECK(spq_verifier_configure(v, "seed", "3") == SPQ_OK);
  CHECK(spq_verifier_configure(v, "suites", "scalars,rootdata,singular") == SPQ_OK);
  CHECK(spq_verifier_run(v) == SPQ_OK);
  CHECK(spq_verifier_outcome(v) == SPQ_RUN_PASS);
  REQUIRE(spq_verifier_report_count(v) == 3);
  CHECK(std::string(spq_verifier_report_suite(v, 0)) == "scalars");
  CHECK(std::string(spq_verifier_report_suite(v, 2)) == "singular");
  std::string json = spq_verifier_report_json(v, 2);
  CHECK(json.find("\"suite\": \"singular\"") != std::string::npos);
  CHECK(json.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(std::strlen(spq_verifier_summary(v)) > 0);
  spq_verifier_free(v);
}

TEST_CASE("error paths") {
  spq_verifier* v = spq_verifier_new();
  CHECK(spq_verifier_configure(v, "bogus", "1") == SPQ_ERR_INVALID);
  CHECK(std::strlen(spq_verifier_last_error(v)) > 0);
  CHECK(spq_verifier_configure(v, "n", "17") == SPQ_ERR_INVALID);
  CHECK(spq_verifier_configure(v, "n", "3") == SPQ_OK);
  CHECK(spq_verifier_configure(v, "blocks", "nonsense") == SPQ_OK);  // validated at run
  CHECK(spq_verifier_run(v) == SPQ_ERR_INVALID);
  CHECK(std::strlen(spq_verifier_last_error(v)) > 0);
  // depth too small for the Q suites
  CHECK(spq_verifier_configure(v, "blocks", ";1,2") == SPQ_OK);
  CHECK(spq_verifier_configure(v, "depth", "2") == SPQ_OK);
  CHECK(spq_verifier_configure(v, "suites", "minpoly") == SPQ_OK);
  CHECK(spq_verifier_run(v) == SPQ_ERR_INVALID);
  spq_verifier_free(v);
}

TEST_CASE("metadata") {
  CHECK(std::strlen(spq_version()) > 0);
  std::string names = spq_suite_names();
  CHECK(names.find("minpoly") != std::string::npos);
  CHECK(names.find("classical") != std::string::npos);
}
