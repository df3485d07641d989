#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "classical.hpp"

using namespace spq;

namespace {

long reported_kernel(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) {
      auto pos = c.witness.find("kernel dim ");
      REQUIRE(pos != std::string::npos);
      return std::stol(c.witness.substr(pos + 11));
    }
  REQUIRE(false);
  return -1;
}

}  // namespace

TEST_CASE("general linear classes") {
  {
    Report r = suite_classical_gl(ClassSpec::gl({{Gauss(2), 1}, {Gauss(3), 1}}));
    CHECK(r.passed());
    CHECK(reported_kernel(r, "kernel of dF at the initial point has the orbit dimension") == 2);
  }
  {
    Report r = suite_classical_gl(ClassSpec::gl({{Gauss(2), 2}, {Gauss(3), 1}}));
    CHECK(r.passed());
    CHECK(reported_kernel(r, "kernel of dF at the initial point has the orbit dimension") == 4);
  }
  {
    // scalar matrix: zero-dimensional orbit, injective differential
    Report r = suite_classical_gl(ClassSpec::gl({{Gauss(5), 3}}));
    CHECK(r.passed());
    CHECK(reported_kernel(r, "kernel of dF at the initial point has the orbit dimension") == 0);
  }
  CHECK_THROWS_AS(suite_classical_gl(ClassSpec::gl({{Gauss(2), 1}, {Gauss(2), 2}})), Error);
}

TEST_CASE("symplectic classes via the engine") {
  {
    Engine e(2, BlockStructure::parse(2, ";1,1"), WeightMode::kappa, 1, false, 3);
    Report r = suite_classical(e);
    CHECK(r.passed());
    CHECK(reported_kernel(r, "kernel of dH + dF at o equals the class dimension") == 4);
  }
  {
    Engine e(3, BlockStructure::parse(3, ";1,2"), WeightMode::kappa, 1, false, 5);
    Report r = suite_classical(e);
    CHECK(r.passed());
    CHECK(reported_kernel(r, "kernel of dH + dF at o equals the class dimension") == 8);
  }
  {
    Engine e(3, BlockStructure::parse(3, "1;1,1"), WeightMode::kappa, 7, false, 5);
    Report r = suite_classical(e);
    CHECK(r.passed());
    CHECK(reported_kernel(r, "kernel of dH + dF at o equals the class dimension") == 14);
  }
}

TEST_CASE("trace values at specific points") {
  // l = 1 with mu = 4 (z = 2), k = 1: 4 + 1/4 - 2 + 2 = 17/4
  RootSystem rs(3);
  auto b = BlockStructure::parse(3, "1;1,1");
  WeightAssignment w(rs, b, WeightMode::kappa, {Gauss(2)});
  Scalar tr1 = character_value(rs, b, w, 1).classical_limit();
  CHECK(tr1 == Scalar(Gauss::frac(17, 4)));
}

TEST_CASE("bridge to the classical minimal polynomial") {
  RootSystem rs(3);
  auto b = BlockStructure::parse(3, "1;1,1");
  WeightAssignment w(rs, b, WeightMode::kappa, {Gauss(2)});
  auto roots = eigenvalues_quo(b, w);
  std::multiset<std::string> got, expect;
  for (const auto& r : roots) got.insert(r.classical_limit().str());
  for (const char* s : {"4", "-1", "1", "1/4"}) expect.insert(Scalar::parse(s).str());
  CHECK(got == expect);
  // the extra parabolic root collapses onto -1
  auto hroots = eigenvalues_hat(b, w);
  std::multiset<std::string> hgot;
  for (const auto& r : hroots) hgot.insert(r.classical_limit().str());
  expect.insert(Scalar(-1).str());
  CHECK(hgot == expect);
}

TEST_CASE("eigenvalue list parser") {
  auto eigs = ClassSpec::parse_eigs("2:1,3/2:2");
  REQUIRE(eigs.size() == 2);
  CHECK(eigs[0].first == Gauss(2));
  CHECK(eigs[0].second == 1);
  CHECK(eigs[1].first == Gauss::frac(3, 2));
  CHECK(eigs[1].second == 2);
  CHECK_THROWS_AS(ClassSpec::parse_eigs("wat"), Error);
}
