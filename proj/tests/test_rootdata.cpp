#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rootdata.hpp"

using namespace spq;

TEST_CASE("sp(4) root system") {
  RootSystem rs(2);
  int b = rs.long_root_index();
  CHECK(rs.cartan(b, b) == 4);
  CHECK(rs.cartan(b, 1) == -2);
  CHECK(rs.cartan(1, 1) == 2);
  CHECK(rs.rho()[0] == 2);
  CHECK(rs.rho()[1] == 1);
  CHECK(rs.positive_roots().size() == 4);
}

TEST_CASE("sp(6) root system") {
  RootSystem rs(3);
  CHECK(rs.cartan(1, 3) == 0);
  CHECK(rs.cartan(1, 2) == -1);
  CHECK(rs.cartan(2, 3) == -2);
  CHECK(rs.positive_roots().size() == 9);
  RootVec c;
  CHECK(rs.to_simple_coords(eps_add(eps_unit(0), eps_unit(1)), c));
  CHECK(c[0] == 1);
  CHECK(c[1] == 2);
  CHECK(c[2] == 1);
}

TEST_CASE("block structures") {
  RootSystem rs2(2);
  auto b11 = BlockStructure::parse(2, ";1,1");
  CHECK(b11.ell() == 0);
  // delta = 2a_1 + b
  Eps d = b11.delta(rs2);
  CHECK(d == eps_scale(2, eps_unit(0)));
  RootVec dc;
  CHECK(rs2.to_simple_coords(d, dc));
  CHECK(dc[0] == 2);
  CHECK(dc[1] == 1);
  CHECK(b11.levi_simple() == std::vector<int>{2});

  RootSystem rs3(3);
  auto b12 = BlockStructure::parse(3, ";1,2");
  CHECK(b12.levi_simple() == std::vector<int>{2, 3});
  RootVec dc3;
  CHECK(rs3.to_simple_coords(b12.delta(rs3), dc3));
  CHECK(dc3[0] == 2);
  CHECK(dc3[1] == 2);
  CHECK(dc3[2] == 1);

  auto b111 = BlockStructure::parse(3, "1;1,1");
  CHECK(b111.levi_simple() == std::vector<int>{3});
  CHECK(b111.alpha_index() == 2);

  CHECK_THROWS_AS(BlockStructure::parse(3, ";1,1"), Error);
  CHECK_THROWS_AS(BlockStructure::parse(2, "garbage"), Error);
}

TEST_CASE("kappa weight assignment and q_pow homomorphism") {
  RootSystem rs(2);
  auto b = BlockStructure::parse(2, ";1,1");
  WeightAssignment w(rs, b, WeightMode::kappa);
  // q^{(lambda, a)} = i q^{-p} on the distinguished root
  Scalar qa = w.q_pow(rs.simple(1));
  CHECK(qa == Scalar::i() * Scalar::q_pow(-1));
  CHECK(qa * qa == -Scalar::q_pow(-2));
  // vanishes on the Levi part
  CHECK(w.q_pow(rs.simple(2)) == Scalar(1));
  // homomorphism on random integer vectors
  Eps u = eps_add(eps_scale(3, eps_unit(0)), eps_scale(-2, eps_unit(1)));
  Eps v = eps_add(eps_unit(0), eps_unit(1));
  CHECK(w.q_pow(eps_add(u, v)) == w.q_pow(u) * w.q_pow(v));
}

TEST_CASE("mu parameters") {
  RootSystem rs2(2);
  auto b11 = BlockStructure::parse(2, ";1,1");
  WeightAssignment w11(rs2, b11, WeightMode::kappa);
  auto mu = mu_parameters(b11, w11);
  REQUIRE(mu.size() == 2);
  CHECK(mu[0] == -Scalar::q_pow(-2));
  CHECK(mu[1] == Scalar::q_pow(-2));

  RootSystem rs3(3);
  auto b12 = BlockStructure::parse(3, ";1,2");
  WeightAssignment w12(rs3, b12, WeightMode::kappa);
  auto mu12 = mu_parameters(b12, w12);
  CHECK(mu12[0] == -Scalar::q_pow(-4));
  CHECK(mu12[1] == Scalar::q_pow(-2));

  // classical limits: last two slots are always -1 and 1
  auto b111 = BlockStructure::parse(3, "1;1,1");
  WeightAssignment w111(rs3, b111, WeightMode::kappa, specialize_z(b111, 7));
  auto mu111 = mu_parameters(b111, w111);
  REQUIRE(mu111.size() == 3);
  CHECK(mu111[1].classical_limit() == Scalar(-1));
  CHECK(mu111[2].classical_limit() == Scalar(1));

  // generic mode refuses
  WeightAssignment wg(rs2, b11, WeightMode::generic);
  CHECK_THROWS_AS(mu_parameters(b11, wg), Error);
}

TEST_CASE("kostant counts") {
  RootSystem rs(2);
  Eps alpha = rs.simple(1), beta = rs.simple(2);
  Eps gamma = eps_add(alpha, beta), delta = eps_add(eps_scale(2, alpha), beta);
  Eps target = eps_add(eps_scale(2, alpha), beta);
  CHECK(kostant_count(rs, target, {alpha, gamma, delta}) == 2);
  CHECK(kostant_count(rs, target, {alpha, gamma}) == 1);
  CHECK(kostant_count(rs, alpha, {alpha, gamma, delta}) == 1);
  CHECK(kostant_count(rs, target, rs.positive_roots()) == 3);

  // monotonicity: a larger generator set never lowers the count
  RootSystem rs3(3);
  for (const Eps& r : rs3.positive_roots()) {
    std::vector<Eps> small = {rs3.simple(1), rs3.simple(2), rs3.simple(3)};
    std::vector<Eps> large = rs3.positive_roots();
    CHECK(kostant_count(rs3, r, small) <= kostant_count(rs3, r, large));
  }
}

TEST_CASE("levi and stabilizer roots") {
  RootSystem rs(3);
  auto b12 = BlockStructure::parse(3, ";1,2");  // l = gl(1) + sp(4)
  CHECK(b12.levi_positive_roots(rs).size() == 4);   // sp(4) positives
  CHECK(b12.stab_positive_roots(rs).size() == 5);   // + 2e_1
  auto b21 = BlockStructure::parse(3, ";2,1");  // l = gl(2) + sp(2)
  CHECK(b21.levi_positive_roots(rs).size() == 2);   // e1-e2 and 2e3
  CHECK(b21.stab_positive_roots(rs).size() == 5);   // + {2e1, e1+e2, 2e2}
  CHECK(b12.dim_stabilizer() == 3 + 10);   // sp(2) + sp(4)
  CHECK(b21.dim_stabilizer() == 10 + 3);   // sp(4) + sp(2)
}

TEST_CASE("z specialization is generic and deterministic") {
  auto b = BlockStructure::parse(3, "1;1,1");
  auto z1 = specialize_z(b, 42), z2 = specialize_z(b, 42), z3 = specialize_z(b, 43);
  REQUIRE(z1.size() == 1);
  CHECK(z1[0] == z2[0]);
  CHECK(!(z1[0] == z3[0]));
  CHECK(!z1[0].is_zero());
}
