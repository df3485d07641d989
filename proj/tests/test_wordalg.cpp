#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mat.hpp"
#include "wordalg.hpp"

using namespace spq;

namespace {

Word make_word(std::initializer_list<int> ls) {
  Word w;
  for (int l : ls) w = w.append(l);
  return w;
}

RootVec coords(const RootSystem& rs, std::initializer_list<int> ls) {
  Word w = make_word(ls);
  (void)rs;
  return w.root_coords();
}

struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed ? seed : 1) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  long range(long lo, long hi) { return lo + long(next() % uint64_t(hi - lo + 1)); }
};

}  // namespace

TEST_CASE("word basics") {
  Word w = make_word({1, 2, 1});
  CHECK(w.len == 3);
  CHECK(w.letter(0) == 1);
  CHECK(w.letter(1) == 2);
  CHECK(w.last() == 1);
  CHECK(w.drop(1) == make_word({1, 1}));
  CHECK(w.suffix_after(0) == make_word({2, 1}));
  CHECK(w.prepend(2) == make_word({2, 1, 2, 1}));
  RootVec rc = w.root_coords();
  CHECK(rc[0] == 2);
  CHECK(rc[1] == 1);
}

TEST_CASE("sp(4) serre slices") {
  RootSystem rs(2);
  WordAlgebra wa(rs);

  // weight 3a + b: 4 words, serre subspace of dim 1, quotient dim 3
  const QuotientSlice& s1 = wa.slice(-1, coords(rs, {1, 1, 1, 2}));
  CHECK(s1.columns().size() == 4);
  CHECK(s1.null_rank() == 1);
  CHECK(s1.dim() == 3);

  // weight 2a + b: 3 words, no serre element fits, quotient dim 3
  const QuotientSlice& s2 = wa.slice(-1, coords(rs, {1, 1, 2}));
  CHECK(s2.columns().size() == 3);
  CHECK(s2.null_rank() == 0);
  CHECK(s2.dim() == 3);

  // single simple root
  const QuotientSlice& s3 = wa.slice(-1, coords(rs, {1}));
  CHECK(s3.dim() == 1);
}

TEST_CASE("PBW dimensions match the Kostant oracle") {
  for (int n : {2, 3}) {
    RootSystem rs(n);
    WordAlgebra wa(rs, 8);
    int hmax = n == 2 ? 8 : 6;
    // enumerate weights by total height
    std::vector<RootVec> all;
    RootVec cur{};
    cur.fill(0);
    std::function<void(int, int)> gen = [&](int i, int left) {
      if (i == n) {
        all.push_back(cur);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        cur[size_t(i)] = int16_t(v);
        gen(i + 1, left - v);
      }
      cur[size_t(i)] = 0;
    };
    gen(0, hmax);
    for (const RootVec& beta : all) {
      if (rs.height(beta) == 0) continue;
      long expect = kostant_count(rs, rs.from_simple_coords(beta), rs.positive_roots());
      CAPTURE(n);
      CAPTURE(rs.height(beta));
      CHECK(wa.slice(-1, beta).dim() == expect);
    }
  }
}

TEST_CASE("serre subspace is an ideal slice") {
  RootSystem rs(2);
  WordAlgebra wa(rs, 8);
  // multiply each serre element by letters on both sides; the result must lie
  // in the null space of the shifted slice
  for (const SerreElement& s : wa.serre()) {
    for (int letter = 1; letter <= 2; ++letter) {
      WordSum left, right;
      for (const auto& [w, c] : s.words) {
        ws_add(left, w.prepend(letter), c);
        ws_add(right, w.append(letter), c);
      }
      RootVec beta = left.begin()->first.root_coords();
      CHECK(wa.slice(-1, beta).in_null_space(left));
      CHECK(wa.slice(-1, beta).in_null_space(right));
    }
  }
}

TEST_CASE("q-commutator basics and the deformed Jacobi identity") {
  RootSystem rs(3);
  Rng rng(2718);
  auto rnd_dec = [&](int len) {
    Decorated d;
    d.sign = -1;
    Word w;
    for (int i = 0; i < len; ++i) w = w.append(int(rng.range(1, 3)));
    Cart k = cart_zero();
    k[size_t(rng.range(0, 2))] = int8_t(rng.range(-1, 1));
    d.terms.emplace(std::make_pair(w, k), Scalar::q_pow(int(rng.range(-2, 2))));
    return d;
  };
  for (int iter = 0; iter < 12; ++iter) {
    Decorated x = rnd_dec(int(rng.range(0, 2)));
    Decorated y = rnd_dec(int(rng.range(0, 2)));
    Decorated z = rnd_dec(int(rng.range(0, 2)));
    // [x, x]_1 = 0
    CHECK(q_commutator(rs, x, x, Scalar(1)).is_zero());
    // [x,[y,z]_a]_b = [[x,y]_c, z]_{ab/c} + c [y,[x,z]_{b/c}]_{a/c}
    Scalar a = Scalar::q_pow(int(rng.range(-2, 2)));
    Scalar b = Scalar::q_pow(int(rng.range(-2, 2)));
    Scalar c = Scalar::q_pow(int(rng.range(-1, 1))) * Scalar(2);
    Decorated lhs = q_commutator(rs, x, q_commutator(rs, y, z, a), b);
    Decorated rhs1 = q_commutator(rs, q_commutator(rs, x, y, c), z, a * b / c);
    Decorated rhs2 = q_commutator(rs, y, q_commutator(rs, x, z, b / c), a / c);
    Decorated rhs = dec_add(rhs1, dec_scale(rhs2, c));
    CHECK(dec_add(lhs, dec_scale(rhs, Scalar(-1))).is_zero());
  }
}

TEST_CASE("f_delta for sp(4)") {
  RootSystem rs(2);
  auto b = BlockStructure::parse(2, ";1,1");
  DeltaVectors dv = build_f_delta(rs, b);
  // f_gamma = f_alpha (p = 1)
  WordSum expect_gamma;
  ws_add(expect_gamma, make_word({1}), Scalar(1));
  CHECK(dv.f_gamma == expect_gamma);
  // f_delta = f_a^2 f_b - (q^2 + q^-2) f_a f_b f_a + f_b f_a^2
  WordSum expect;
  ws_add(expect, make_word({1, 1, 2}), Scalar(1));
  ws_add(expect, make_word({1, 2, 1}), -(Scalar::q_pow(2) + Scalar::q_pow(-2)));
  ws_add(expect, make_word({2, 1, 1}), Scalar(1));
  CHECK(dv.f_delta == expect);
  // weight check
  for (const auto& [w, c] : dv.f_delta) {
    RootVec rc = w.root_coords();
    CHECK(rc[0] == 2);
    CHECK(rc[1] == 1);
  }
}

TEST_CASE("nested commutator form of f_delta agrees in the quotient") {
  RootSystem rs(3);
  auto b = BlockStructure::parse(3, ";1,2");
  WordAlgebra wa(rs, 6);
  DeltaVectors dv = build_f_delta(rs, b);
  WordSum nested = f_delta_nested(rs, b);
  WordSum diff = dv.f_delta;
  ws_add(diff, nested, Scalar(-1));
  RootVec dc;
  REQUIRE(rs.to_simple_coords(b.delta(rs), dc));
  CHECK(wa.slice(-1, dc).in_null_space(diff));
}

TEST_CASE("lemma on mixed tilde/plain commutators in the quotient") {
  // [f~_mu, f_mu] = 0, [f~_mu', f_mu]_q = 0, [f~_mu'', f_mu]_{q^-1} = 0
  RootSystem rs(3);
  WordAlgebra wa(rs, 8);
  int i = 1, j = 2;  // mu = a1 + a2 inside gl(3)
  WordSum fmu = gl_root_vector(rs, i, j, false);
  WordSum fmu_t = gl_root_vector(rs, i, j, true);
  WordSum fmu_p = gl_root_vector(rs, i + 1, j, true);   // mu'
  WordSum fmu_pp = gl_root_vector(rs, i, j - 1, true);  // mu''
  auto comm = [&](const WordSum& x, const WordSum& y, const Scalar& a) {
    WordSum r = ws_concat(x, y);
    ws_add(r, ws_concat(y, x), -a);
    return r;
  };
  auto check_zero = [&](const WordSum& v) {
    REQUIRE(!v.empty());
    RootVec beta = v.begin()->first.root_coords();
    CHECK(wa.slice(-1, beta).in_null_space(v));
  };
  check_zero(comm(fmu_t, fmu, Scalar(1)));
  check_zero(comm(fmu_p, fmu, Scalar::q_pow(1)));
  check_zero(comm(fmu_pp, fmu, Scalar::q_pow(-1)));
}

TEST_CASE("phi and psi monomials") {
  RootSystem rs(3);
  auto b = BlockStructure::parse(3, ";1,2");
  PhiPsi pp = build_phi_psi(rs, b);
  REQUIRE(pp.psi.size() == 1);
  CHECK(pp.psi[0] == make_word({1}));  // psi_m = f_{a_m}
  REQUIRE(pp.phi.size() == 3);
  // the m=1, p=2 ladder monomials, letters listed leftmost first
  CHECK(pp.phi[0] == make_word({1, 2, 3, 2, 1}));
  CHECK(pp.phi[1] == make_word({2, 3, 1, 2, 1}));
  CHECK(pp.phi[2] == make_word({3, 2, 1, 2, 1}));
  for (const Word& w : pp.phi) CHECK(int(w.len) == 2 * b.p + 1);

  auto b21 = BlockStructure::parse(3, ";2,1");
  PhiPsi pp21 = build_phi_psi(rs, b21);
  REQUIRE(pp21.psi.size() == 2);
  CHECK(pp21.psi[0] == make_word({1, 2}));
  CHECK(pp21.psi[1] == make_word({2}));
  REQUIRE(pp21.phi.size() == 2);
  for (const Word& w : pp21.phi) CHECK(int(w.len) == 2 * b21.p + 1);

  auto bgl = BlockStructure::parse(3, "1;1,1");
  CHECK_THROWS_AS(build_phi_psi(rs, bgl), Error);
}

TEST_CASE("f_delta expands in the phi monomials") {
  {
    RootSystem rs(2);
    WordAlgebra wa(rs, 6);
    auto b = BlockStructure::parse(2, ";1,1");
    auto c = expand_in_phis(wa, b);
    REQUIRE(c.size() == 2);
    // f_delta v = -(q^2+q^-2) f_a f_b f_a v + f_b f_a^2 v
    CHECK(c[0] == -(Scalar::q_pow(2) + Scalar::q_pow(-2)));
    CHECK(c[1] == Scalar(1));
  }
  {
    RootSystem rs(3);
    WordAlgebra wa(rs, 6);
    auto b = BlockStructure::parse(3, ";1,2");
    auto c = expand_in_phis(wa, b);
    REQUIRE(c.size() == 3);
    // residual is exactly zero: re-check by projecting
    PhiPsi pp = build_phi_psi(rs, b);
    DeltaVectors dv = build_f_delta(rs, b);
    WordSum comb;
    for (size_t i = 0; i < pp.phi.size(); ++i) ws_add(comb, pp.phi[i], c[i]);
    ws_add(comb, dv.f_delta, Scalar(-1));
    RootVec dc;
    rs.to_simple_coords(b.delta(rs), dc);
    QuotientSlice sl = module_slice(wa, b, dc, nullptr);
    auto proj = sl.project(comb, true);
    for (const auto& s : proj) CHECK(s.is_zero());
  }
}

TEST_CASE("classical limit of the phi expansion matches a classical computation") {
  // independent classical oracle: expand [f_g,[f_g, f_b]] at q = 1 over plain
  // rationals and reduce modulo (classical Serre + words ending in the Levi)
  RootSystem rs(2);
  WordAlgebra wa(rs, 6);
  auto b = BlockStructure::parse(2, ";1,1");
  auto cq = expand_in_phis(wa, b);
  // classical f_delta = [f_a,[f_a,f_b]] = f_a^2 f_b - 2 f_a f_b f_a + f_b f_a^2
  // modulo words ending in f_b:  -2 phi_1 + phi_2  (no Serre element needed
  // at this weight).  Compare with limits of the quantum coefficients.
  CHECK(cq[0].classical_limit() == Scalar(-2));
  CHECK(cq[1].classical_limit() == Scalar(1));
}

TEST_CASE("normal ordering moves e-letters past f-words exactly") {
  RootSystem rs(2);
  // e_1 f_1 = f_1 e_1 + (q^{h_1} - q^{-h_1})/(q - q^{-1})
  Word u = make_word({1}), w = make_word({1});
  TriSum t = normal_order_ef(rs, u, w);
  Scalar denom = Scalar::q_pow(1) - Scalar::q_pow(-1);
  Cart kp = cart_zero();
  kp[0] = 1;
  Cart km = cart_zero();
  km[0] = -1;
  TriSum expect;
  tri_add(expect, TriKey{w, cart_zero(), u}, Scalar(1));
  tri_add(expect, TriKey{Word{}, kp, Word{}}, Scalar(1) / denom);
  tri_add(expect, TriKey{Word{}, km, Word{}}, -(Scalar(1) / denom));
  CHECK(t == expect);

  // e_2 through f_1: just passes
  TriSum t2 = normal_order_ef(rs, make_word({2}), make_word({1}));
  TriSum expect2;
  tri_add(expect2, TriKey{make_word({1}), cart_zero(), make_word({2})}, Scalar(1));
  CHECK(t2 == expect2);
}
