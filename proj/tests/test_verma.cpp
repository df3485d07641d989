#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "verma.hpp"

using namespace spq;

namespace {

Word make_word(std::initializer_list<int> ls) {
  Word w;
  for (int l : ls) w = w.append(l);
  return w;
}

RootVec rv_of(std::initializer_list<int> ls) { return make_word(ls).root_coords(); }

std::vector<RootVec> cone_points(const RootSystem& rs, int hmax) {
  std::vector<RootVec> all;
  RootVec cur = rv_zero();
  std::function<void(int, int)> gen = [&](int i, int left) {
    if (i == rs.rank()) {
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
  return all;
}

bool col_is_zero(const Mat& m, int c) {
  for (int r = 0; r < m.rows(); ++r)
    if (!m.at(r, c).is_zero()) return false;
  return true;
}

}  // namespace

TEST_CASE("sp(4) module slice dimensions") {
  RootSystem rs(2);
  WordAlgebra wa(rs, 8);
  auto b = BlockStructure::parse(2, ";1,1");
  WeightAssignment w(rs, b, WeightMode::kappa);

  VermaModule hat(wa, ModuleSpec::parabolic(b, w, Variant::HatM, 8));
  VermaModule quo(wa, ModuleSpec::parabolic(b, w, Variant::M, 8));

  // weight a + b_long: one-dimensional, spanned by f_b f_a v
  RootVec dprime = rv_of({1, 2});
  CHECK(hat.dim(dprime) == 1);
  WordSum span;
  ws_add(span, make_word({2, 1}), Scalar(1));
  auto coords = hat.project(span, dprime);
  CHECK(!coords[0].is_zero());

  // M at weight delta: dim 1
  RootVec delta = rv_of({1, 1, 2});
  CHECK(quo.dim(delta) == 1);
  // HatM at weight 0: the highest weight vector
  CHECK(hat.dim(rv_zero()) == 1);
  CHECK(quo.dim(rv_zero()) == 1);
}

TEST_CASE("dimension sweep against the oracle") {
  {
    RootSystem rs(2);
    WordAlgebra wa(rs, 8);
    auto b = BlockStructure::parse(2, ";1,1");
    WeightAssignment w(rs, b, WeightMode::kappa);
    VermaModule hat(wa, ModuleSpec::parabolic(b, w, Variant::HatM, 8));
    VermaModule quo(wa, ModuleSpec::parabolic(b, w, Variant::M, 8));
    for (const RootVec& beta : cone_points(rs, 8)) {
      CAPTURE(rs.height(beta));
      CHECK(hat.dim(beta) == hat.expected_dim(beta));
      CHECK(quo.dim(beta) == quo.expected_dim(beta));
    }
  }
  {
    RootSystem rs(3);
    WordAlgebra wa(rs, 6);
    auto b = BlockStructure::parse(3, ";1,2");
    WeightAssignment w(rs, b, WeightMode::kappa);
    VermaModule hat(wa, ModuleSpec::parabolic(b, w, Variant::HatM, 6));
    for (const RootVec& beta : cone_points(rs, 6)) {
      CAPTURE(rs.height(beta));
      CHECK(hat.dim(beta) == hat.expected_dim(beta));
    }
  }
}

TEST_CASE("generator actions satisfy the defining relations on slices") {
  RootSystem rs(2);
  WordAlgebra wa(rs, 7);
  auto b = BlockStructure::parse(2, ";1,1");
  WeightAssignment w(rs, b, WeightMode::kappa);
  VermaModule m(wa, ModuleSpec::parabolic(b, w, Variant::M, 7));

  // K_alpha v = i q^{-p} v
  CHECK(m.k_value(1, rv_zero()) == Scalar::i() * Scalar::q_pow(-1));
  // f_mu v = 0 for mu in the Levi part
  WordSum fb;
  ws_add(fb, make_word({2}), Scalar(1));
  auto z = m.project(fb, rv_of({2}));
  for (const auto& s : z) CHECK(s.is_zero());

  // [e_i, f_j] = delta_ij (K_i - K_i^{-1})/(q_i - q_i^{-1}) on slices
  for (const RootVec& beta : cone_points(rs, 5)) {
    if (m.dim(beta) == 0) continue;
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        RootVec up = rv_add(beta, rv_simple(j));
        RootVec down_i = rv_sub(beta, rv_simple(i));
        // e_i f_j - f_j e_i : beta -> beta + a_j - a_i
        Mat ef = m.e_action(i, up) * m.f_action(j, beta);
        Mat fe(ef.rows(), ef.cols());
        if (rv_nonneg(down_i)) fe = m.f_action(j, down_i) * m.e_action(i, beta);
        Mat comm = ef - fe;
        if (i != j) {
          CHECK(comm.is_zero());
        } else {
          Scalar qi = Scalar::q_pow(rs.q_exponent(i));
          Scalar expect = (m.k_value(i, beta) - m.k_value(i, beta).inv()) / (qi - qi.inv());
          Mat target = Mat::identity(m.dim(beta), expect);
          CHECK(comm == target);
        }
      }
  }
}

TEST_CASE("serre relations hold as operators") {
  RootSystem rs(2);
  WordAlgebra wa(rs, 8);
  auto b = BlockStructure::parse(2, ";1,1");
  WeightAssignment w(rs, b, WeightMode::kappa);
  VermaModule m(wa, ModuleSpec::parabolic(b, w, Variant::HatM, 8));
  // f-side: f_b^2 f_a - (q^2+q^-2) f_b f_a f_b + f_a f_b^2 = 0 and the cubic
  for (const RootVec& beta : cone_points(rs, 4)) {
    if (m.dim(beta) == 0) continue;
    WordActionCache cache(m);
    for (const SerreElement& s : serre_elements(rs)) {
      Mat acc;
      bool first = true;
      for (const auto& [word, c] : s.words) {
        const Mat& a = cache.action(-1, word, beta);
        Mat t = a.mul_scalar(c);
        acc = first ? t : acc + t;
        first = false;
      }
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("e-action maps null rows into null rows (relation stability)") {
  RootSystem rs(2);
  WordAlgebra wa(rs, 6);
  auto b = BlockStructure::parse(2, ";1,1");
  WeightAssignment w(rs, b, WeightMode::kappa);
  VermaModule m(wa, ModuleSpec::parabolic(b, w, Variant::M, 6));
  for (const RootVec& beta : cone_points(rs, 5)) {
    if (!rv_nonneg(beta) || rs.height(beta) == 0) continue;
    auto rows = m.null_rows(beta);
    for (const auto& row : rows)
      for (int i = 1; i <= 2; ++i) {
        RootVec target = rv_sub(beta, rv_simple(i));
        auto img = m.act_e_words(i, row, beta);
        for (const auto& s : img) CHECK(s.is_zero());
        (void)target;
      }
  }
}

TEST_CASE("singular vector at weight delta in kappa mode") {
  RootSystem rs(2);
  WordAlgebra wa(rs, 6);
  auto b = BlockStructure::parse(2, ";1,1");
  WeightAssignment w(rs, b, WeightMode::kappa);
  VermaModule hat(wa, ModuleSpec::parabolic(b, w, Variant::HatM, 6));
  RootVec delta = rv_of({1, 1, 2});
  DeltaVectors dv = build_f_delta(rs, b);
  // e_i (f_delta v) = 0 for all i
  for (int i = 1; i <= 2; ++i) {
    auto img = hat.act_e_words(i, dv.f_delta, delta);
    for (const auto& s : img) CHECK(s.is_zero());
  }
  // the joint kernel on the slice is one-dimensional and contains f_delta v
  Mat ker = hat.singular_vectors(delta);
  CHECK(ker.cols() == 1);
  auto coords = hat.project(dv.f_delta, delta);
  bool nonzero = false;
  for (const auto& s : coords) nonzero = nonzero || !s.is_zero();
  CHECK(nonzero);
}

TEST_CASE("generic weight obstruction") {
  RootSystem rs(2);
  WordAlgebra wa(rs, 6);
  auto b = BlockStructure::parse(2, ";1,1");
  WeightAssignment wg(rs, b, WeightMode::generic);
  VermaModule hat(wa, ModuleSpec::parabolic(b, wg, Variant::HatM, 6));
  RootVec delta = rv_of({1, 1, 2});
  DeltaVectors dv = build_f_delta(rs, b);
  // e_levi still kills it
  auto img2 = hat.act_e_words(2, dv.f_delta, delta);
  for (const auto& s : img2) CHECK(s.is_zero());
  // e_alpha does not; the obstruction factor is t^{-1} q^{-p} + t q^{p}
  auto img1 = hat.act_e_words(1, dv.f_delta, delta);
  bool nonzero = false;
  for (const auto& s : img1) nonzero = nonzero || !s.is_zero();
  REQUIRE(nonzero);
  Scalar obstruction = Scalar::var(VT, -1) * Scalar::q_pow(-1) + Scalar::var(VT) * Scalar::q_pow(1);
  for (const auto& s : img1) {
    if (s.is_zero()) continue;
    Scalar quotient = s / obstruction;
    // no pole at the kappa locus: the reduced denominator avoids the factor
    CHECK(poly_divexact(quotient.den(), obstruction.num()).has_value() == false);
  }
  // the quotient module construction refuses generic weights
  CHECK_THROWS_AS(ModuleSpec::parabolic(b, wg, Variant::M, 6), Error);
}

TEST_CASE("first-range lemma: extra lowering letters kill the column vector") {
  // (m,p) = (1,2): f_{a_k} f_{a_i} ... f_{a_1} v = 0 for k = 2..p+1, k != i+1
  RootSystem rs(3);
  WordAlgebra wa(rs, 6);
  auto b = BlockStructure::parse(3, ";1,2");
  WeightAssignment w(rs, b, WeightMode::kappa);
  VermaModule hat(wa, ModuleSpec::parabolic(b, w, Variant::HatM, 6));
  for (int i = 1; i <= 2; ++i)
    for (int k = 2; k <= 3; ++k) {
      if (k == i + 1) continue;
      Word word;
      for (int l = i; l >= 1; --l) word = word.append(l);
      word = word.prepend(k);
      WordSum ws;
      ws_add(ws, word, Scalar(1));
      auto coords = hat.project(ws, word.root_coords());
      for (const auto& s : coords) {
        CAPTURE(i);
        CAPTURE(k);
        CHECK(s.is_zero());
      }
    }
}

TEST_CASE("gl commutation identities on a generic full Verma module") {
  RootSystem rs(3);
  WordAlgebra wa(rs, 6);
  VermaModule m(wa, ModuleSpec::generic_full(rs, 6));
  WordActionCache cache(m);
  int i = 1, j = 2;  // mu = a1 + a2
  WordSum fmu = gl_root_vector(rs, i, j, false);
  WordSum fmu_t = gl_root_vector(rs, i, j, true);
  WordSum fmu_p = gl_root_vector(rs, i + 1, j, false);   // mu'
  WordSum fmu_pp = gl_root_vector(rs, i, j - 1, false);  // mu''
  WordSum fmu_tp = gl_root_vector(rs, i + 1, j, true);
  WordSum fmu_tpp = gl_root_vector(rs, i, j - 1, true);
  RootVec mu = rv_of({1, 2});

  auto op_of_words = [&](const WordSum& wsum, const RootVec& from, const RootVec& shift) {
    Mat acc(m.dim(rv_add(from, shift)), m.dim(from));
    for (const auto& [word, c] : wsum) acc = acc + cache.action(-1, word, from).mul_scalar(c);
    return acc;
  };

  for (const RootVec& beta : {rv_zero(), rv_of({1}), rv_of({3}), rv_of({1, 2})}) {
    if (m.dim(beta) == 0) continue;
    // [e_k, f_mu] = 0 for interior k and for non-adjacent k = 3
    for (int k : {3}) {
      Mat ef = m.e_action(k, rv_add(beta, mu)) * op_of_words(fmu, beta, mu);
      RootVec down = rv_sub(beta, rv_simple(k));
      Mat fe(ef.rows(), ef.cols());
      if (rv_nonneg(down)) fe = op_of_words(fmu, down, mu) * m.e_action(k, beta);
      CHECK((ef - fe).is_zero());
    }
    // [e_i, f_mu] = f_mu' q^{-h_i}  as operators
    {
      Mat ef = m.e_action(i, rv_add(beta, mu)) * op_of_words(fmu, beta, mu);
      RootVec down = rv_sub(beta, rv_simple(i));
      Mat fe(ef.rows(), ef.cols());
      if (rv_nonneg(down)) fe = op_of_words(fmu, down, mu) * m.e_action(i, beta);
      Mat lhs = ef - fe;
      RootVec mup = rv_of({2});
      Mat rhs = op_of_words(fmu_p, beta, mup).mul_scalar(m.k_value(i, beta).inv());
      CHECK(lhs == rhs);
    }
    // [e_j, f_mu] = -q f_mu'' q^{h_j}
    {
      Mat ef = m.e_action(j, rv_add(beta, mu)) * op_of_words(fmu, beta, mu);
      RootVec down = rv_sub(beta, rv_simple(j));
      Mat fe(ef.rows(), ef.cols());
      if (rv_nonneg(down)) fe = op_of_words(fmu, down, mu) * m.e_action(j, beta);
      Mat lhs = ef - fe;
      RootVec mupp = rv_of({1});
      Mat rhs = op_of_words(fmu_pp, beta, mupp)
                    .mul_scalar(-Scalar::q_pow(1) * m.k_value(j, beta));
      CHECK(lhs == rhs);
    }
    // tilde variants: [e_i, f~_mu] = f~_mu' q^{h_i}, [e_j, f~_mu] = -q^{-1} f~_mu'' q^{-h_j}
    {
      Mat ef = m.e_action(i, rv_add(beta, mu)) * op_of_words(fmu_t, beta, mu);
      RootVec down = rv_sub(beta, rv_simple(i));
      Mat fe(ef.rows(), ef.cols());
      if (rv_nonneg(down)) fe = op_of_words(fmu_t, down, mu) * m.e_action(i, beta);
      Mat rhs = op_of_words(fmu_tp, beta, rv_of({2})).mul_scalar(m.k_value(i, beta));
      CHECK((ef - fe) == rhs);
    }
    {
      Mat ef = m.e_action(j, rv_add(beta, mu)) * op_of_words(fmu_t, beta, mu);
      RootVec down = rv_sub(beta, rv_simple(j));
      Mat fe(ef.rows(), ef.cols());
      if (rv_nonneg(down)) fe = op_of_words(fmu_t, down, mu) * m.e_action(j, beta);
      Mat rhs = op_of_words(fmu_tpp, beta, rv_of({1}))
                    .mul_scalar(-Scalar::q_pow(-1) * m.k_value(j, beta).inv());
      CHECK((ef - fe) == rhs);
    }
  }
  (void)col_is_zero;
}
