#include "rmatrix.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>

namespace spq {

VectorRep::VectorRep(const RootSystem& rs) : rs_(rs) {
  int n = rs.rank(), N = 2 * n;
  for (int j = 1; j <= n; ++j) weights_.push_back(eps_unit(j - 1));
  for (int j = n; j >= 1; --j) weights_.push_back(eps_scale(-1, eps_unit(j - 1)));
  auto unit = [&](int r, int c) {  // 1-based e_{rc}
    Mat m(N, N);
    m.at(r - 1, c - 1) = Scalar(1);
    return m;
  };
  for (int i = 1; i < n; ++i) {
    e_.push_back(unit(i, i + 1) - unit(2 * n - i, 2 * n + 1 - i));
    f_.push_back(unit(i + 1, i) - unit(2 * n + 1 - i, 2 * n - i));
  }
  e_.push_back(unit(n, n + 1));
  f_.push_back(unit(n + 1, n));
}

Mat VectorRep::k(int i, int power) const {
  int N = dim();
  Mat m(N, N);
  for (int j = 1; j <= N; ++j)
    m.at(j - 1, j - 1) = Scalar::q_pow(power * eps_dot(rs_.simple(i), weight(j)));
  return m;
}

Mat VectorRep::q2rho() const {
  int N = dim();
  Mat m(N, N);
  for (int j = 1; j <= N; ++j)
    m.at(j - 1, j - 1) = Scalar::q_pow(2 * eps_dot(rs_.rho(), weight(j)));
  return m;
}

VectorModule::VectorModule(const VectorRep& rep) : Module(rep.root_system()), rep_(rep) {
  for (int j = 1; j <= rep.dim(); ++j) {
    Eps off = eps_sub(eps_unit(0), rep.weight(j));
    RootVec c;
    bool ok = rs_.to_simple_coords(off, c);
    assert(ok);
    (void)ok;
    offsets_.push_back(c);
    by_index_.push_back(c);
    index_[c] = j;
  }
}

int VectorModule::dim(const RootVec& offset) { return index_.count(offset) ? 1 : 0; }

int VectorModule::basis_of(const RootVec& offset) const {
  auto it = index_.find(offset);
  return it == index_.end() ? 0 : it->second;
}

Scalar VectorModule::top_qpow(const Eps& mu) { return Scalar::q_pow(eps_dot(mu, eps_unit(0))); }

const Mat& VectorModule::f_action(int i, const RootVec& from) {
  auto key = std::make_pair(i, from);
  auto it = fmat_.find(key);
  if (it != fmat_.end()) return it->second;
  RootVec target = rv_add(from, rv_simple(i));
  int sd = dim(from), td = dim(target);
  Mat m(td, sd);
  if (sd && td) {
    int j = basis_of(from), j2 = basis_of(target);
    m.at(0, 0) = rep_.f(i).at(j2 - 1, j - 1);
  }
  auto [jt, ok] = fmat_.emplace(key, std::move(m));
  return jt->second;
}

const Mat& VectorModule::e_action(int i, const RootVec& from) {
  auto key = std::make_pair(i, from);
  auto it = emat_.find(key);
  if (it != emat_.end()) return it->second;
  RootVec target = rv_sub(from, rv_simple(i));
  int sd = dim(from);
  int td = rv_nonneg(target) ? dim(target) : 0;
  Mat m(td, sd);
  if (sd && td) {
    int j = basis_of(from), j2 = basis_of(target);
    m.at(0, 0) = rep_.e(i).at(j2 - 1, j - 1);
  }
  auto [jt, ok] = emat_.emplace(key, std::move(m));
  return jt->second;
}

ExplicitR::ExplicitR(const VectorRep& rep) {
  const RootSystem& rs = rep.root_system();
  int n = rs.rank(), N = 2 * n;
  auto rho_of = [&](int k) { return eps_dot(rs.rho(), rep.weight(k)); };
  auto sgn = [&](int k) { return k <= n ? 1 : -1; };
  auto conj = [&](int k) { return N + 1 - k; };
  auto idx = [&](int a, int b) { return (a - 1) * N + (b - 1); };

  R = Mat(N * N, N * N);
  r_classical = Mat(N * N, N * N);
  P = Mat(N * N, N * N);
  kappa = Mat(N * N, N * N);
  Scalar qm = Scalar::q_pow(1) - Scalar::q_pow(-1);
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j) {
      int dij = i == j ? 1 : 0;
      int dijp = j == conj(i) ? 1 : 0;
      R.at(idx(i, j), idx(i, j)) = Scalar::q_pow(dij - dijp);
      r_classical.at(idx(i, j), idx(i, j)) = Scalar(dij - dijp);
      P.at(idx(j, i), idx(i, j)) = Scalar(1);
      if (i > j) {
        // (q - q^-1) e_ij (x) e_ji : maps w_j (x) w_i -> w_i (x) w_j
        R.at(idx(i, j), idx(j, i)) += qm;
        r_classical.at(idx(i, j), idx(j, i)) += Scalar(2);
        // -(q - q^-1) q^{rho_i - rho_j} eps_i eps_j e_ij (x) e_i'j'
        Scalar coef = -(qm * Scalar::q_pow(rho_of(i) - rho_of(j)) * Scalar(sgn(i) * sgn(j)));
        R.at(idx(i, conj(i)), idx(j, conj(j))) += coef;
        r_classical.at(idx(i, conj(i)), idx(j, conj(j))) += Scalar(-2 * sgn(i) * sgn(j));
      }
      // kappa: maps w_j (x) w_j' -> sum_i q^{rho_i - rho_j} eps_i eps_j w_i' (x) w_i
      kappa.at(idx(conj(i), i), idx(j, conj(j))) =
          Scalar::q_pow(rho_of(i) - rho_of(j)) * Scalar(sgn(i) * sgn(j));
    }
  S = P * R;
}

// ---------------------------------------------------------------------------
// Quasi-R-matrix solver.
//
// With Delta(e) = e (x) 1 + q^{h} (x) e, Delta(f) = f (x) q^{-h} + 1 (x) f and
// Rhat = q^{t0} Theta, the intertwining Rhat Delta = Delta^{op} Rhat reduces,
// after conjugating the Cartan factor through, to
//   Theta (e_i (x) 1 + q^{h_i} (x) e_i) = (e_i (x) 1 + q^{-h_i} (x) e_i) Theta.
// Sorting by the normal form U- * U0 * U+ in the first leg yields, per weight
// beta and Cartan label q^{+-h_i}, the two matrix equations solved below.

QuasiR::QuasiR(WordAlgebra& wa, int max_height) : wa_(wa), max_height_(max_height) {
  const RootSystem& rs = wa.root_system();
  RootVec zero = rv_zero();
  theta_[zero] = {Term{Word{}, Word{}, Scalar(1)}};
  weights_.push_back(zero);
  // enumerate cone points by height
  for (int h = 1; h <= max_height_; ++h) {
    std::vector<RootVec> level;
    RootVec cur = rv_zero();
    std::function<void(int, int)> gen = [&](int i, int left) {
      if (i == rs.rank()) {
        if (left == 0) level.push_back(cur);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        cur[size_t(i)] = int16_t(v);
        gen(i + 1, left - v);
      }
      cur[size_t(i)] = 0;
    };
    gen(0, h);
    for (const RootVec& beta : level) {
      solve(beta);
      weights_.push_back(beta);
    }
  }
}

const std::vector<QuasiR::Term>& QuasiR::terms(const RootVec& beta) const {
  static const std::vector<Term> empty;
  auto it = theta_.find(beta);
  return it == theta_.end() ? empty : it->second;
}

void QuasiR::solve(const RootVec& beta) {
  const RootSystem& rs = wa_.root_system();
  const QuotientSlice& sl = wa_.slice(-1, beta);
  int d = sl.dim();
  if (d == 0) {
    theta_[beta] = {};
    return;
  }
  struct Block {
    Mat lhs;  // (d_prev * d) x (d*d): coefficient of X
    Mat rhs;  // d_prev x d matrix, flattened alongside
  };
  std::vector<Mat> eq_lhs;
  std::vector<std::vector<Scalar>> eq_rhs;
  for (int i = 1; i <= rs.rank(); ++i) {
    RootVec prev = rv_sub(beta, rv_simple(i));
    if (!rv_nonneg(prev)) continue;
    const QuotientSlice& sp = wa_.slice(-1, prev);
    int dp = sp.dim();
    // Theta_{prev} as a matrix Y
    auto itY = theta_.find(prev);
    if (itY == theta_.end()) throw Error(Errc::construction_failure, "missing lower level");
    Mat Y(dp, dp);
    for (const Term& t : itY->second) {
      // terms are stored over basis words
      int a = -1, b = -1;
      for (int k = 0; k < dp; ++k) {
        if (sp.basis()[size_t(k)] == t.fw) a = k;
        if (sp.basis()[size_t(k)] == t.ew) b = k;
      }
      if (a < 0 || b < 0) throw Error(Errc::construction_failure, "term outside basis");
      Y.at(a, b) += t.c;
    }
    // E+ (right mult by e_i) and E- (left mult), dp x d
    Mat Ep(dp, d), Em(dp, d);
    for (int b = 0; b < dp; ++b) {
      WordSum r, l;
      ws_add(r, sp.basis()[size_t(b)].append(i), Scalar(1));
      ws_add(l, sp.basis()[size_t(b)].prepend(i), Scalar(1));
      auto pr = sl.project(r);
      auto pl = sl.project(l);
      for (int c = 0; c < d; ++c) {
        Ep.at(b, c) = pr[size_t(c)];
        Em.at(b, c) = pl[size_t(c)];
      }
    }
    // C+ / C-: d x dp commutator coefficient matrices
    Scalar denom = Scalar::q_pow(rs.q_exponent(i)) - Scalar::q_pow(-rs.q_exponent(i));
    Mat Cp(d, dp), Cm(d, dp);
    for (int a = 0; a < d; ++a) {
      const Word& w = sl.basis()[size_t(a)];
      for (int pos = 0; pos < w.len; ++pos) {
        if (w.letter(pos) != i) continue;
        int dd = eps_dot(rs.simple(i), w.suffix_after(pos).weight(rs));
        WordSum dropped;
        ws_add(dropped, w.drop(pos), Scalar(1));
        auto coords = sp.project(dropped);
        for (int ap = 0; ap < dp; ++ap) {
          if (coords[size_t(ap)].is_zero()) continue;
          Cp.at(a, ap) += coords[size_t(ap)] * Scalar::q_pow(-dd) / denom;
          Cm.at(a, ap) += coords[size_t(ap)] * Scalar::q_pow(dd) / denom;
        }
      }
    }
    Scalar g = Scalar::q_pow(eps_dot(rs.simple(i), rs.from_simple_coords(prev)));
    // equations: Cp^T X = Y Ep   and   Cm^T X = g * (Y Em)
    Mat rhs_p = Y * Ep, rhs_m = (Y * Em).mul_scalar(g);
    for (int variant = 0; variant < 2; ++variant) {
      const Mat& C = variant == 0 ? Cp : Cm;
      const Mat& rhs = variant == 0 ? rhs_p : rhs_m;
      // rows: (ap, bp); unknowns X flattened (a*d + b)
      Mat lhs(dp * d, d * d);
      std::vector<Scalar> rv(size_t(dp) * size_t(d));
      for (int ap = 0; ap < dp; ++ap)
        for (int bp = 0; bp < d; ++bp) {
          for (int a = 0; a < d; ++a)
            if (!C.at(a, ap).is_zero()) lhs.at(ap * d + bp, a * d + bp) = C.at(a, ap);
          rv[size_t(ap * d + bp)] = rhs.at(ap, bp);
        }
      eq_lhs.push_back(std::move(lhs));
      eq_rhs.push_back(std::move(rv));
    }
  }
  int total_rows = 0;
  for (const Mat& m : eq_lhs) total_rows += m.rows();
  Mat big(total_rows, d * d);
  std::vector<Scalar> rhs(static_cast<size_t>(total_rows));
  int r0 = 0;
  for (size_t k = 0; k < eq_lhs.size(); ++k) {
    for (int r = 0; r < eq_lhs[k].rows(); ++r) {
      for (int c = 0; c < d * d; ++c) big.at(r0 + r, c) = eq_lhs[k].at(r, c);
      rhs[size_t(r0 + r)] = eq_rhs[k][size_t(r)];
    }
    r0 += eq_lhs[k].rows();
  }
  bool unique = false;
  auto x = solve_linear(big, rhs, &unique);
  if (x.empty() && d > 0) {
    bool all_zero = std::all_of(rhs.begin(), rhs.end(), [](const Scalar& s) { return s.is_zero(); });
    if (!all_zero)
      throw Error(Errc::construction_failure, "inconsistent quasi-R system");
    x.assign(size_t(d) * size_t(d), Scalar());
  }
  if (!unique) throw Error(Errc::construction_failure, "quasi-R system is underdetermined");
  std::vector<Term> terms;
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      const Scalar& c = x[size_t(a * d + b)];
      if (c.is_zero()) continue;
      terms.push_back(Term{sl.basis()[size_t(a)], sl.basis()[size_t(b)], c});
    }
  theta_[beta] = std::move(terms);
}

// ---------------------------------------------------------------------------

QOperator::QOperator(QuasiR& theta, TensorModule& t)
    : theta_(theta), t_(t), a_words_(t.leg_a()), b_words_(t.leg_b()) {}

Mat QOperator::half_r(const RootVec& offset, bool swap) {
  const RootSystem& rs = t_.root_system();
  const auto& comps = t_.components(offset);
  int dim = t_.dim(offset);
  Mat out(dim, dim);
  for (const auto& c : comps) {
    for (const RootVec& beta : theta_.weights()) {
      const auto& terms = theta_.terms(beta);
      if (terms.empty()) continue;
      // leg A gets the f-word (offset +beta) unless swapped
      RootVec a_t = swap ? rv_sub(c.a_off, beta) : rv_add(c.a_off, beta);
      RootVec b_t = swap ? rv_add(c.b_off, beta) : rv_sub(c.b_off, beta);
      if (!rv_nonneg(a_t) || !rv_nonneg(b_t)) continue;
      if (t_.leg_a().dim(a_t) == 0 || t_.leg_b().dim(b_t) == 0) continue;
      const TensorModule::Component* tc = nullptr;
      for (const auto& cc : comps)
        if (cc.a_off == a_t) {
          tc = &cc;
          break;
        }
      if (!tc) continue;
      // q^{t0} factor: q^{(wt_A(target), top_B - b_t)}
      Eps wa = eps_sub(eps_unit(0), rs.from_simple_coords(a_t));
      Scalar cartan = t_.leg_b().weight_qpow(wa, b_t);
      for (const auto& term : terms) {
        const Mat& am = swap ? a_words_.action(+1, term.ew, c.a_off)
                             : a_words_.action(-1, term.fw, c.a_off);
        const Mat& bm = swap ? b_words_.action(-1, term.fw, c.b_off)
                             : b_words_.action(+1, term.ew, c.b_off);
        if (am.rows() == 0 || bm.rows() == 0) continue;
        Scalar coef = term.c * cartan;
        for (int ai = 0; ai < c.a_dim; ++ai)
          for (int ar = 0; ar < am.rows(); ++ar) {
            if (am.at(ar, ai).is_zero()) continue;
            for (int bi = 0; bi < c.b_dim; ++bi)
              for (int br = 0; br < bm.rows(); ++br) {
                if (bm.at(br, bi).is_zero()) continue;
                out.at(TensorModule::index_in(*tc, ar, br), TensorModule::index_in(c, ai, bi)) +=
                    coef * am.at(ar, ai) * bm.at(br, bi);
              }
          }
      }
    }
  }
  return out;
}

const Mat& QOperator::matrix(const RootVec& offset) {
  auto it = cache_.find(offset);
  if (it != cache_.end()) return it->second;
  Mat first = half_r(offset, false);
  Mat second = half_r(offset, true);
  auto [jt, ok] = cache_.emplace(offset, second * first);
  return jt->second;
}

Mat quasi_r_on_vector_pair(QuasiR& theta, const VectorRep& rep, bool swap) {
  int N = rep.dim();
  VectorModule va(rep), vb(rep);
  TensorModule t(va, vb);
  QOperator q(theta, t);
  Mat out(N * N, N * N);
  std::set<RootVec> offs;
  for (const RootVec& a : va.finite_offsets())
    for (const RootVec& b : vb.finite_offsets()) offs.insert(rv_add(a, b));
  for (const RootVec& off : offs) {
    Mat half = q.half_r(off, swap);
    const auto& comps = t.components(off);
    for (const auto& cc : comps)
      for (const auto& cr : comps) {
        const Scalar& v = half.at(cr.base, cc.base);
        if (v.is_zero()) continue;
        int jc = va.basis_of(cc.a_off), kc = vb.basis_of(cc.b_off);
        int jr = va.basis_of(cr.a_off), kr = vb.basis_of(cr.b_off);
        out.at((jr - 1) * N + (kr - 1), (jc - 1) * N + (kc - 1)) = v;
      }
  }
  return out;
}

std::optional<Scalar> proportionality(const Mat& lhs, const Mat& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) return std::nullopt;
  Scalar c;
  bool found = false;
  for (int i = 0; i < rhs.rows() && !found; ++i)
    for (int j = 0; j < rhs.cols() && !found; ++j)
      if (!rhs.at(i, j).is_zero()) {
        c = lhs.at(i, j) / rhs.at(i, j);
        found = true;
      }
  if (!found) return std::nullopt;
  for (int i = 0; i < lhs.rows(); ++i)
    for (int j = 0; j < lhs.cols(); ++j)
      if (!(lhs.at(i, j) == c * rhs.at(i, j))) return std::nullopt;
  return c;
}

}  // namespace spq
