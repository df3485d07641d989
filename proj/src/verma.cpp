#include "verma.hpp"

#include <algorithm>
#include <cassert>

namespace spq {

Scalar Module::k_value(int i, const RootVec& offset) {
  Scalar top = top_qpow(rs_.simple(i));
  int shift = eps_dot(rs_.from_simple_coords(offset), rs_.simple(i));
  return top * Scalar::q_pow(-shift);
}

Scalar Module::weight_qpow(const Eps& mu, const RootVec& offset) {
  int shift = eps_dot(rs_.from_simple_coords(offset), mu);
  return top_qpow(mu) * Scalar::q_pow(-shift);
}

const std::vector<RootVec>& Module::finite_offsets() const {
  throw Error(Errc::unsupported, "module is not finite");
}

const Mat& WordActionCache::action(int sign, const Word& w, const RootVec& from) {
  auto key = std::make_tuple(sign, w, from);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  Mat m;
  if (w.empty()) {
    m = Mat::identity(m_.dim(from));
  } else {
    int letter = w.last();
    Word rest = w;
    rest.len--;
    rest.bits &= (uint64_t(1) << (4 * rest.len)) - 1;
    const Mat& first = sign < 0 ? m_.f_action(letter, from) : m_.e_action(letter, from);
    RootVec mid = sign < 0 ? rv_add(from, rv_simple(letter)) : rv_sub(from, rv_simple(letter));
    if (!rv_nonneg(mid)) {
      m = Mat(0, m_.dim(from));
    } else {
      const Mat& restm = action(sign, rest, mid);
      m = restm * first;
    }
  }
  auto [jt, ok] = cache_.emplace(key, std::move(m));
  (void)ok;
  return jt->second;
}

ModuleSpec ModuleSpec::parabolic(const BlockStructure& b, const WeightAssignment& w, Variant v,
                                 int depth) {
  if (v == Variant::M && !w.is_kappa())
    throw Error(Errc::unsupported, "the quotient module requires the kappa-type weight");
  ModuleSpec s{b, w, v, depth, false};
  return s;
}

ModuleSpec ModuleSpec::generic_full(const RootSystem& rs, int depth) {
  BlockStructure b;
  b.n = rs.rank();
  b.m = 1;
  b.p = std::max(1, rs.rank() - 1);
  ModuleSpec s{b, WeightAssignment(rs, WeightMode::full_generic), Variant::HatM, depth, true};
  return s;
}

VermaModule::VermaModule(WordAlgebra& wa, const ModuleSpec& spec)
    : Module(wa.root_system()), wa_(wa), spec_(spec) {
  if (spec_.variant == Variant::M) f_delta_ = build_f_delta(rs_, spec_.blocks).f_delta;
}

bool VermaModule::levi_kills(int letter) const {
  return !spec_.full_verma && spec_.blocks.in_levi(letter);
}

const QuotientSlice& VermaModule::slice(const RootVec& offset) {
  auto it = slices_.find(offset);
  if (it != slices_.end()) return it->second;
  if (!in_range(offset)) throw Error(Errc::depth_overflow, "slice beyond the truncation depth");
  if (spec_.full_verma) {
    std::vector<Word> cols = words_of_weight(rs_, offset);
    std::vector<WordSum> rows = wa_.serre_rows(offset, cols);
    auto [jt, ok] = slices_.emplace(offset, QuotientSlice(std::move(cols), rows));
    return jt->second;
  }
  auto [jt, ok] = slices_.emplace(
      offset,
      module_slice(wa_, spec_.blocks, offset, spec_.variant == Variant::M ? &f_delta_ : nullptr));
  return jt->second;
}

int VermaModule::dim(const RootVec& offset) {
  if (!rv_nonneg(offset)) return 0;
  return slice(offset).dim();
}

bool VermaModule::in_range(const RootVec& offset) const {
  return rv_nonneg(offset) && rs_.height(offset) <= spec_.depth;
}

Scalar VermaModule::top_qpow(const Eps& mu) { return spec_.weights.q_pow(mu); }

std::vector<Scalar> VermaModule::project(const WordSum& v, const RootVec& offset) {
  const QuotientSlice& s = slice(offset);
  WordSum kept;
  for (const auto& [w, c] : v) {
    if (!w.empty() && levi_kills(w.last())) continue;
    kept.emplace(w, c);
  }
  return s.project(kept);
}

WordSum VermaModule::e_on_word(int i, const Word& w) const {
  WordSum out;
  Scalar denom = Scalar::q_pow(rs_.q_exponent(i)) - Scalar::q_pow(-rs_.q_exponent(i));
  Scalar top = spec_.weights.q_pow(rs_.simple(i));
  for (int pos = 0; pos < w.len; ++pos) {
    if (w.letter(pos) != i) continue;
    Eps suffix_wt = w.suffix_after(pos).weight(rs_);
    int d = eps_dot(rs_.simple(i), suffix_wt);
    // (q^{(lambda - wt_suffix, a_i)} - inverse) / (q_i - q_i^{-1})
    Scalar val = (top * Scalar::q_pow(-d) - top.inv() * Scalar::q_pow(d)) / denom;
    ws_add(out, w.drop(pos), val);
  }
  return out;
}

std::vector<Scalar> VermaModule::act_e_words(int i, const WordSum& v, const RootVec& from) {
  RootVec target = rv_sub(from, rv_simple(i));
  WordSum acc;
  for (const auto& [w, c] : v) ws_add(acc, e_on_word(i, w), c);
  if (!rv_nonneg(target)) {
    if (!acc.empty()) throw Error(Errc::construction_failure, "e-action escaped the cone");
    return {};
  }
  return project(acc, target);
}

const Mat& VermaModule::f_action(int i, const RootVec& from) {
  auto key = std::make_pair(i, from);
  auto it = fmat_.find(key);
  if (it != fmat_.end()) return it->second;
  RootVec target = rv_add(from, rv_simple(i));
  const QuotientSlice& src = slice(from);
  Mat m(dim(target), src.dim());
  for (int c = 0; c < src.dim(); ++c) {
    WordSum w;
    ws_add(w, src.basis()[size_t(c)].prepend(i), Scalar(1));
    auto col = project(w, target);
    for (int r = 0; r < m.rows(); ++r) m.at(r, c) = col[size_t(r)];
  }
  auto [jt, ok] = fmat_.emplace(key, std::move(m));
  return jt->second;
}

const Mat& VermaModule::e_action(int i, const RootVec& from) {
  auto key = std::make_pair(i, from);
  auto it = emat_.find(key);
  if (it != emat_.end()) return it->second;
  RootVec target = rv_sub(from, rv_simple(i));
  const QuotientSlice& src = slice(from);
  int target_dim = rv_nonneg(target) ? dim(target) : 0;
  Mat m(target_dim, src.dim());
  for (int c = 0; c < src.dim(); ++c) {
    WordSum w;
    ws_add(w, src.basis()[size_t(c)], Scalar(1));
    auto col = act_e_words(i, w, from);
    for (int r = 0; r < m.rows(); ++r) m.at(r, c) = col[size_t(r)];
  }
  auto [jt, ok] = emat_.emplace(key, std::move(m));
  return jt->second;
}

std::vector<WordSum> VermaModule::null_rows(const RootVec& offset) {
  std::vector<Word> all = words_of_weight(rs_, offset);
  std::vector<WordSum> rows = wa_.serre_rows(offset, all);
  for (const Word& w : all) {
    if (!w.empty() && levi_kills(w.last())) {
      WordSum r;
      ws_add(r, w, Scalar(1));
      rows.push_back(std::move(r));
    }
  }
  if (spec_.variant == Variant::M) {
    RootVec dc;
    rs_.to_simple_coords(spec_.blocks.delta(rs_), dc);
    RootVec rem = rv_sub(offset, dc);
    if (rv_nonneg(rem)) {
      for (const Word& x : words_of_weight(rs_, rem)) {
        WordSum r;
        for (const auto& [dw, c] : f_delta_) ws_add(r, x.concat(dw), c);
        rows.push_back(std::move(r));
      }
    }
  }
  return rows;
}

Mat VermaModule::singular_vectors(const RootVec& offset) {
  int d = dim(offset);
  std::vector<Mat> stacked;
  int total_rows = 0;
  for (int i = 1; i <= rs_.rank(); ++i) {
    RootVec target = rv_sub(offset, rv_simple(i));
    if (!rv_nonneg(target)) continue;
    const Mat& e = e_action(i, offset);
    stacked.push_back(e);
    total_rows += e.rows();
  }
  Mat big(total_rows, d);
  int r0 = 0;
  for (const Mat& e : stacked) {
    for (int r = 0; r < e.rows(); ++r)
      for (int c = 0; c < d; ++c) big.at(r0 + r, c) = e.at(r, c);
    r0 += e.rows();
  }
  return kernel_basis(big);
}

long VermaModule::expected_dim(const RootVec& offset) const {
  std::vector<Eps> gens;
  if (spec_.full_verma) {
    gens = rs_.positive_roots();
  } else {
    std::vector<Eps> excluded = spec_.variant == Variant::M
                                    ? spec_.blocks.stab_positive_roots(rs_)
                                    : spec_.blocks.levi_positive_roots(rs_);
    for (const Eps& r : rs_.positive_roots())
      if (std::find(excluded.begin(), excluded.end(), r) == excluded.end()) gens.push_back(r);
  }
  return kostant_count(rs_, rs_.from_simple_coords(offset), gens);
}

// ---------------------------------------------------------------------------

TensorModule::TensorModule(Module& a, Module& b) : Module(a.root_system()), a_(a), b_(b) {}

const std::vector<TensorModule::Component>& TensorModule::components(const RootVec& offset) {
  auto it = comp_.find(offset);
  if (it != comp_.end()) return it->second;
  std::vector<Component> cs;
  int base = 0;
  for (const RootVec& a_off : a_.finite_offsets()) {
    RootVec b_off = rv_sub(offset, a_off);
    if (!rv_nonneg(b_off)) continue;
    int ad = a_.dim(a_off), bd = b_.dim(b_off);
    if (ad == 0 || bd == 0) continue;
    cs.push_back(Component{a_off, b_off, ad, bd, base});
    base += ad * bd;
  }
  auto [jt, ok] = comp_.emplace(offset, std::move(cs));
  return jt->second;
}

int TensorModule::dim(const RootVec& offset) {
  int d = 0;
  for (const auto& c : components(offset)) d += c.a_dim * c.b_dim;
  return d;
}

bool TensorModule::in_range(const RootVec& offset) const {
  for (const RootVec& a_off : a_.finite_offsets()) {
    RootVec b_off = rv_sub(offset, a_off);
    if (!rv_nonneg(b_off)) continue;
    if (!b_.in_range(b_off)) return false;
  }
  return true;
}

Scalar TensorModule::top_qpow(const Eps& mu) { return a_.top_qpow(mu) * b_.top_qpow(mu); }

const Mat& TensorModule::f_action(int i, const RootVec& from) {
  auto key = std::make_pair(i, from);
  auto it = fmat_.find(key);
  if (it != fmat_.end()) return it->second;
  RootVec target = rv_add(from, rv_simple(i));
  const auto& src = components(from);
  const auto& dst = components(target);
  Mat m(dim(target), dim(from));
  auto find_dst = [&](const RootVec& a_off) -> const Component* {
    for (const auto& c : dst)
      if (c.a_off == a_off) return &c;
    return nullptr;
  };
  for (const auto& c : src) {
    // f_i (x) K_i^{-1}
    if (const Component* t = find_dst(rv_add(c.a_off, rv_simple(i)))) {
      const Mat& fa = a_.f_action(i, c.a_off);
      Scalar kinv = b_.k_value(i, c.b_off).inv();
      for (int ai = 0; ai < c.a_dim; ++ai)
        for (int ar = 0; ar < fa.rows(); ++ar) {
          if (fa.at(ar, ai).is_zero()) continue;
          for (int bi = 0; bi < c.b_dim; ++bi)
            m.at(index_in(*t, ar, bi), index_in(c, ai, bi)) += fa.at(ar, ai) * kinv;
        }
    }
    // 1 (x) f_i
    if (const Component* t = find_dst(c.a_off)) {
      const Mat& fb = b_.f_action(i, c.b_off);
      for (int bi = 0; bi < c.b_dim; ++bi)
        for (int br = 0; br < fb.rows(); ++br) {
          if (fb.at(br, bi).is_zero()) continue;
          for (int ai = 0; ai < c.a_dim; ++ai)
            m.at(index_in(*t, ai, br), index_in(c, ai, bi)) += fb.at(br, bi);
        }
    }
  }
  auto [jt, ok] = fmat_.emplace(key, std::move(m));
  return jt->second;
}

const Mat& TensorModule::e_action(int i, const RootVec& from) {
  auto key = std::make_pair(i, from);
  auto it = emat_.find(key);
  if (it != emat_.end()) return it->second;
  RootVec target = rv_sub(from, rv_simple(i));
  const auto& src = components(from);
  Mat m(rv_nonneg(target) ? dim(target) : 0, dim(from));
  if (m.rows() > 0) {
    const auto& dst = components(target);
    auto find_dst = [&](const RootVec& a_off) -> const Component* {
      for (const auto& c : dst)
        if (c.a_off == a_off) return &c;
      return nullptr;
    };
    for (const auto& c : src) {
      // e_i (x) 1
      RootVec a_up = rv_sub(c.a_off, rv_simple(i));
      if (rv_nonneg(a_up)) {
        if (const Component* t = find_dst(a_up)) {
          const Mat& ea = a_.e_action(i, c.a_off);
          for (int ai = 0; ai < c.a_dim; ++ai)
            for (int ar = 0; ar < ea.rows(); ++ar) {
              if (ea.at(ar, ai).is_zero()) continue;
              for (int bi = 0; bi < c.b_dim; ++bi)
                m.at(index_in(*t, ar, bi), index_in(c, ai, bi)) += ea.at(ar, ai);
            }
        }
      }
      // K_i (x) e_i
      if (const Component* t = find_dst(c.a_off)) {
        const Mat& eb = b_.e_action(i, c.b_off);
        Scalar k = a_.k_value(i, c.a_off);
        for (int bi = 0; bi < c.b_dim; ++bi)
          for (int br = 0; br < eb.rows(); ++br) {
            if (eb.at(br, bi).is_zero()) continue;
            for (int ai = 0; ai < c.a_dim; ++ai)
              m.at(index_in(*t, ai, br), index_in(c, ai, bi)) += eb.at(br, bi) * k;
          }
      }
    }
  }
  auto [jt, ok] = emat_.emplace(key, std::move(m));
  return jt->second;
}

}  // namespace spq
