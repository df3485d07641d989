#include "wordalg.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <set>
#include <sstream>

#include "mat.hpp"

namespace spq {

RootVec Word::root_coords() const {
  RootVec c{};
  c.fill(0);
  for (int k = 0; k < len; ++k) c[size_t(letter(k) - 1)]++;
  return c;
}

Eps Word::weight(const RootSystem& rs) const {
  Eps w = eps_zero();
  for (int k = 0; k < len; ++k) w = eps_add(w, rs.simple(letter(k)));
  return w;
}

std::string Word::str() const {
  if (len == 0) return "1";
  std::ostringstream os;
  for (int k = 0; k < len; ++k) os << (k ? "." : "") << "f" << letter(k);
  return os.str();
}

void ws_add(WordSum& acc, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = acc.find(w);
  if (it == acc.end()) {
    acc.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

void ws_add(WordSum& acc, const WordSum& other, const Scalar& c) {
  for (const auto& [w, v] : other) ws_add(acc, w, v * c);
}

WordSum ws_concat(const WordSum& a, const WordSum& b) {
  WordSum r;
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) ws_add(r, wa.concat(wb), ca * cb);
  return r;
}

bool ws_is_zero(const WordSum& a) { return a.empty(); }

std::string ws_str(const WordSum& a) {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : a) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")*" << w.str();
  }
  return os.str();
}

int cart_dot(const RootSystem& rs, const Cart& k, const Eps& v) {
  int s = 0;
  for (int i = 1; i <= rs.rank(); ++i)
    if (k[size_t(i - 1)] != 0) s += int(k[size_t(i - 1)]) * eps_dot(rs.simple(i), v);
  return s;
}

Decorated Decorated::one(int sign) {
  Decorated d;
  d.sign = sign;
  d.terms.emplace(std::make_pair(Word{}, cart_zero()), Scalar(1));
  return d;
}

Decorated Decorated::generator(int sign, int letter) {
  Decorated d;
  d.sign = sign;
  Word w;
  d.terms.emplace(std::make_pair(w.append(letter), cart_zero()), Scalar(1));
  return d;
}

Decorated Decorated::cartan(int sign, const Cart& k) {
  Decorated d;
  d.sign = sign;
  d.terms.emplace(std::make_pair(Word{}, k), Scalar(1));
  return d;
}

bool Decorated::is_zero() const { return terms.empty(); }

Decorated dec_add(const Decorated& a, const Decorated& b, const Scalar& coeff) {
  Decorated r = a;
  for (const auto& [k, c] : b.terms) {
    Scalar v = c * coeff;
    auto it = r.terms.find(k);
    if (it == r.terms.end()) {
      if (!v.is_zero()) r.terms.emplace(k, v);
    } else {
      it->second += v;
      if (it->second.is_zero()) r.terms.erase(it);
    }
  }
  return r;
}

Decorated dec_scale(const Decorated& a, const Scalar& c) {
  Decorated r;
  r.sign = a.sign;
  if (c.is_zero()) return r;
  for (const auto& [k, v] : a.terms) r.terms.emplace(k, v * c);
  return r;
}

Decorated dec_mul(const RootSystem& rs, const Decorated& a, const Decorated& b) {
  assert(a.sign == b.sign);
  Decorated r;
  r.sign = a.sign;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) {
      // (w1 q^{k1}) (w2 q^{k2}) = q^{sign*(-(k1,wt w2))} ... for f-words the
      // rule q^{h} f = q^{-(h,a)} f q^{h} gives the factor below.
      Eps wt2 = kb.first.weight(rs);
      int d = cart_dot(rs, ka.second, wt2);
      int exp = a.sign < 0 ? -d : d;
      Scalar c = ca * cb * Scalar::q_pow(exp);
      auto key = std::make_pair(ka.first.concat(kb.first), cart_add(ka.second, kb.second));
      auto it = r.terms.find(key);
      if (it == r.terms.end()) {
        if (!c.is_zero()) r.terms.emplace(key, c);
      } else {
        it->second += c;
        if (it->second.is_zero()) r.terms.erase(it);
      }
    }
  return r;
}

Decorated q_commutator(const RootSystem& rs, const Decorated& x, const Decorated& y,
                       const Scalar& a) {
  return dec_add(dec_mul(rs, x, y), dec_mul(rs, y, x), -a);
}

WordSum dec_words(const Decorated& d) {
  WordSum r;
  for (const auto& [k, c] : d.terms) {
    if (k.second != cart_zero())
      throw Error(Errc::invalid_argument, "decorated element carries Cartan factors");
    ws_add(r, k.first, c);
  }
  return r;
}

Decorated dec_from_words(int sign, const WordSum& w) {
  Decorated d;
  d.sign = sign;
  for (const auto& [word, c] : w) d.terms.emplace(std::make_pair(word, cart_zero()), c);
  return d;
}

void tri_add(TriSum& acc, const TriKey& k, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = acc.find(k);
  if (it == acc.end()) {
    acc.emplace(k, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) acc.erase(it);
  }
}

TriSum tri_from(const Word& f, const Cart& k, const Word& e) {
  TriSum t;
  t.emplace(TriKey{f, k, e}, Scalar(1));
  return t;
}

// e_i * (f-word w): push e_i through.  Result: w*e_i plus commutator terms
// (w without one f_i) * (q^{h_i} - q^{-h_i})/(q_i - q_i^{-1}) straightened.
static TriSum push_e_through(const RootSystem& rs, int i, const Word& w) {
  TriSum out;
  Word e;
  tri_add(out, TriKey{w, cart_zero(), e.append(i)}, Scalar(1));
  Scalar denom = Scalar::q_pow(rs.q_exponent(i)) - Scalar::q_pow(-rs.q_exponent(i));
  for (int pos = 0; pos < w.len; ++pos) {
    if (w.letter(pos) != i) continue;
    Word rest = w.drop(pos);
    Eps wt_suffix = w.suffix_after(pos).weight(rs);
    int d = eps_dot(rs.simple(i), wt_suffix);
    Cart kp = cart_zero();
    kp[size_t(i - 1)] = 1;
    Cart km = cart_zero();
    km[size_t(i - 1)] = -1;
    // (q^{h_i} - q^{-h_i}) moved right through the suffix
    tri_add(out, TriKey{rest, kp, Word{}}, Scalar::q_pow(-d) / denom);
    tri_add(out, TriKey{rest, km, Word{}}, -(Scalar::q_pow(d) / denom));
  }
  return out;
}

TriSum normal_order_ef(const RootSystem& rs, const Word& u, const Word& w) {
  if (u.empty()) return tri_from(w, cart_zero(), Word{});
  // u = u' . i  (rightmost letter acts on w first)
  int i = u.last();
  Word u_rest = u;
  u_rest.len--;
  u_rest.bits &= (uint64_t(1) << (4 * u_rest.len)) - 1;
  TriSum stage = push_e_through(rs, i, w);
  TriSum out;
  for (const auto& [key, c] : stage) {
    // u' * (f q^{k} e) = sum (f' q^{k'} e') q^{k} e  with the k factor pushed
    // through e' of the recursive result: q^{k'} commutes with q^{k}.
    TriSum rec = normal_order_ef(rs, u_rest, key.f);
    for (const auto& [rk, rc] : rec) {
      int d = cart_dot(rs, key.k, rk.e.weight(rs));
      // e' q^{k} = q^{-(k, wt e')} q^{k} e'
      Scalar coeff = c * rc * Scalar::q_pow(-d);
      tri_add(out, TriKey{rk.f, cart_add(rk.k, key.k), rk.e.concat(key.e)}, coeff);
    }
  }
  return out;
}

TriSum tri_mul(const RootSystem& rs, const TriSum& a, const TriSum& b) {
  TriSum out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      // (f1 q^{k1} e1)(f2 q^{k2} e2): first order e1 * f2.
      TriSum mid = normal_order_ef(rs, ka.e, kb.f);
      for (const auto& [km, cm] : mid) {
        // f1 q^{k1} (fm q^{km} em) q^{k2} e2
        int d1 = cart_dot(rs, ka.k, km.f.weight(rs));   // q^{k1} through fm
        int d2 = cart_dot(rs, kb.k, km.e.weight(rs));   // em through q^{k2}
        Scalar coeff = ca * cb * cm * Scalar::q_pow(-d1) * Scalar::q_pow(-d2);
        TriKey key{ka.f.concat(km.f), cart_add(cart_add(km.k, ka.k), kb.k),
                   km.e.concat(kb.e)};
        tri_add(out, key, coeff);
      }
    }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<SerreElement> serre_elements(const RootSystem& rs) {
  std::vector<SerreElement> out;
  int n = rs.rank();
  auto word_of = [](std::initializer_list<int> ls) {
    Word w;
    for (int l : ls) w = w.append(l);
    return w;
  };
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (a == b) continue;
      int cab = rs.cartan(a, b);
      SerreElement s;
      if (cab == 0) {
        if (a < b) {
          ws_add(s.words, word_of({a, b}), Scalar(1));
          ws_add(s.words, word_of({b, a}), Scalar(-1));
          Word w = word_of({a, b});
          s.weight = w.root_coords();
          out.push_back(std::move(s));
        }
        continue;
      }
      bool a_long = rs.is_long(a), b_long = rs.is_long(b);
      if (!a_long && !b_long) {
        // x^2 y - (q + q^-1) x y x + y x^2
        ws_add(s.words, word_of({a, a, b}), Scalar(1));
        ws_add(s.words, word_of({a, b, a}), -(Scalar::q_pow(1) + Scalar::q_pow(-1)));
        ws_add(s.words, word_of({b, a, a}), Scalar(1));
        s.weight = word_of({a, a, b}).root_coords();
        out.push_back(std::move(s));
      } else if (a_long && !b_long) {
        // b^2 x - (q^2 + q^-2) b x b + x b^2
        ws_add(s.words, word_of({a, a, b}), Scalar(1));
        ws_add(s.words, word_of({a, b, a}), -(Scalar::q_pow(2) + Scalar::q_pow(-2)));
        ws_add(s.words, word_of({b, a, a}), Scalar(1));
        s.weight = word_of({a, a, b}).root_coords();
        out.push_back(std::move(s));
      } else if (!a_long && b_long) {
        // x^3 b - (q^2+1+q^-2) x^2 b x + (q^2+1+q^-2) x b x^2 - b x^3
        Scalar c = Scalar::q_pow(2) + Scalar(1) + Scalar::q_pow(-2);
        ws_add(s.words, word_of({a, a, a, b}), Scalar(1));
        ws_add(s.words, word_of({a, a, b, a}), -c);
        ws_add(s.words, word_of({a, b, a, a}), c);
        ws_add(s.words, word_of({b, a, a, a}), Scalar(-1));
        s.weight = word_of({a, a, a, b}).root_coords();
        out.push_back(std::move(s));
      }
    }
  return out;
}

std::vector<Word> words_of_weight(const RootSystem& rs, const RootVec& beta) {
  std::vector<Word> out;
  RootVec left = beta;
  Word cur;
  std::function<void()> rec = [&]() {
    bool done = true;
    for (int i = 1; i <= rs.rank(); ++i)
      if (left[size_t(i - 1)] > 0) done = false;
    if (done) {
      out.push_back(cur);
      return;
    }
    for (int i = 1; i <= rs.rank(); ++i) {
      if (left[size_t(i - 1)] == 0) continue;
      left[size_t(i - 1)]--;
      Word saved = cur;
      cur = cur.append(i);
      rec();
      cur = saved;
      left[size_t(i - 1)]++;
    }
  };
  rec();
  return out;
}

// Sparse elimination keyed by smallest column.
namespace {

using SRow = std::vector<std::pair<int, Scalar>>;  // sorted by column

class Eliminator {
 public:
  // returns true if the row was independent
  bool add_row(SRow r) {
    while (!r.empty()) {
      int c = r.front().first;
      auto it = rows_.find(c);
      if (it == rows_.end()) {
        Scalar inv = r.front().second.inv();
        for (auto& e : r) e.second *= inv;
        rows_.emplace(c, std::move(r));
        return true;
      }
      r = axpy(r, it->second, -r.front().second);
    }
    return false;
  }

  void finalize() {
    // back-substitute: highest pivots first
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      SRow& row = it->second;
      bool changed = true;
      while (changed) {
        changed = false;
        for (size_t i = 1; i < row.size(); ++i) {
          auto jt = rows_.find(row[i].first);
          if (jt != rows_.end() && jt->first != it->first) {
            row = axpy(row, jt->second, -row[i].second);
            changed = true;
            break;
          }
        }
      }
    }
  }

  const std::map<int, SRow>& rows() const { return rows_; }
  int rank() const { return int(rows_.size()); }

 private:
  static SRow axpy(const SRow& a, const SRow& b, const Scalar& c) {
    SRow r;
    r.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (a[i].first == b[j].first) {
        Scalar v = a[i].second + b[j].second * c;
        if (!v.is_zero()) r.push_back({a[i].first, v});
        ++i, ++j;
      } else if (a[i].first < b[j].first) {
        r.push_back(a[i++]);
      } else {
        Scalar v = b[j].second * c;
        if (!v.is_zero()) r.push_back({b[j].first, v});
        ++j;
      }
    }
    while (i < a.size()) r.push_back(a[i++]);
    while (j < b.size()) {
      Scalar v = b[j].second * c;
      if (!v.is_zero()) r.push_back({b[j].first, v});
      ++j;
    }
    return r;
  }

  std::map<int, SRow> rows_;
};

}  // namespace

QuotientSlice::QuotientSlice(std::vector<Word> columns, const std::vector<WordSum>& rows)
    : columns_(std::move(columns)) {
  for (size_t i = 0; i < columns_.size(); ++i) col_index_[columns_[i]] = int(i);
  Eliminator elim;
  for (const WordSum& row : rows) {
    SRow sr;
    for (const auto& [w, c] : row) {
      auto it = col_index_.find(w);
      if (it == col_index_.end())
        throw Error(Errc::invalid_argument, "row word outside slice columns");
      sr.push_back({it->second, c});
    }
    std::sort(sr.begin(), sr.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    elim.add_row(std::move(sr));
  }
  elim.finalize();
  null_rank_ = elim.rank();
  std::set<int> pivot_cols;
  for (const auto& [c, row] : elim.rows()) pivot_cols.insert(c);
  for (size_t i = 0; i < columns_.size(); ++i) {
    if (pivot_cols.count(int(i))) continue;
    basis_index_[columns_[i]] = int(basis_.size());
    basis_.push_back(columns_[i]);
  }
  for (const auto& [c, row] : elim.rows()) {
    std::vector<Scalar> tail(basis_.size());
    for (size_t i = 1; i < row.size(); ++i) {
      auto bi = basis_index_.find(columns_[size_t(row[i].first)]);
      if (bi == basis_index_.end())
        throw Error(Errc::construction_failure, "elimination not fully reduced");
      tail[size_t(bi->second)] = row[i].second;
    }
    pivot_tails_.emplace(c, std::move(tail));
  }
}

std::vector<Scalar> QuotientSlice::project(const WordSum& v, bool missing_is_zero) const {
  std::vector<Scalar> out(basis_.size());
  for (const auto& [w, c] : v) {
    auto it = col_index_.find(w);
    if (it == col_index_.end()) {
      if (missing_is_zero) continue;
      throw Error(Errc::invalid_argument, "word outside slice: " + w.str());
    }
    auto bt = basis_index_.find(w);
    if (bt != basis_index_.end()) {
      out[size_t(bt->second)] += c;
    } else {
      const auto& tail = pivot_tails_.at(it->second);
      // pivot column c0 satisfies c0 + tail = 0 in the quotient
      for (size_t k = 0; k < tail.size(); ++k)
        if (!tail[k].is_zero()) out[k] -= c * tail[k];
    }
  }
  return out;
}

bool QuotientSlice::in_null_space(const WordSum& v, bool missing_is_zero) const {
  auto coords = project(v, missing_is_zero);
  for (const auto& s : coords)
    if (!s.is_zero()) return false;
  return true;
}

WordAlgebra::WordAlgebra(const RootSystem& rs, int height_bound)
    : rs_(rs), height_bound_(height_bound), serre_(serre_elements(rs)) {}

std::vector<WordSum> WordAlgebra::serre_rows(const RootVec& beta,
                                             const std::vector<Word>& allowed) const {
  std::set<Word> allowed_set(allowed.begin(), allowed.end());
  std::vector<WordSum> rows;
  std::set<std::string> seen;
  for (const SerreElement& s : serre_) {
    RootVec rem;
    bool ok = true;
    for (int i = 0; i < rs_.rank(); ++i) {
      rem[size_t(i)] = int16_t(beta[size_t(i)] - s.weight[size_t(i)]);
      if (rem[size_t(i)] < 0) ok = false;
    }
    for (int i = rs_.rank(); i < kMaxRank; ++i) rem[size_t(i)] = 0;
    if (!ok) continue;
    // split rem into x (left) and y (right) multisets
    std::vector<RootVec> splits;
    RootVec cur{};
    cur.fill(0);
    std::function<void(int)> gen = [&](int i) {
      if (i == rs_.rank()) {
        splits.push_back(cur);
        return;
      }
      for (int v = 0; v <= rem[size_t(i)]; ++v) {
        cur[size_t(i)] = int16_t(v);
        gen(i + 1);
      }
      cur[size_t(i)] = 0;
    };
    gen(0);
    for (const RootVec& ysplit : splits) {
      RootVec xsplit;
      for (int i = 0; i < kMaxRank; ++i) xsplit[size_t(i)] = int16_t(rem[size_t(i)] - ysplit[size_t(i)]);
      auto ys = words_of_weight(rs_, ysplit);
      auto xs = words_of_weight(rs_, xsplit);
      for (const Word& y : ys) {
        for (const Word& x : xs) {
          WordSum row;
          for (const auto& [sw, sc] : s.words) {
            Word full = x.concat(sw).concat(y);
            if (!allowed_set.count(full)) continue;
            ws_add(row, full, sc);
          }
          if (row.empty()) continue;
          std::string key = ws_str(row);
          if (seen.insert(std::move(key)).second) rows.push_back(std::move(row));
        }
      }
    }
  }
  return rows;
}

const QuotientSlice& WordAlgebra::slice(int sign, const RootVec& beta) {
  (void)sign;
  auto it = cache_.find(beta);
  if (it != cache_.end()) return it->second;
  if (rs_.height(beta) > height_bound_)
    throw Error(Errc::height_bound, "slice height exceeds the configured bound");
  std::vector<Word> cols = words_of_weight(rs_, beta);
  std::vector<WordSum> rows = serre_rows(beta, cols);
  auto [jt, inserted] = cache_.emplace(beta, QuotientSlice(std::move(cols), rows));
  return jt->second;
}

// ---------------------------------------------------------------------------

WordSum gl_root_vector(const RootSystem& rs, int i, int j, bool tilde) {
  if (i == j) {
    WordSum w;
    ws_add(w, Word{}.append(i), Scalar(1));
    return w;
  }
  Scalar a = tilde ? Scalar::q_pow(-1) : Scalar::q_pow(1);
  WordSum inner = gl_root_vector(rs, i + 1, j, tilde);
  WordSum fi;
  ws_add(fi, Word{}.append(i), Scalar(1));
  WordSum r = ws_concat(fi, inner);
  ws_add(r, ws_concat(inner, fi), -a);
  return r;
}

DeltaVectors build_f_delta(const RootSystem& rs, const BlockStructure& b) {
  DeltaVectors out;
  int lo = b.alpha_index(), hi = rs.rank() - 1;
  out.f_gamma = gl_root_vector(rs, lo, hi, false);
  out.f_gamma_tilde = gl_root_vector(rs, lo, hi, true);
  WordSum fb;
  ws_add(fb, Word{}.append(rs.long_root_index()), Scalar(1));
  // [f_gamma, [f_gamma~, f_b]_{q^-2}]_{q^2}
  auto comm = [&](const WordSum& x, const WordSum& y, const Scalar& a) {
    WordSum r = ws_concat(x, y);
    ws_add(r, ws_concat(y, x), -a);
    return r;
  };
  WordSum inner = comm(out.f_gamma_tilde, fb, Scalar::q_pow(-2));
  out.f_delta = comm(out.f_gamma, inner, Scalar::q_pow(2));
  return out;
}

WordSum f_delta_nested(const RootSystem& rs, const BlockStructure& b) {
  int lo = b.alpha_index(), hi = rs.rank() - 1;  // gamma = a_lo + ... + a_hi
  auto comm = [&](const WordSum& x, const WordSum& y, const Scalar& a) {
    WordSum r = ws_concat(x, y);
    ws_add(r, ws_concat(y, x), -a);
    return r;
  };
  auto gen = [&](int i) {
    WordSum w;
    ws_add(w, Word{}.append(i), Scalar(1));
    return w;
  };
  // innermost: [f_lo, ... [f_{hi-1}, [f_hi, f_b]_{q^2}]_q ... ]_q
  WordSum acc = comm(gen(hi), gen(rs.long_root_index()), Scalar::q_pow(2));
  for (int i = hi - 1; i >= lo; --i) acc = comm(gen(i), acc, Scalar::q_pow(1));
  // wrap: [f_lo, [f_{lo+1}, ... [f_hi, acc]_{q^-1} ... ]_{q^-1}]_{q^-2}
  for (int i = hi; i > lo; --i) acc = comm(gen(i), acc, Scalar::q_pow(-1));
  acc = comm(gen(lo), acc, Scalar::q_pow(-2));
  return acc;
}

PhiPsi build_phi_psi(const RootSystem& rs, const BlockStructure& b) {
  if (b.ell() != 0)
    throw Error(Errc::unsupported, "phi/psi monomials are defined for the symmetric case only");
  PhiPsi out;
  int n = rs.rank(), m = b.m, p = b.p;
  for (int i = 1; i <= m; ++i) {
    Word w;
    for (int k = i; k <= m; ++k) w = w.append(k);
    out.psi.push_back(w);
  }
  for (int i = 1; i <= p + 1; ++i) {
    Word w;
    for (int k = m + i - 1; k <= n - 1; ++k) w = w.append(k);  // ascending
    w = w.append(rs.long_root_index());
    for (int k = m + i - 2; k >= m; --k) w = w.append(k);  // descending
    for (int k = n - 1; k >= m; --k) w = w.append(k);      // trailing run
    out.phi.push_back(w);
  }
  return out;
}

QuotientSlice module_slice(WordAlgebra& wa, const BlockStructure& b, const RootVec& beta,
                           const WordSum* f_delta_ideal) {
  const RootSystem& rs = wa.root_system();
  if (rs.height(beta) > wa.height_bound())
    throw Error(Errc::height_bound, "module slice height exceeds the configured bound");
  std::vector<Word> all = words_of_weight(rs, beta);
  std::vector<Word> cols;
  for (const Word& w : all)
    if (w.empty() || !b.in_levi(w.last())) cols.push_back(w);
  std::vector<WordSum> rows = wa.serre_rows(beta, cols);
  if (f_delta_ideal) {
    RootVec dc;
    if (!rs.to_simple_coords(b.delta(rs), dc))
      throw Error(Errc::invalid_argument, "bad delta");
    RootVec rem;
    bool ok = true;
    for (int i = 0; i < kMaxRank; ++i) {
      rem[size_t(i)] = int16_t(beta[size_t(i)] - dc[size_t(i)]);
      if (rem[size_t(i)] < 0) ok = false;
    }
    if (ok) {
      std::set<Word> allowed(cols.begin(), cols.end());
      for (const Word& x : words_of_weight(rs, rem)) {
        WordSum row;
        for (const auto& [dw, c] : *f_delta_ideal) {
          Word full = x.concat(dw);
          if (!allowed.count(full)) continue;
          ws_add(row, full, c);
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }
  return QuotientSlice(std::move(cols), rows);
}

std::vector<Scalar> expand_in_phis(WordAlgebra& wa, const BlockStructure& b) {
  const RootSystem& rs = wa.root_system();
  PhiPsi pp = build_phi_psi(rs, b);
  DeltaVectors dv = build_f_delta(rs, b);
  RootVec dc;
  rs.to_simple_coords(b.delta(rs), dc);
  QuotientSlice slice = module_slice(wa, b, dc, nullptr);
  auto target = slice.project(dv.f_delta, /*missing_is_zero=*/true);
  Mat m(slice.dim(), int(pp.phi.size()));
  for (size_t j = 0; j < pp.phi.size(); ++j) {
    WordSum w;
    ws_add(w, pp.phi[j], Scalar(1));
    auto col = slice.project(w, true);
    for (int i = 0; i < slice.dim(); ++i) m.at(i, int(j)) = col[size_t(i)];
  }
  auto sol = solve_linear(m, target);
  if (sol.empty() && !std::all_of(target.begin(), target.end(),
                                  [](const Scalar& s) { return s.is_zero(); }))
    throw Error(Errc::construction_failure, "f_delta is not spanned by the phi monomials");
  if (sol.empty()) sol.assign(pp.phi.size(), Scalar());
  return sol;
}

}  // namespace spq
