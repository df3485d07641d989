#pragma once

#include <map>
#include <optional>
#include <vector>

#include "rootdata.hpp"

namespace spq {

// Word in the simple-root generators, letters 1..n packed 4 bits each,
// leftmost letter first.  The rightmost letter acts first on a module.
struct Word {
  uint8_t len = 0;
  uint64_t bits = 0;

  static constexpr int kMaxLen = 15;

  int letter(int pos) const { return int((bits >> (4 * pos)) & 0xF); }  // pos 0 = leftmost
  bool empty() const { return len == 0; }

  Word append(int letter) const {  // on the right
    Word w = *this;
    w.bits |= uint64_t(letter) << (4 * w.len);
    w.len++;
    return w;
  }
  Word prepend(int letter) const {  // on the left
    Word w;
    w.len = uint8_t(len + 1);
    w.bits = (bits << 4) | uint64_t(letter);
    return w;
  }
  Word concat(const Word& o) const {
    Word w;
    w.len = uint8_t(len + o.len);
    w.bits = bits | (o.bits << (4 * len));
    return w;
  }
  Word drop(int pos) const {  // remove the letter at pos
    Word w;
    w.len = uint8_t(len - 1);
    uint64_t low = bits & ((uint64_t(1) << (4 * pos)) - 1);
    uint64_t high = (bits >> (4 * (pos + 1))) << (4 * pos);
    w.bits = low | high;
    return w;
  }
  Word suffix_after(int pos) const {  // letters strictly right of pos
    Word w;
    w.len = uint8_t(len - pos - 1);
    w.bits = bits >> (4 * (pos + 1));
    return w;
  }
  int last() const { return letter(len - 1); }

  bool operator==(const Word& o) const { return len == o.len && bits == o.bits; }
  bool operator<(const Word& o) const {
    if (len != o.len) return len < o.len;
    return bits < o.bits;
  }

  RootVec root_coords() const;
  Eps weight(const RootSystem& rs) const;
  std::string str() const;  // e.g. "f1.f2.fb"
};

using WordSum = std::map<Word, Scalar>;

void ws_add(WordSum& acc, const Word& w, const Scalar& c);
void ws_add(WordSum& acc, const WordSum& other, const Scalar& c = Scalar(1));
WordSum ws_concat(const WordSum& a, const WordSum& b);
bool ws_is_zero(const WordSum& a);
std::string ws_str(const WordSum& a);

// Cartan exponent vector: q^{sum k_i h_{a_i}}.
using Cart = std::array<int8_t, kMaxRank>;
inline Cart cart_zero() {
  Cart c{};
  c.fill(0);
  return c;
}
inline Cart cart_add(const Cart& a, const Cart& b) {
  Cart r;
  for (int i = 0; i < kMaxRank; ++i) r[i] = int8_t(a[i] + b[i]);
  return r;
}
// (sum k_i a_i, v) for an epsilon vector v.
int cart_dot(const RootSystem& rs, const Cart& k, const Eps& v);

// Element of U_q(b-) (sign -1) or U_q(b+) (sign +1): a combination of
// word * q^{h_k} with all Cartan factors straightened to the right.
struct Decorated {
  int sign = -1;
  std::map<std::pair<Word, Cart>, Scalar> terms;

  static Decorated one(int sign);
  static Decorated generator(int sign, int letter);
  static Decorated cartan(int sign, const Cart& k);
  bool is_zero() const;
};

Decorated dec_add(const Decorated& a, const Decorated& b, const Scalar& coeff = Scalar(1));
Decorated dec_mul(const RootSystem& rs, const Decorated& a, const Decorated& b);
Decorated dec_scale(const Decorated& a, const Scalar& c);
// xy - a*yx
Decorated q_commutator(const RootSystem& rs, const Decorated& x, const Decorated& y,
                       const Scalar& a);
// Strip a pure-word Decorated (all Cartan exponents zero) to a WordSum.
WordSum dec_words(const Decorated& d);
Decorated dec_from_words(int sign, const WordSum& w);

// Mixed normal-ordered element of U_q(g): sum of  f-word * q^{h_k} * e-word.
struct TriKey {
  Word f;
  Cart k;
  Word e;
  bool operator<(const TriKey& o) const {
    if (!(f == o.f)) return f < o.f;
    if (k != o.k) return k < o.k;
    return e < o.e;
  }
  bool operator==(const TriKey& o) const { return f == o.f && k == o.k && e == o.e; }
};
using TriSum = std::map<TriKey, Scalar>;

void tri_add(TriSum& acc, const TriKey& k, const Scalar& c);
// Normal order (e-word u) * (f-word w); the straightening commutators
// [e_i, f_i] = (q^{h_i} - q^{-h_i})/(q_i - q_i^{-1}) are expanded exactly.
TriSum normal_order_ef(const RootSystem& rs, const Word& u, const Word& w);
// Product of two normal-ordered elements (cross degrees stay small here).
TriSum tri_mul(const RootSystem& rs, const TriSum& a, const TriSum& b);
TriSum tri_from(const Word& f, const Cart& k, const Word& e);

// ---------------------------------------------------------------------------
// Weight slices of U_q(g+-) modulo the Serre ideal, and module variants.

// Serre relation in word form, with its weight in simple-root coords.
struct SerreElement {
  RootVec weight;
  WordSum words;
};
std::vector<SerreElement> serre_elements(const RootSystem& rs);

// One weight slice presented as span(columns)/rowspace(rows).
class QuotientSlice {
 public:
  // columns: the words spanning the slice (deterministic order)
  // rows: generators of the null subspace, over those columns
  QuotientSlice(std::vector<Word> columns, const std::vector<WordSum>& rows);

  int dim() const { return int(basis_.size()); }
  int null_rank() const { return null_rank_; }
  const std::vector<Word>& columns() const { return columns_; }
  const std::vector<Word>& basis() const { return basis_; }

  // Coordinates of a word combination in the quotient basis.  Words not
  // present among the columns are rejected unless `missing_is_zero`.
  std::vector<Scalar> project(const WordSum& v, bool missing_is_zero = false) const;
  // Membership of a word combination in the null subspace.
  bool in_null_space(const WordSum& v, bool missing_is_zero = false) const;

 private:
  std::vector<Word> columns_;
  std::map<Word, int> col_index_;
  std::vector<Word> basis_;
  std::map<Word, int> basis_index_;
  // pivot column -> tail over basis coordinates (fully back-substituted)
  std::map<int, std::vector<Scalar>> pivot_tails_;
  int null_rank_ = 0;
};

// All words with the given simple-root multiset, lexicographic order.
std::vector<Word> words_of_weight(const RootSystem& rs, const RootVec& beta);

// Cache of U_q(g+-) slices.  Serre relations have the same coefficients on
// both signs, so the slices coincide; the sign distinction is kept for
// callers that track it.
class WordAlgebra {
 public:
  WordAlgebra(const RootSystem& rs, int height_bound = 10);

  const RootSystem& root_system() const { return rs_; }
  int height_bound() const { return height_bound_; }

  const QuotientSlice& slice(int sign, const RootVec& beta);
  const std::vector<SerreElement>& serre() const { return serre_; }

  // Serre-null-space rows for a weight, restricted to `allowed` columns
  // (allowed = words whose last letter passes `keep_last`).
  std::vector<WordSum> serre_rows(const RootVec& beta,
                                  const std::vector<Word>& allowed_columns) const;

 private:
  const RootSystem& rs_;
  int height_bound_;
  std::vector<SerreElement> serre_;
  std::map<RootVec, QuotientSlice> cache_;
};

// ---------------------------------------------------------------------------
// Distinguished elements.

// f_mu = [f_i, [f_{i+1}, ... [f_{j-1}, f_j]_q ]_q ]_q  for a gl-type root
// a_i + ... + a_j, and the q^{-1} variant.
WordSum gl_root_vector(const RootSystem& rs, int i, int j, bool tilde);

struct DeltaVectors {
  WordSum f_gamma, f_gamma_tilde, f_delta;
};
DeltaVectors build_f_delta(const RootSystem& rs, const BlockStructure& b);

// The nested single-commutator presentation of f_delta (same element of the
// Serre quotient).
WordSum f_delta_nested(const RootSystem& rs, const BlockStructure& b);

// psi_i = f_{a_i} ... f_{a_m} (i = 1..m), phi_i of degree 2p+1 (i = 1..p+1);
// symmetric case only (no GL blocks).
struct PhiPsi {
  std::vector<Word> psi;
  std::vector<Word> phi;
};
PhiPsi build_phi_psi(const RootSystem& rs, const BlockStructure& b);

// Coefficients c_i with  f_delta = sum c_i phi_i  in the parabolic word
// quotient at weight delta (columns filtered by the Levi).  Throws
// Error(construction_failure) if there is no solution.
std::vector<Scalar> expand_in_phis(WordAlgebra& wa, const BlockStructure& b);

// Parabolic module slice builder shared with the Verma model: columns are the
// words of weight beta whose last letter is not in Pi_l; rows are the Serre
// rows plus, for the quotient variant, x * f_delta for x of weight beta-delta.
QuotientSlice module_slice(WordAlgebra& wa, const BlockStructure& b, const RootVec& beta,
                           const WordSum* f_delta_ideal);

}  // namespace spq
