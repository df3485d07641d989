#pragma once

#include <map>
#include <memory>

#include "mat.hpp"
#include "wordalg.hpp"

namespace spq {

// Offsets index weight slices from the top: the slice at offset gamma (a
// nonnegative combination of simple roots) has weight  top - gamma.
inline bool rv_nonneg(const RootVec& v) {
  for (int16_t x : v)
    if (x < 0) return false;
  return true;
}
inline RootVec rv_zero() {
  RootVec v{};
  v.fill(0);
  return v;
}
inline RootVec rv_add(const RootVec& a, const RootVec& b) {
  RootVec r;
  for (int i = 0; i < kMaxRank; ++i) r[i] = int16_t(a[i] + b[i]);
  return r;
}
inline RootVec rv_sub(const RootVec& a, const RootVec& b) {
  RootVec r;
  for (int i = 0; i < kMaxRank; ++i) r[i] = int16_t(a[i] - b[i]);
  return r;
}
inline RootVec rv_simple(int i) {
  RootVec r = rv_zero();
  r[size_t(i - 1)] = 1;
  return r;
}

// Weight-graded module with exact generator actions between slices.
class Module {
 public:
  explicit Module(const RootSystem& rs) : rs_(rs) {}
  virtual ~Module() = default;

  const RootSystem& root_system() const { return rs_; }

  // Slice dimension; 0 outside the weight cone of the module.
  virtual int dim(const RootVec& offset) = 0;
  // Whether the slice is fully represented in the truncation.
  virtual bool in_range(const RootVec& offset) const = 0;
  // f_i: offset -> offset + a_i ; e_i: offset -> offset - a_i.
  virtual const Mat& f_action(int i, const RootVec& from) = 0;
  virtual const Mat& e_action(int i, const RootVec& from) = 0;
  // q^{(mu, top)} for the highest weight "top" of the module.
  virtual Scalar top_qpow(const Eps& mu) = 0;

  // K_i on the slice at `offset` acts by this scalar.
  Scalar k_value(int i, const RootVec& offset);
  // q^{(mu, top - offset)}
  Scalar weight_qpow(const Eps& mu, const RootVec& offset);

  // Offsets with nonzero slices, for finite modules only.
  virtual const std::vector<RootVec>& finite_offsets() const;

 protected:
  const RootSystem& rs_;
};

// Composite f-word/e-word action (rightmost letter first), cached.
class WordActionCache {
 public:
  explicit WordActionCache(Module& m) : m_(m) {}
  // sign -1: word in the f generators, shifts offset by +wt(word);
  // sign +1: word in the e generators, shifts offset by -wt(word).
  const Mat& action(int sign, const Word& w, const RootVec& from);

 private:
  Module& m_;
  std::map<std::tuple<int, Word, RootVec>, Mat> cache_;
};

enum class Variant { HatM, M };

struct ModuleSpec {
  BlockStructure blocks;
  WeightAssignment weights;
  Variant variant = Variant::HatM;
  int depth = 8;
  bool full_verma = false;  // no parabolic part at all (Pi_l empty)

  static ModuleSpec parabolic(const BlockStructure& b, const WeightAssignment& w, Variant v,
                              int depth);
  static ModuleSpec generic_full(const RootSystem& rs, int depth);
};

// Truncated model of HatM (parabolic Verma) or M (its quotient by the
// submodule generated by f_delta v).
class VermaModule : public Module {
 public:
  VermaModule(WordAlgebra& wa, const ModuleSpec& spec);

  const ModuleSpec& spec() const { return spec_; }
  const QuotientSlice& slice(const RootVec& offset);

  int dim(const RootVec& offset) override;
  bool in_range(const RootVec& offset) const override;
  const Mat& f_action(int i, const RootVec& from) override;
  const Mat& e_action(int i, const RootVec& from) override;
  Scalar top_qpow(const Eps& mu) override;

  // Coordinates of (a word combination applied to the highest weight vector)
  // in the slice basis.  Words that die in the parabolic quotient are allowed;
  // anything else missing raises.
  std::vector<Scalar> project(const WordSum& v, const RootVec& offset);

  // e_i applied to a word combination, expressed in the target slice.
  std::vector<Scalar> act_e_words(int i, const WordSum& v, const RootVec& from);

  // The rows spanning the null subspace of a slice (Serre + parabolic +
  // f_delta rows), regenerated for invariant checks.
  std::vector<WordSum> null_rows(const RootVec& offset);

  // Basis of the joint kernel of all e_i on the slice (columns).
  Mat singular_vectors(const RootVec& offset);

  // Expected dimension of a slice per the Kostant oracle.
  long expected_dim(const RootVec& offset) const;

 private:
  bool levi_kills(int letter) const;
  WordSum e_on_word(int i, const Word& w) const;  // in the free span

  WordAlgebra& wa_;
  ModuleSpec spec_;
  WordSum f_delta_;  // empty unless variant M
  std::map<RootVec, QuotientSlice> slices_;
  std::map<std::pair<int, RootVec>, Mat> fmat_, emat_;
};

// Tensor product A (x) B with the coproduct
//   e_i -> e_i(x)1 + K_i(x)e_i,   f_i -> f_i(x)K_i^{-1} + 1(x)f_i.
// Leg A must be finite (it enumerates the slice decomposition).
class TensorModule : public Module {
 public:
  TensorModule(Module& a, Module& b);

  struct Component {
    RootVec a_off, b_off;
    int a_dim, b_dim, base;  // base = index of (a_idx=0, b_idx=0)
  };
  const std::vector<Component>& components(const RootVec& offset);
  // global index of (component c, a_idx, b_idx)
  static int index_in(const Component& c, int a_idx, int b_idx) {
    return c.base + a_idx * c.b_dim + b_idx;
  }

  int dim(const RootVec& offset) override;
  bool in_range(const RootVec& offset) const override;
  const Mat& f_action(int i, const RootVec& from) override;
  const Mat& e_action(int i, const RootVec& from) override;
  Scalar top_qpow(const Eps& mu) override;

  Module& leg_a() { return a_; }
  Module& leg_b() { return b_; }

 private:
  Module &a_, &b_;
  std::map<RootVec, std::vector<Component>> comp_;
  std::map<std::pair<int, RootVec>, Mat> fmat_, emat_;
};

}  // namespace spq
