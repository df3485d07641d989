#pragma once

#include "verma.hpp"

namespace spq {

// The 2n-dimensional vector representation.  Basis w_1..w_{2n} with weights
// (e_1, ..., e_n, -e_n, ..., -e_1); generator matrices are q-independent.
class VectorRep {
 public:
  explicit VectorRep(const RootSystem& rs);

  int dim() const { return 2 * rs_.rank(); }
  const RootSystem& root_system() const { return rs_; }
  const Mat& e(int i) const { return e_[size_t(i - 1)]; }
  const Mat& f(int i) const { return f_[size_t(i - 1)]; }
  Mat k(int i, int power = 1) const;  // diagonal q^{power*(a_i, wt_j)}
  const Eps& weight(int j) const { return weights_[size_t(j - 1)]; }  // 1-based
  // q^{sum_j c_j h-pairings}: diagonal of q^{2 h_rho}
  Mat q2rho() const;

 private:
  const RootSystem& rs_;
  std::vector<Mat> e_, f_;
  std::vector<Eps> weights_;
};

// The vector representation as a graded Module (offsets from e_1).
class VectorModule : public Module {
 public:
  explicit VectorModule(const VectorRep& rep);

  int dim(const RootVec& offset) override;
  bool in_range(const RootVec&) const override { return true; }
  const Mat& f_action(int i, const RootVec& from) override;
  const Mat& e_action(int i, const RootVec& from) override;
  Scalar top_qpow(const Eps& mu) override;
  const std::vector<RootVec>& finite_offsets() const override { return offsets_; }

  int basis_of(const RootVec& offset) const;  // 1-based basis index, 0 if none
  const RootVec& offset_of(int j) const { return by_index_[size_t(j - 1)]; }

 private:
  const VectorRep& rep_;
  std::vector<RootVec> offsets_;
  std::vector<RootVec> by_index_;
  std::map<RootVec, int> index_;
  std::map<std::pair<int, RootVec>, Mat> fmat_, emat_;
};

// Explicit R on C^{2n} (x) C^{2n} (FRT normalization), S = P R, the rank-one
// projector kappa, and the flip P.  Index convention: (i-1)*2n + (j-1).
struct ExplicitR {
  explicit ExplicitR(const VectorRep& rep);

  Mat R, P, S, kappa;
  // classical r-matrix (the semiclassical limit target)
  Mat r_classical;
};

// Quasi-R-matrix: Theta = sum over beta of Theta_beta in U-_{-beta} (x)
// U+_{beta}, solved degree by degree from the intertwining property of
// q^{t0} * Theta.  Terms are stored over the quotient-basis words.
class QuasiR {
 public:
  QuasiR(WordAlgebra& wa, int max_height);

  struct Term {
    Word fw, ew;
    Scalar c;
  };
  int max_height() const { return max_height_; }
  const std::vector<RootVec>& weights() const { return weights_; }  // by height
  const std::vector<Term>& terms(const RootVec& beta) const;

 private:
  void solve(const RootVec& beta);

  WordAlgebra& wa_;
  int max_height_;
  std::vector<RootVec> weights_;
  std::map<RootVec, std::vector<Term>> theta_;
};

// Q = (pi (x) id)(R21 R) acting on TensorModule(vector leg, W).  The leg-A
// module must be the vector module (or any finite module; pi is its action).
class QOperator {
 public:
  QOperator(QuasiR& theta, TensorModule& t);

  const Mat& matrix(const RootVec& offset);
  TensorModule& tensor() { return t_; }

  // q^{t0} Theta (swap = false) or q^{t0} Theta_21 (swap = true) on a slice
  Mat half_r(const RootVec& offset, bool swap);

 private:

  QuasiR& theta_;
  TensorModule& t_;
  WordActionCache a_words_, b_words_;
  std::map<RootVec, Mat> cache_;
};

// (pi (x) pi)(q^{t0} Theta) as a 4n^2 matrix, for calibration against R;
// with swap = true the flipped element (pi (x) pi)(q^{t0} Theta_21).
Mat quasi_r_on_vector_pair(QuasiR& theta, const VectorRep& rep, bool swap = false);

// single scalar c with  lhs = c * rhs  entrywise; nullopt if not proportional
std::optional<Scalar> proportionality(const Mat& lhs, const Mat& rhs);

}  // namespace spq
