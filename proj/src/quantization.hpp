#pragma once

#include <memory>
#include <optional>

#include "report.hpp"
#include "rmatrix.hpp"

namespace spq {

// Everything needed to run the verification suites for one case.
class Engine {
 public:
  Engine(int n, const BlockStructure& blocks, WeightMode mode, uint64_t seed, bool symbolic_z,
         int depth);

  const RootSystem& rs() const { return rs_; }
  const BlockStructure& blocks() const { return blocks_; }
  const WeightAssignment& weights() const { return weights_; }
  int depth() const { return depth_; }
  uint64_t seed() const { return seed_; }
  bool symbolic_z() const { return symbolic_z_; }
  WeightMode mode() const { return mode_; }
  std::string mode_string() const;

  WordAlgebra& wa() { return wa_; }
  VectorRep& rep() { return rep_; }
  VectorModule& vec() { return vec_; }
  VermaModule& hat() { return *hat_; }
  VermaModule& quo();  // throws in generic mode
  QuasiR& theta();
  TensorModule& tensor_hat();
  TensorModule& tensor_quo();
  QOperator& q_hat();
  QOperator& q_quo();

  Report new_report(const std::string& suite) const;

  // all cone points of height <= hmax
  std::vector<RootVec> cone_points(int hmax) const;

 private:
  RootSystem rs_;
  BlockStructure blocks_;
  uint64_t seed_;
  bool symbolic_z_;
  WeightMode mode_;
  std::vector<Gauss> zvals_;
  WeightAssignment weights_;
  int depth_;
  WordAlgebra wa_;
  VectorRep rep_;
  VectorModule vec_;
  std::unique_ptr<VermaModule> hat_, quo_;
  std::unique_ptr<QuasiR> theta_;
  std::unique_ptr<TensorModule> that_, tquo_;
  std::unique_ptr<QOperator> qhat_, qquo_;
};

// Eigenvalue lists of Q (2l+3 on the parabolic module, 2l+2 on the quotient).
std::vector<Scalar> eigenvalues_hat(const BlockStructure& b, const WeightAssignment& w);
std::vector<Scalar> eigenvalues_quo(const BlockStructure& b, const WeightAssignment& w);

// The central character value of Tr_q(Q^k) on the highest weight module.
Scalar character_value(const RootSystem& rs, const BlockStructure& b, const WeightAssignment& w,
                       int k);

// Suites.  Each returns a full report; theorems checked are recorded per
// check with their anchor strings.
Report suite_vectorrep(Engine& e);
Report suite_rmatrix(Engine& e);
Report suite_quasir(Engine& e);
Report suite_pbw(Engine& e);
Report suite_verma(Engine& e);
Report suite_singular(Engine& e);
Report suite_minpoly(Engine& e);
Report suite_qtrace(Engine& e);
Report suite_reflection(Engine& e);
Report suite_filtration(Engine& e);

}  // namespace spq
