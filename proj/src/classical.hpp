#pragma once

#include "quantization.hpp"

namespace spq {

// A closed conjugacy class of GL(N) or SP(2n), described by its eigenvalues.
struct ClassSpec {
  enum class Group { GL, SP };
  Group group = Group::GL;
  // GL: all eigenvalues with multiplicities.
  // SP: the GL-block eigenvalues mu_i with multiplicities n_i; the -1 block of
  // size m and the +1 block of size 2p are implied.
  std::vector<std::pair<Gauss, int>> eigs;
  int m = 0, p = 0;  // SP only

  int matrix_size() const;
  // the initial point: the diagonal matrix in the standard ordering
  std::vector<Gauss> diagonal() const;
  long orbit_dimension() const;

  static ClassSpec gl(std::vector<std::pair<Gauss, int>> eigs);
  static ClassSpec sp(const BlockStructure& b, const std::vector<Gauss>& mu0);
  // "2:1,3:2" -> eigenvalue 2 multiplicity 1, eigenvalue 3 multiplicity 2
  static std::vector<std::pair<Gauss, int>> parse_eigs(const std::string& text);
};

// Jacobian rank checks per the rank criterion, the trace identities at the
// initial point, and the q -> 1 bridge from the quantum data.
Report suite_classical_gl(const ClassSpec& spec);
Report suite_classical(Engine& e);

}  // namespace spq
