#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "scalar.hpp"

namespace spq {

inline constexpr int kMaxRank = 8;

// Integer vector in the epsilon basis of sp(2n).
using Eps = std::array<int16_t, kMaxRank>;
// Nonnegative coordinates over the simple roots (a_1..a_{n-1}, b).
using RootVec = std::array<int16_t, kMaxRank>;

inline Eps eps_zero() {
  Eps e{};
  e.fill(0);
  return e;
}
inline Eps eps_unit(int j) {
  Eps e = eps_zero();
  e[j] = 1;
  return e;
}
inline Eps eps_add(const Eps& a, const Eps& b) {
  Eps r;
  for (int i = 0; i < kMaxRank; ++i) r[i] = int16_t(a[i] + b[i]);
  return r;
}
inline Eps eps_sub(const Eps& a, const Eps& b) {
  Eps r;
  for (int i = 0; i < kMaxRank; ++i) r[i] = int16_t(a[i] - b[i]);
  return r;
}
inline Eps eps_scale(int c, const Eps& a) {
  Eps r;
  for (int i = 0; i < kMaxRank; ++i) r[i] = int16_t(c * a[i]);
  return r;
}
// Canonical inner product: the epsilon basis is orthonormal.
inline int eps_dot(const Eps& a, const Eps& b) {
  int s = 0;
  for (int i = 0; i < kMaxRank; ++i) s += int(a[i]) * int(b[i]);
  return s;
}

std::string eps_str(const Eps& v, int n);

// Root system of sp(2n): simple roots a_i = e_i - e_{i+1} (i < n), b = 2 e_n.
// Simple roots are indexed 1..n in this API; index n is the long root.
class RootSystem {
 public:
  explicit RootSystem(int n);

  int rank() const { return n_; }
  // Simple root alpha_i (1 <= i <= n; i == n is the long root).
  const Eps& simple(int i) const { return simple_[size_t(i - 1)]; }
  int long_root_index() const { return n_; }
  bool is_long(int i) const { return i == n_; }
  // (alpha_i, alpha_j).
  int cartan(int i, int j) const { return eps_dot(simple(i), simple(j)); }
  // rho in epsilon coordinates: rho_i = n + 1 - i.
  const Eps& rho() const { return rho_; }
  int rho_coord(int i) const { return n_ + 1 - i; }  // 1-based
  // q_i = q for short roots, q^2 for the long root.
  int q_exponent(int i) const { return is_long(i) ? 2 : 1; }

  // All positive roots in epsilon coordinates.
  const std::vector<Eps>& positive_roots() const { return positive_; }

  // Decompose an epsilon vector over the simple roots; returns false if the
  // coordinates are not all nonnegative integers.
  bool to_simple_coords(const Eps& v, RootVec& out) const;
  Eps from_simple_coords(const RootVec& c) const;
  int height(const RootVec& c) const;

 private:
  int n_;
  std::vector<Eps> simple_;
  std::vector<Eps> positive_;
  Eps rho_;
};

// How the highest weight is assigned on each GL block.
enum class WeightMode {
  kappa,        // block l+1 carries i*q^{-p}: the singular-vector condition holds
  generic,      // block l+1 carries the free unit t: negative-control mode
  full_generic  // no Levi at all; every epsilon slot gets a free unit y_j
};

struct BlockStructure {
  int n = 0;                  // rank
  std::vector<int> gl_sizes;  // n_1..n_l
  int m = 0, p = 0;

  int ell() const { return int(gl_sizes.size()); }
  int gl_total() const;                  // n_1+...+n_l
  std::vector<int> levi_simple() const;  // Pi_l as simple-root indices
  bool in_levi(int i) const;
  int alpha_index() const { return n - p; }  // the distinguished root
  Eps gamma(const RootSystem& rs) const;     // a_{n-p}+...+a_{n-1}
  Eps delta(const RootSystem& rs) const;     // 2*gamma + b = 2 e_{n-p}
  // Block number (1..l+2) containing epsilon slot j (1-based).
  int block_of(int j) const;

  // Roots of the Levi part l and of the full stabilizer k, in eps coords.
  std::vector<Eps> levi_positive_roots(const RootSystem& rs) const;
  std::vector<Eps> stab_positive_roots(const RootSystem& rs) const;

  // dim K = sum n_i^2 + m(2m+1) + p(2p+1)
  long dim_stabilizer() const;

  // Parse "n1,...,nl;m,p" (";1,2" means l = 0).
  static BlockStructure parse(int n, const std::string& text);
  std::string str() const;
};

// Assignment of q^{(lambda, e_j)} per epsilon slot.
class WeightAssignment {
 public:
  // mode kappa/generic: z values for GL blocks; empty z list means symbolic
  // z1.. variables (at most 3).
  WeightAssignment(const RootSystem& rs, const BlockStructure& b, WeightMode mode,
                   const std::vector<Gauss>& z_values = {});
  // full_generic over a bare root system.
  WeightAssignment(const RootSystem& rs, WeightMode mode);

  WeightMode mode() const { return mode_; }
  bool is_kappa() const { return mode_ == WeightMode::kappa; }
  const Scalar& slot(int j) const { return vals_[size_t(j - 1)]; }  // 1-based
  // q^{(lambda, mu)} for an integer epsilon vector mu.
  Scalar q_pow(const Eps& mu) const;
  Scalar q_pow_simple(const RootSystem& rs, const RootVec& c) const;

 private:
  std::vector<Scalar> vals_;
  WeightMode mode_;
};

// mu in C^{l+2}[q, q^{-1}]:
//   mu_i     = z_i^2 q^{-2(n_1+...+n_{i-1})},  i <= l
//   mu_{l+1} = -q^{-2(n_1+...+n_l+p)}
//   mu_{l+2} =  q^{-2(n_1+...+n_l+m)}
// Requires a kappa-mode assignment.
std::vector<Scalar> mu_parameters(const BlockStructure& b, const WeightAssignment& w);

// Number of multisets of `generators` summing to beta.  The independent
// dimension oracle for all weight-slice checks.
long kostant_count(const RootSystem& rs, const Eps& beta, const std::vector<Eps>& generators);

// Deterministic specialization of the z parameters from a seed: nonzero
// rationals, pairwise distinct and not inverse to each other, away from 0,
// +-1 so that mu_i != mu_j^{+-1}.
std::vector<Gauss> specialize_z(const BlockStructure& b, uint64_t seed);

}  // namespace spq
