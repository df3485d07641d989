#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gauss.hpp"

namespace spq {

// Variable slots of the coefficient field F.  Slot 0 is always q; the other
// slots are free units that a given run may or may not activate: z1..z3 for
// symbolic block parameters, t for the generic highest-weight unit, y1..y3
// for fully generic Verma weights.
inline constexpr int kMaxVars = 8;
enum Var : int { VQ = 0, VZ1 = 1, VZ2 = 2, VZ3 = 3, VT = 4, VY1 = 5, VY2 = 6, VY3 = 7 };
const char* var_name(int v);
int var_by_name(const std::string& name);

using Mono = std::array<int16_t, kMaxVars>;

inline Mono mono_zero() {
  Mono m{};
  m.fill(0);
  return m;
}
inline Mono mono_add(const Mono& a, const Mono& b) {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = int16_t(a[i] + b[i]);
  return r;
}
inline Mono mono_sub(const Mono& a, const Mono& b) {
  Mono r;
  for (int i = 0; i < kMaxVars; ++i) r[i] = int16_t(a[i] - b[i]);
  return r;
}
// Lexicographic order with VQ most significant.
inline bool mono_less(const Mono& a, const Mono& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

// Sparse Laurent polynomial over Gauss in the kMaxVars variables.  Terms are
// kept sorted in descending lex order; exponents may be negative.
class Poly {
 public:
  using Term = std::pair<Mono, Gauss>;

  Poly() = default;
  static Poly zero() { return Poly(); }
  static Poly constant(const Gauss& c);
  static Poly integer(long v) { return constant(Gauss(v)); }
  static Poly variable(int var, int exp = 1);
  static Poly monomial(const Mono& m, const Gauss& c);
  // q^k shortcut.
  static Poly q_pow(int k) { return variable(VQ, k); }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_monomial() const { return terms_.size() == 1; }
  // Leading term in the descending lex order.
  const Term& lead() const { return terms_.front(); }

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly mul_term(const Mono& m, const Gauss& c) const;
  Poly mul_gauss(const Gauss& c) const;

  bool operator==(const Poly& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Per-variable minimum/maximum exponent over all terms (0 if var absent).
  Mono min_exponents() const;
  Mono max_exponents() const;
  bool uses_var(int var) const;
  // Highest-index variable that actually occurs, or -1 for constants.
  int top_var() const;
  int degree_in(int var) const;

  // Substitute a (nonzero, for negative exponents) Gauss value for one
  // variable.
  Poly subst(int var, const Gauss& value) const;
  // d/dq followed by q := 1.  Other variables survive.
  Poly dq_at_one() const;

  std::string str() const;

  void add_term(const Mono& m, const Gauss& c);  // accumulate, keeps order
  static Poly from_terms(std::vector<Term> ts);  // sorts and compresses

 private:
  std::vector<Term> terms_;
};

// Exact division; returns std::nullopt if b does not divide a.
// Both arguments are treated as ordinary polynomials after shifting to
// nonnegative exponents; the result is Laurent-adjusted accordingly.
std::optional<Poly> poly_divexact(const Poly& a, const Poly& b);

// GCD up to a unit; the result is normalized with min exponents 0 and
// leading coefficient 1.  gcd(0, b) = normalized b.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace spq
