#pragma once

#include <stdexcept>
#include <string>

#include "poly.hpp"

namespace spq {

enum class Errc {
  invalid_argument,
  malformed_scalar,
  limit_undefined,
  height_bound,
  depth_overflow,
  unsupported,
  construction_failure,
  reseed_required,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// Element of the fraction field F = Frac(G[q^{±1}, z^{±1}, ...]).  Always kept
// in canonical form: gcd(num, den) a unit, den with min exponents 0 and
// leading coefficient 1.  Equality is then syntactic.
class Scalar {
 public:
  Scalar() : num_(), den_(Poly::integer(1)) {}
  Scalar(long v) : num_(Poly::integer(v)), den_(Poly::integer(1)) {}
  explicit Scalar(const Gauss& c) : num_(Poly::constant(c)), den_(Poly::integer(1)) {}
  explicit Scalar(Poly p) : num_(std::move(p)), den_(Poly::integer(1)) {}
  Scalar(Poly num, Poly den, bool reduce = true);

  static Scalar zero() { return Scalar(); }
  static Scalar one() { return Scalar(1); }
  static Scalar i() { return Scalar(Gauss::i()); }
  static Scalar q_pow(int k) { return Scalar(Poly::q_pow(k)); }
  static Scalar var(int v, int exp = 1) { return Scalar(Poly::variable(v, exp)); }
  static Scalar frac(long num, long den) { return Scalar(Gauss::frac(num, den)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == den_; }

  Scalar operator-() const;
  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar inv() const;
  Scalar pow(int k) const;

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  bool operator==(const Scalar& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  // q := 1.  Throws Error(limit_undefined) on a pole.
  Scalar classical_limit() const;
  // d/dhbar [s(e^hbar)] at hbar = 0, i.e. (ds/dq)(1).  Quotient rule; the
  // denominator must not vanish at q = 1.
  Scalar h_derivative() const;
  // value of q substituted by a Gauss constant (both parts), for tests
  Scalar subst_var(int v, const Gauss& value) const;

  std::string str() const;
  static Scalar parse(const std::string& text);

 private:
  void reduce();
  void normalize_units();
  Poly num_, den_;
};

inline Scalar operator*(long a, const Scalar& s) { return Scalar(a) * s; }

}  // namespace spq
