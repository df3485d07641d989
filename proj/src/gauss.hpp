#pragma once

#include <gmpxx.h>
#include <string>

namespace spq {

// Gaussian rational a + b*i, i*i = -1.  The coefficient domain for all exact
// arithmetic in this project.
struct Gauss {
  mpq_class re, im;

  Gauss() : re(0), im(0) {}
  Gauss(long a) : re(a), im(0) {}
  Gauss(const mpq_class& a) : re(a), im(0) {}
  Gauss(mpq_class a, mpq_class b) : re(std::move(a)), im(std::move(b)) {}

  static Gauss i() { return Gauss(mpq_class(0), mpq_class(1)); }
  static Gauss frac(long num, long den) {
    mpq_class r(num, den);
    r.canonicalize();
    return Gauss(r);
  }

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_one() const { return re == 1 && im == 0; }
  bool is_real() const { return im == 0; }

  Gauss operator-() const { return Gauss(-re, -im); }
  Gauss operator+(const Gauss& o) const { return Gauss(re + o.re, im + o.im); }
  Gauss operator-(const Gauss& o) const { return Gauss(re - o.re, im - o.im); }
  Gauss operator*(const Gauss& o) const {
    return Gauss(re * o.re - im * o.im, re * o.im + im * o.re);
  }
  Gauss inv() const {
    mpq_class n = re * re + im * im;  // nonzero unless *this == 0
    return Gauss(re / n, -im / n);
  }
  Gauss operator/(const Gauss& o) const { return *this * o.inv(); }

  Gauss conj() const { return Gauss(re, -im); }

  bool operator==(const Gauss& o) const { return re == o.re && im == o.im; }
  bool operator!=(const Gauss& o) const { return !(*this == o); }
  // Deterministic total order, used only for canonical term ordering.
  bool operator<(const Gauss& o) const {
    if (re != o.re) return re < o.re;
    return im < o.im;
  }

  std::string str() const;
};

inline Gauss operator*(long a, const Gauss& g) { return Gauss(a) * g; }

std::string rat_str(const mpq_class& r);

}  // namespace spq
