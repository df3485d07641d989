#include "scalar.hpp"

#include <cassert>
#include <cctype>
#include <sstream>

namespace spq {

Scalar::Scalar(Poly num, Poly den, bool do_reduce) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(Errc::malformed_scalar, "zero denominator");
  if (do_reduce) reduce();
}

void Scalar::reduce() {
  if (num_.is_zero()) {
    den_ = Poly::integer(1);
    return;
  }
  if (!den_.is_monomial()) {
    Poly g = poly_gcd(num_, den_);
    if (!(g.is_monomial() && g.lead().second.is_one() && g.lead().first == mono_zero())) {
      auto qn = poly_divexact(num_, g);
      auto qd = poly_divexact(den_, g);
      if (!qn || !qd) throw std::logic_error("gcd does not divide its inputs");
      num_ = *qn;
      den_ = *qd;
    }
  }
  normalize_units();
}

void Scalar::normalize_units() {
  if (num_.is_zero()) {
    den_ = Poly::integer(1);
    return;
  }
  // den gets min exponents 0 and leading coefficient 1
  Mono mn = den_.min_exponents();
  Gauss lc = den_.lead().second;
  bool shift = false;
  for (int i = 0; i < kMaxVars; ++i) shift = shift || mn[i] != 0;
  if (shift || !lc.is_one()) {
    Mono neg;
    for (int i = 0; i < kMaxVars; ++i) neg[i] = int16_t(-mn[i]);
    Gauss ci = lc.inv();
    den_ = den_.mul_term(neg, ci);
    num_ = num_.mul_term(neg, ci);
  }
}

Scalar Scalar::operator-() const {
  Scalar r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

namespace {

bool poly_is_trivial_unit(const Poly& p) {
  return p.is_monomial() && p.lead().second.is_one() && p.lead().first == mono_zero();
}

}  // namespace

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  if (den_ == o.den_) return Scalar(num_ + o.num_, den_);
  // Inputs are reduced, so with g = gcd(b, d), b = g b', d = g d', the sum
  // (a d' + c b') / (g b' d') can only share a factor with g.
  Poly g = poly_gcd(den_, o.den_);
  if (poly_is_trivial_unit(g)) {
    Scalar r;
    r.num_ = num_ * o.den_ + o.num_ * den_;
    if (r.num_.is_zero()) return r;
    r.den_ = den_ * o.den_;
    r.normalize_units();
    return r;
  }
  Poly bp = *poly_divexact(den_, g);
  Poly dp = *poly_divexact(o.den_, g);
  Poly n = num_ * dp + o.num_ * bp;
  if (n.is_zero()) return Scalar();
  Poly h = poly_gcd(n, g);
  Scalar r;
  if (poly_is_trivial_unit(h)) {
    r.num_ = std::move(n);
    r.den_ = g * bp * dp;
  } else {
    r.num_ = *poly_divexact(n, h);
    r.den_ = *poly_divexact(g, h) * bp * dp;
  }
  r.normalize_units();
  return r;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_zero() || o.is_zero()) return Scalar();
  // cross-cancel: the factors of a reduced product come from the cross pairs
  Poly g1 = poly_gcd(num_, o.den_);
  Poly g2 = poly_gcd(o.num_, den_);
  Scalar r;
  const Poly* a = &num_;
  const Poly* d = &o.den_;
  Poly ared, dred;
  if (!poly_is_trivial_unit(g1)) {
    ared = *poly_divexact(num_, g1);
    dred = *poly_divexact(o.den_, g1);
    a = &ared;
    d = &dred;
  }
  const Poly* c = &o.num_;
  const Poly* b = &den_;
  Poly cred, bred;
  if (!poly_is_trivial_unit(g2)) {
    cred = *poly_divexact(o.num_, g2);
    bred = *poly_divexact(den_, g2);
    c = &cred;
    b = &bred;
  }
  r.num_ = (*a) * (*c);
  r.den_ = (*b) * (*d);
  r.normalize_units();
  return r;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(Errc::malformed_scalar, "division by zero scalar");
  return Scalar(den_, num_);
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::pow(int k) const {
  if (k == 0) return Scalar(1);
  Scalar base = k > 0 ? *this : inv();
  int e = k > 0 ? k : -k;
  Scalar r(1);
  while (e) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Scalar Scalar::classical_limit() const {
  Poly d1 = den_.subst(VQ, Gauss(1));
  if (d1.is_zero()) throw Error(Errc::limit_undefined, "pole at q = 1");
  return Scalar(num_.subst(VQ, Gauss(1)), d1);
}

Scalar Scalar::h_derivative() const {
  Poly d1 = den_.subst(VQ, Gauss(1));
  if (d1.is_zero()) throw Error(Errc::limit_undefined, "pole at q = 1 in h-derivative");
  // (n/d)' = (n' d - n d')/d^2 at q = 1
  Poly n1 = num_.subst(VQ, Gauss(1));
  Poly np = num_.dq_at_one();
  Poly dp = den_.dq_at_one();
  return Scalar(np * d1 - n1 * dp, d1 * d1);
}

Scalar Scalar::subst_var(int v, const Gauss& value) const {
  Poly d = den_.subst(v, value);
  if (d.is_zero()) throw Error(Errc::limit_undefined, "pole under substitution");
  return Scalar(num_.subst(v, value), d);
}

std::string Scalar::str() const {
  if (den_ == Poly::integer(1)) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

// ---------------------------------------------------------------------------
// Parser for the canonical text form.  Grammar:
//   scalar := '(' sum ')' '/' '(' sum ')' | sum
//   sum    := term (('+'|'-') term)*
//   term   := [coeff '*'] factor ('*' factor)* | coeff
//   coeff  := '(' gauss ')' | rational
//   factor := var ['^' int]
// Gauss coefficients print as  a+bi / a-bi / bi / a.

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw Error(Errc::malformed_scalar, "parse error at " + std::to_string(pos) + ": " + msg);
  }

  mpq_class rational() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    size_t digits = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '/'))
      ++pos;
    if (pos == digits) fail("expected rational");
    mpq_class r(s.substr(start, pos - start));
    r.canonicalize();
    return r;
  }

  // inside parens: a+bi | a-bi | bi | i | -i | a
  Gauss gauss() {
    skip_ws();
    if (peek() == 'i') {
      ++pos;
      return Gauss::i();
    }
    if (peek() == '-' && pos + 1 < s.size() && s[pos + 1] == 'i') {
      pos += 2;
      return Gauss(mpq_class(0), mpq_class(-1));
    }
    mpq_class first = rational();
    skip_ws();
    if (pos < s.size() && s[pos] == 'i') {
      ++pos;
      return Gauss(mpq_class(0), first);
    }
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      size_t save = pos;
      bool neg = s[pos] == '-';
      ++pos;
      skip_ws();
      if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        return Gauss(first, neg ? mpq_class(-1) : mpq_class(1));
      }
      // rational then i?
      size_t save2 = pos;
      try {
        mpq_class second = rational();
        if (pos < s.size() && s[pos] == 'i') {
          ++pos;
          return Gauss(first, neg ? mpq_class(-second) : second);
        }
      } catch (const Error&) {
        pos = save2;
      }
      pos = save;  // not an imaginary part; leave for the caller
    }
    return Gauss(first);
  }

  int integer() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return std::stoi(s.substr(start, pos - start));
  }

  Poly term() {
    if (eat('-')) return -term();
    Gauss coeff(1);
    Mono m = mono_zero();
    bool saw_anything = false;
    skip_ws();
    if (peek() == '(') {
      eat('(');
      coeff = gauss();
      if (!eat(')')) fail("expected ')' after coefficient");
      saw_anything = true;
      if (!eat('*')) return Poly::monomial(m, coeff);
    } else if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = Gauss(rational());
      saw_anything = true;
      skip_ws();
      if (pos < s.size() && s[pos] == 'i') {
        ++pos;
        coeff = Gauss(mpq_class(0), coeff.re);
      }
      if (!eat('*')) return Poly::monomial(m, coeff);
    } else if (peek() == 'i' && (pos + 1 >= s.size() || !std::isalnum(static_cast<unsigned char>(s[pos + 1])))) {
      ++pos;
      coeff = Gauss::i();
      saw_anything = true;
      if (!eat('*')) return Poly::monomial(m, coeff);
    }
    // factors
    while (true) {
      skip_ws();
      size_t start = pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])))) ++pos;
      std::string name = s.substr(start, pos - start);
      int v = var_by_name(name);
      if (v < 0) fail("unknown variable '" + name + "'");
      int e = 1;
      if (eat('^')) e = integer();
      m[v] = int16_t(m[v] + e);
      saw_anything = true;
      if (!eat('*')) break;
    }
    if (!saw_anything) fail("empty term");
    return Poly::monomial(m, coeff);
  }

  Poly sum() {
    Poly r;
    bool neg = false;
    if (eat('-')) neg = true;
    while (true) {
      Poly t = term();
      r = neg ? r - t : r + t;
      skip_ws();
      if (eat('+'))
        neg = false;
      else if (eat('-'))
        neg = true;
      else
        break;
    }
    return r;
  }
};

}  // namespace

Scalar Scalar::parse(const std::string& text) {
  Parser p(text);
  p.skip_ws();
  // Try "( num )/( den )" first: find a top-level ")/(".
  if (p.peek() == '(') {
    int depth = 0;
    size_t split = std::string::npos;
    for (size_t i = p.pos; i < text.size(); ++i) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') {
        --depth;
        if (depth == 0 && i + 2 < text.size() && text[i + 1] == '/' && text[i + 2] == '(') {
          split = i;
          break;
        }
      }
    }
    if (split != std::string::npos) {
      Parser pn(text);
      pn.pos = p.pos + 1;
      Poly num = pn.sum();
      Parser pd(text);
      pd.pos = split + 3;
      Poly den = pd.sum();
      return Scalar(std::move(num), std::move(den));
    }
  }
  Poly num = p.sum();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return Scalar(std::move(num));
}

}  // namespace spq
