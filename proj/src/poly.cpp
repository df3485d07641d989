#include "poly.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

namespace spq {

static const char* kVarNames[kMaxVars] = {"q", "z1", "z2", "z3", "t", "y1", "y2", "y3"};

const char* var_name(int v) { return kVarNames[v]; }

int var_by_name(const std::string& name) {
  for (int i = 0; i < kMaxVars; ++i)
    if (name == kVarNames[i]) return i;
  return -1;
}

std::string rat_str(const mpq_class& r) { return r.get_str(); }

std::string Gauss::str() const {
  if (im == 0) return rat_str(re);
  std::string s;
  if (re != 0) s += rat_str(re) + (im > 0 ? "+" : "");
  if (im == 1)
    s += "i";
  else if (im == -1)
    s += "-i";
  else
    s += rat_str(im) + "i";
  return s;
}

Poly Poly::constant(const Gauss& c) {
  Poly p;
  if (!c.is_zero()) p.terms_.push_back({mono_zero(), c});
  return p;
}

Poly Poly::variable(int var, int exp) {
  Poly p;
  Mono m = mono_zero();
  m[var] = int16_t(exp);
  p.terms_.push_back({m, Gauss(1)});
  return p;
}

Poly Poly::monomial(const Mono& m, const Gauss& c) {
  Poly p;
  if (!c.is_zero()) p.terms_.push_back({m, c});
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first == mono_zero());
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    if (terms_[i].first == o.terms_[j].first) {
      Gauss c = terms_[i].second + o.terms_[j].second;
      if (!c.is_zero()) r.terms_.push_back({terms_[i].first, c});
      ++i, ++j;
    } else if (mono_less(o.terms_[j].first, terms_[i].first)) {
      r.terms_.push_back(terms_[i++]);
    } else {
      r.terms_.push_back(o.terms_[j++]);
    }
  }
  while (i < terms_.size()) r.terms_.push_back(terms_[i++]);
  while (j < o.terms_.size()) r.terms_.push_back(o.terms_[j++]);
  return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  if (is_zero() || o.is_zero()) return Poly();
  if (o.terms_.size() == 1) return mul_term(o.terms_[0].first, o.terms_[0].second);
  if (terms_.size() == 1) return o.mul_term(terms_[0].first, terms_[0].second);
  std::map<Mono, Gauss, bool (*)(const Mono&, const Mono&)> acc(mono_less);
  for (const auto& a : terms_)
    for (const auto& b : o.terms_) {
      Mono m = mono_add(a.first, b.first);
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(m, a.second * b.second);
      else
        it->second = it->second + a.second * b.second;
    }
  Poly r;
  r.terms_.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (!it->second.is_zero()) r.terms_.push_back({it->first, it->second});
  return r;
}

Poly Poly::mul_term(const Mono& m, const Gauss& c) const {
  if (c.is_zero()) return Poly();
  Poly r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({mono_add(t.first, m), t.second * c});
  return r;
}

Poly Poly::mul_gauss(const Gauss& c) const { return mul_term(mono_zero(), c); }

Mono Poly::min_exponents() const {
  Mono m = mono_zero();
  bool first = true;
  for (const auto& t : terms_) {
    if (first) {
      m = t.first;
      first = false;
    } else {
      for (int i = 0; i < kMaxVars; ++i) m[i] = std::min(m[i], t.first[i]);
    }
  }
  return m;
}

Mono Poly::max_exponents() const {
  Mono m = mono_zero();
  bool first = true;
  for (const auto& t : terms_) {
    if (first) {
      m = t.first;
      first = false;
    } else {
      for (int i = 0; i < kMaxVars; ++i) m[i] = std::max(m[i], t.first[i]);
    }
  }
  return m;
}

bool Poly::uses_var(int var) const {
  for (const auto& t : terms_)
    if (t.first[var] != 0) return true;
  return false;
}

int Poly::top_var() const {
  int top = -1;
  for (const auto& t : terms_)
    for (int i = 0; i < kMaxVars; ++i)
      if (t.first[i] != 0 && i > top) top = i;
  return top;
}

int Poly::degree_in(int var) const {
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, int(t.first[var]));
  return d;
}

Poly Poly::subst(int var, const Gauss& value) const {
  Poly r;
  std::map<Mono, Gauss, bool (*)(const Mono&, const Mono&)> acc(mono_less);
  Gauss vinv;
  bool have_inv = false;
  for (const auto& t : terms_) {
    int e = t.first[var];
    Gauss c = t.second;
    if (e > 0) {
      for (int k = 0; k < e; ++k) c = c * value;
    } else if (e < 0) {
      if (!have_inv) {
        if (value.is_zero()) throw std::domain_error("substituting 0 into negative power");
        vinv = value.inv();
        have_inv = true;
      }
      for (int k = 0; k < -e; ++k) c = c * vinv;
    }
    Mono m = t.first;
    m[var] = 0;
    auto it = acc.find(m);
    if (it == acc.end())
      acc.emplace(m, c);
    else
      it->second = it->second + c;
  }
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (!it->second.is_zero()) r.terms_.push_back({it->first, it->second});
  return r;
}

Poly Poly::dq_at_one() const {
  Poly r;
  std::map<Mono, Gauss, bool (*)(const Mono&, const Mono&)> acc(mono_less);
  for (const auto& t : terms_) {
    int e = t.first[VQ];
    if (e == 0) continue;
    Gauss c = t.second * Gauss(e);
    Mono m = t.first;
    m[VQ] = 0;
    auto it = acc.find(m);
    if (it == acc.end())
      acc.emplace(m, c);
    else
      it->second = it->second + c;
  }
  for (auto it = acc.rbegin(); it != acc.rend(); ++it)
    if (!it->second.is_zero()) r.terms_.push_back({it->first, it->second});
  return r;
}

void Poly::add_term(const Mono& m, const Gauss& c) {
  if (c.is_zero()) return;
  // binary search for position (descending order)
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Mono& key) { return mono_less(key, t.first); });
  if (it != terms_.end() && it->first == m) {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  } else {
    terms_.insert(it, {m, c});
  }
}

Poly Poly::from_terms(std::vector<Term> ts) {
  std::sort(ts.begin(), ts.end(),
            [](const Term& a, const Term& b) { return mono_less(b.first, a.first); });
  Poly r;
  for (auto& t : ts) {
    if (!r.terms_.empty() && r.terms_.back().first == t.first) {
      r.terms_.back().second = r.terms_.back().second + t.second;
      if (r.terms_.back().second.is_zero()) r.terms_.pop_back();
    } else if (!t.second.is_zero()) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    bool has_var = !(t.first == mono_zero());
    bool coeff_simple = t.second.is_real() || t.second.re == 0;
    if (!has_var) {
      os << "(" << t.second.str() << ")";
    } else {
      if (!t.second.is_one()) {
        if (coeff_simple)
          os << t.second.str() << "*";
        else
          os << "(" << t.second.str() << ")*";
      }
      bool firstv = true;
      for (int v = 0; v < kMaxVars; ++v) {
        if (t.first[v] == 0) continue;
        if (!firstv) os << "*";
        firstv = false;
        os << kVarNames[v];
        if (t.first[v] != 1) os << "^" << t.first[v];
      }
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Division and gcd.

namespace {

// A poly with all exponents >= 0 (caller shifts).  Division in descending lex
// order; classic multivariate long division by a single divisor.
std::optional<Poly> divexact_nonneg(const Poly& a, const Poly& b) {
  assert(!b.is_zero());
  Poly rem = a, quot;
  const Mono& lbm = b.lead().first;
  const Gauss lbc_inv = b.lead().second.inv();
  while (!rem.is_zero()) {
    const Mono& lm = rem.lead().first;
    Mono d = mono_sub(lm, lbm);
    for (int i = 0; i < kMaxVars; ++i)
      if (d[i] < 0) return std::nullopt;
    Gauss c = rem.lead().second * lbc_inv;
    quot.add_term(d, c);
    rem = rem - b.mul_term(d, c);
  }
  return quot;
}

// View a nonneg poly as univariate in `var` with Poly coefficients.
std::vector<Poly> coeffs_in(const Poly& p, int var) {
  std::vector<Poly> cs(size_t(p.degree_in(var)) + 1);
  for (const auto& t : p.terms()) {
    Mono m = t.first;
    int e = m[var];
    m[var] = 0;
    cs[size_t(e)].add_term(m, t.second);
  }
  return cs;
}

Poly normalize_unit(const Poly& p) {
  if (p.is_zero()) return p;
  Poly r = p.mul_term(mono_zero(), p.lead().second.inv());
  Mono mn = r.min_exponents();
  Mono neg;
  for (int i = 0; i < kMaxVars; ++i) neg[i] = int16_t(-mn[i]);
  return r.mul_term(neg, Gauss(1));
}

Poly gcd_nonneg(Poly a, Poly b);

// gcd of a list (used for contents).
Poly gcd_list(const std::vector<Poly>& ps) {
  Poly g;
  for (const auto& p : ps) {
    if (p.is_zero()) continue;
    g = g.is_zero() ? normalize_unit(p) : gcd_nonneg(g, p);
    if (g.is_constant()) break;
  }
  return g.is_zero() ? Poly::integer(1) : g;
}

// --- Gaussian integer helpers (for content-controlled univariate gcd) ---

struct GInt {
  mpz_class re, im;
  bool is_zero() const { return re == 0 && im == 0; }
  mpz_class norm() const { return re * re + im * im; }
  GInt operator*(const GInt& o) const { return {re * o.re - im * o.im, re * o.im + im * o.re}; }
  GInt operator-(const GInt& o) const { return {re - o.re, im - o.im}; }
  GInt conj() const { return {re, -im}; }
};

// Rounded quotient a/b in Z[i] (nearest integers), for the Euclidean step.
static GInt gi_divround(const GInt& a, const GInt& b) {
  GInt num = a * b.conj();
  mpz_class n = b.norm();
  auto round_div = [&](const mpz_class& x) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
    if (2 * r >= n) q += 1;
    return q;
  };
  return {round_div(num.re), round_div(num.im)};
}

static GInt gi_gcd(GInt a, GInt b) {
  while (!b.is_zero()) {
    GInt q = gi_divround(a, b);
    GInt r = a - b * q;
    a = b;
    b = r;
  }
  return a;
}

static std::optional<GInt> gi_divexact(const GInt& a, const GInt& b) {
  GInt num = a * b.conj();
  mpz_class n = b.norm();
  if (num.re % n != 0 || num.im % n != 0) return std::nullopt;
  return GInt{num.re / n, num.im / n};
}

// Univariate poly with Gaussian-integer coefficients, dense by degree.
using GiPoly = std::vector<GInt>;

static void gi_trim(GiPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

static GiPoly gi_scale(const GiPoly& p, const GInt& c) {
  GiPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[i] * c;
  return r;
}

static GiPoly gi_divexact_poly(const GiPoly& p, const GInt& c) {
  GiPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) {
    auto q = gi_divexact(p[i], c);
    if (!q) throw std::logic_error("inexact coefficient division in gcd");
    r[i] = *q;
  }
  return r;
}

static GInt gi_content(const GiPoly& p) {
  GInt g{0, 0};
  for (const auto& c : p) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? c : gi_gcd(g, c);
    if (g.norm() == 1) break;
  }
  return g.is_zero() ? GInt{1, 0} : g;
}

// prem for dense Gaussian-integer polys: lc(b)^{deg a - deg b + 1} * a mod b,
// with the full power applied even when reduction steps skip degrees.
static GiPoly gi_prem(GiPoly a, const GiPoly& b) {
  int db = int(b.size()) - 1;
  const GInt lb = b.back();
  int pending = int(a.size()) - 1 - db + 1;
  while (int(a.size()) - 1 >= db && !a.empty()) {
    int da = int(a.size()) - 1;
    GInt la = a.back();
    GiPoly t = gi_scale(a, lb);
    --pending;
    for (size_t i = 0; i < b.size(); ++i)
      t[size_t(da - db) + i] = t[size_t(da - db) + i] - b[i] * la;
    a = std::move(t);
    gi_trim(a);
  }
  for (; pending > 0; --pending) a = gi_scale(a, lb);
  return a;
}

// Subresultant PRS; coefficients stay polynomially bounded.
Poly gcd_univariate(const Poly& pa, const Poly& pb, int var) {
  // integerize: coefficients to Z[i], primitive
  auto to_gi = [&](const Poly& p) {
    mpz_class den(1);
    for (const auto& t : p.terms()) {
      den = lcm(den, t.second.re.get_den());
      den = lcm(den, t.second.im.get_den());
    }
    GiPoly g(size_t(p.degree_in(var)) + 1);
    for (const auto& t : p.terms()) {
      mpq_class re = t.second.re * den, im = t.second.im * den;
      g[size_t(t.first[var])] = GInt{re.get_num(), im.get_num()};
    }
    gi_trim(g);
    return gi_divexact_poly(g, gi_content(g));
  };
  GiPoly A = to_gi(pa), B = to_gi(pb);
  if (A.size() < B.size()) std::swap(A, B);
  GInt g{1, 0}, h{1, 0};
  while (true) {
    int delta = int(A.size()) - int(B.size());
    GiPoly R = gi_prem(A, B);
    if (R.empty()) break;
    if (R.size() == 1) {
      B = {GInt{1, 0}};
      break;
    }
    A = std::move(B);
    // divide by g*h^delta
    GInt div = g;
    for (int k = 0; k < delta; ++k) div = div * h;
    B = gi_divexact_poly(R, div);
    g = A.back();
    // h = g^delta * h^{1-delta}
    if (delta == 0) {
      // h unchanged
    } else {
      GInt gn{1, 0};
      for (int k = 0; k < delta; ++k) gn = gn * g;
      if (delta == 1) {
        h = gn;
      } else {
        GInt hd{1, 0};
        for (int k = 0; k < delta - 1; ++k) hd = hd * h;
        auto q = gi_divexact(gn, hd);
        assert(q);
        h = *q;
      }
    }
  }
  B = gi_divexact_poly(B, gi_content(B));
  // back to Poly, monic
  Poly out;
  for (size_t i = 0; i < B.size(); ++i) {
    if (B[i].is_zero()) continue;
    Mono m = mono_zero();
    m[var] = int16_t(i);
    out.add_term(m, Gauss(mpq_class(B[i].re), mpq_class(B[i].im)));
  }
  return normalize_unit(out);
}

// Pseudo-remainder of a by b in the main variable; the x-degree strictly
// decreases below deg_x(b).
Poly prem(const Poly& a, const Poly& b, int var) {
  int db = b.degree_in(var);
  Poly lb;
  for (const auto& t : b.terms())
    if (t.first[var] == db) {
      Mono m = t.first;
      m[var] = 0;
      lb.add_term(m, t.second);
    }
  Poly rem = a;
  while (!rem.is_zero()) {
    int dr = rem.degree_in(var);
    if (dr < db || (dr == 0 && !rem.uses_var(var))) break;
    Poly lr;
    for (const auto& t : rem.terms())
      if (t.first[var] == dr) {
        Mono m = t.first;
        m[var] = 0;
        lr.add_term(m, t.second);
      }
    Mono shift = mono_zero();
    shift[var] = int16_t(dr - db);
    rem = rem * lb - (b * lr).mul_term(shift, Gauss(1));
  }
  return rem;
}

Poly gcd_nonneg(Poly a, Poly b) {
  if (a.is_zero()) return normalize_unit(b);
  if (b.is_zero()) return normalize_unit(a);
  if (a.is_monomial() || b.is_monomial()) {
    // after the caller's Laurent shift, min exponents are 0: gcd is 1
    Mono g;
    const Poly& mono = a.is_monomial() ? a : b;
    const Poly& other = a.is_monomial() ? b : a;
    Mono mn = other.min_exponents();
    for (int i = 0; i < kMaxVars; ++i) g[i] = std::min(mono.lead().first[i], mn[i]);
    return Poly::monomial(g, Gauss(1));
  }
  int var = std::max(a.top_var(), b.top_var());
  if (var < 0) return Poly::integer(1);
  bool a_multi = false, b_multi = false;
  for (int v = 0; v < var; ++v) {
    a_multi = a_multi || a.uses_var(v);
    b_multi = b_multi || b.uses_var(v);
  }
  if (!a_multi && !b_multi) return gcd_univariate(std::move(a), std::move(b), var);

  // primitive PRS in the main variable
  Poly ca = gcd_list(coeffs_in(a, var));
  Poly cb = gcd_list(coeffs_in(b, var));
  Poly cont = gcd_nonneg(ca, cb);
  Poly pa = *divexact_nonneg(a, ca);
  Poly pb = *divexact_nonneg(b, cb);
  if (pa.degree_in(var) < pb.degree_in(var)) std::swap(pa, pb);
  while (true) {
    Poly r = prem(pa, pb, var);
    if (r.is_zero()) break;
    if (!r.uses_var(var)) {
      pb = Poly::integer(1);
      break;
    }
    Poly cr = gcd_list(coeffs_in(r, var));
    pa = pb;
    pb = *divexact_nonneg(r, cr);
  }
  return normalize_unit(cont * pb);
}

}  // namespace

std::optional<Poly> poly_divexact(const Poly& a, const Poly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return Poly();
  Mono sa = a.min_exponents(), sb = b.min_exponents();
  Mono na, nb;
  for (int i = 0; i < kMaxVars; ++i) {
    na[i] = int16_t(-sa[i]);
    nb[i] = int16_t(-sb[i]);
  }
  auto q = divexact_nonneg(a.mul_term(na, Gauss(1)), b.mul_term(nb, Gauss(1)));
  if (!q) return std::nullopt;
  // restore Laurent shift: a = q * b  =>  shift(q) = sa - sb
  Mono adj;
  for (int i = 0; i < kMaxVars; ++i) adj[i] = int16_t(sa[i] - sb[i]);
  return q->mul_term(adj, Gauss(1));
}

Poly poly_gcd(const Poly& a, const Poly& b) {
  Mono sa = a.min_exponents(), sb = b.min_exponents();
  Mono na, nb;
  for (int i = 0; i < kMaxVars; ++i) {
    na[i] = int16_t(-sa[i]);
    nb[i] = int16_t(-sb[i]);
  }
  return gcd_nonneg(a.mul_term(na, Gauss(1)), b.mul_term(nb, Gauss(1)));
}

}  // namespace spq
