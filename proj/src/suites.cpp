#include "suites.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace spq {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "scalars", "rootdata", "pbw",    "verma",      "singular",   "vectorrep", "rmatrix",
      "quasir",  "minpoly",  "qtrace", "reflection", "filtration", "classical"};
  return names;
}

const std::vector<std::string>& all_anchors() {
  static const std::vector<std::string> anchors = {
      "(a_i,a_i)=2, (a_{i-1},a_i)=-1",
      "Chevalley generators commute to",
      "Define mu in C^{l+2}[q,q^{-1}]",
      "For all i=1,...,p",
      "K = GL(n_1) x ... x SP(2p)",
      "Suppose that q^{2(la,a)} = -q^{-2p}",
      "The initial point o",
      "V_{l+3}/V_{l+2} = {0}",
      "[h_mu, e_nu] = (mu,nu) e_nu",
      "are central",
      "are expressed through",
      "are independent of q",
      "assigns nil to the Chevalley generators",
      "before kappa is missing",
      "characterized by the condition",
      "classical limit mu0 = lim mu",
      "coincides with",
      "coincides with the defining ideal",
      "commutes with the U_h action",
      "dF(xi) = prod (mu_j - mu_i) xi",
      "delta = 2a_{n-p}+...+2a_{n-1}+b",
      "determined by the set of polynomial equations",
      "determines an embedding",
      "enter g or none",
      "equal, up to a scalar factor, to",
      "form a basis",
      "form an ascending filtration",
      "generate the defining ideal of the class",
      "generates the defining ideal",
      "generates three invariant idempotents",
      "glue up, and the isotropy subgroup jumps",
      "is a linear combination of the monomials",
      "is a singular vector in",
      "is an equivariant quantization of the class",
      "is free over",
      "is singular",
      "is spanned by the vector",
      "isomorphic to the direct sum",
      "modulo M_1",
      "mu0 = lim mu",
      "one-dimensional representation chi of the centre",
      "polynomial equation of degree 2l+2",
      "present the diagrams",
      "projector kappa onto the trivial",
      "q = e^h",
      "restrict la to h^{-1}h* + h*",
      "rho_i = -rho_{i'}",
      "satisfies the same polynomial equation",
      "satisfy the Serre relations",
      "some commutation relations involving these root vectors",
      "the equations with dtheta_k are redundant",
      "the extra eigenvalue drops from the spectrum",
      "the so called standard solution",
      "through the universal R-matrix",
      "turns zero if and only if",
      "up to a scalar factor",
      "via the q-trace construction",
  };
  return anchors;
}

namespace {

struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed ? seed : 1) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  long range(long lo, long hi) { return lo + long(next() % uint64_t(hi - lo + 1)); }
};

Scalar random_scalar(Rng& rng, bool with_z) {
  auto rp = [&](bool nz) {
    Poly p;
    int nt = int(rng.range(nz ? 1 : 0, 3));
    for (int t = 0; t < nt; ++t) {
      Mono m = mono_zero();
      m[VQ] = int16_t(rng.range(-4, 4));
      if (with_z) m[VZ1] = int16_t(rng.range(-2, 2));
      p.add_term(m, Gauss(mpq_class(rng.range(-5, 5)), mpq_class(rng.range(-2, 2))));
    }
    if (nz && p.is_zero()) p.add_term(mono_zero(), Gauss(1));
    return p;
  };
  return Scalar(rp(false), rp(true));
}

}  // namespace

Report suite_scalars(uint64_t seed) {
  Report rep;
  rep.suite = "scalars";
  rep.mode = "self-test";
  rep.seed = seed;
  Rng rng(seed * 88172645463325252ull + 1);
  bool field_ok = true, limit_ok = true, canon_ok = true, io_ok = true;
  for (int iter = 0; iter < 30; ++iter) {
    Scalar a = random_scalar(rng, iter % 3 == 0);
    Scalar b = random_scalar(rng, iter % 3 == 0);
    Scalar c = random_scalar(rng, iter % 3 == 0);
    if (!((a + b) + c == a + (b + c))) field_ok = false;
    if (!((a * b) * c == a * (b * c))) field_ok = false;
    if (!(a * (b + c) == a * b + a * c)) field_ok = false;
    if (!a.is_zero() && !(a * a.inv() == Scalar::one())) field_ok = false;
    Scalar renorm(a.num(), a.den());
    if (!(renorm == a)) canon_ok = false;
    if (!(Scalar::parse(a.str()) == a)) io_ok = false;
  }
  for (int iter = 0; iter < 15; ++iter) {
    Poly pa, pb;
    for (int t = 0; t < 3; ++t) {
      Mono m1 = mono_zero(), m2 = mono_zero();
      m1[VQ] = int16_t(rng.range(-3, 3));
      m2[VQ] = int16_t(rng.range(-3, 3));
      pa.add_term(m1, Gauss(mpq_class(rng.range(-4, 4))));
      pb.add_term(m2, Gauss(mpq_class(rng.range(-4, 4))));
    }
    Scalar a(pa), b(pb);
    if (!((a + b).classical_limit() == a.classical_limit() + b.classical_limit())) limit_ok = false;
    if (!((a * b).classical_limit() == a.classical_limit() * b.classical_limit())) limit_ok = false;
    if (!((a * b).h_derivative() ==
          a.h_derivative() * b.classical_limit() + a.classical_limit() * b.h_derivative()))
      limit_ok = false;
  }
  rep.add("q = e^h", "field axioms on random elements", field_ok);
  rep.add("classical limit mu0 = lim mu", "limits are linear and multiplicative", limit_ok);
  rep.add("q = e^h", "normal form is idempotent", canon_ok);
  rep.add("q = e^h", "canonical text form round-trips", io_ok);
  rep.add("characterized by the condition", "i * i = -1", Scalar::i() * Scalar::i() == Scalar(-1));
  return rep;
}

Report suite_rootdata(const RunConfig& cfg) {
  Report rep;
  rep.suite = "rootdata";
  rep.n = cfg.n;
  rep.blocks = cfg.blocks;
  rep.seed = cfg.seed;
  rep.mode = cfg.generic_lambda ? "generic-lambda" : "kappa";
  RootSystem rs(cfg.n);
  BlockStructure b = BlockStructure::parse(cfg.n, cfg.blocks);
  int n = cfg.n;
  bool prod_ok = true;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      int expect = 0;
      if (i == j)
        expect = rs.is_long(i) ? 4 : 2;
      else if (std::abs(i - j) == 1)
        expect = (rs.is_long(i) || rs.is_long(j)) ? -2 : -1;
      if (rs.cartan(i, j) != expect) prod_ok = false;
    }
  rep.add("(a_i,a_i)=2, (a_{i-1},a_i)=-1", "inner products of the simple roots", prod_ok);
  bool rho_ok = true;
  for (int i = 1; i <= n; ++i)
    if (rs.rho()[size_t(i - 1)] != n + 1 - i) rho_ok = false;
  rep.add("rho_i = -rho_{i'}", "rho in epsilon coordinates", rho_ok);
  // delta = 2 e_{n-p}
  Eps d = b.delta(rs);
  rep.add("delta = 2a_{n-p}+...+2a_{n-1}+b", "delta is twice the distinguished epsilon",
          d == eps_scale(2, eps_unit(b.alpha_index() - 1)));
  // weight assignment invariants
  WeightMode mode = cfg.generic_lambda ? WeightMode::generic : WeightMode::kappa;
  std::vector<Gauss> zv = cfg.symbolic_z ? std::vector<Gauss>{} : specialize_z(b, cfg.seed);
  WeightAssignment w(rs, b, mode, zv);
  bool levi_ok = true;
  for (int i : b.levi_simple())
    if (!(w.q_pow(rs.simple(i)) == Scalar(1))) levi_ok = false;
  rep.add("assigns nil to the Chevalley generators", "the weight vanishes on the Levi part",
          levi_ok);
  if (mode == WeightMode::kappa) {
    Scalar qa = w.q_pow(rs.simple(b.alpha_index()));
    rep.add("Suppose that q^{2(la,a)} = -q^{-2p}", "the defining branch on the distinguished root",
            qa * qa == -Scalar::q_pow(-2 * b.p));
    auto mu = mu_parameters(b, w);
    rep.add("Define mu in C^{l+2}[q,q^{-1}]", "limits of the last two parameters",
            mu[size_t(b.ell())].classical_limit() == Scalar(-1) &&
                mu[size_t(b.ell() + 1)].classical_limit() == Scalar(1));
  }
  // q_pow homomorphism on a few vectors
  bool hom_ok = true;
  Rng rng(cfg.seed + 17);
  for (int t = 0; t < 6; ++t) {
    Eps u = eps_zero(), v = eps_zero();
    for (int i = 0; i < n; ++i) {
      u[size_t(i)] = int16_t(rng.range(-2, 2));
      v[size_t(i)] = int16_t(rng.range(-2, 2));
    }
    if (!(w.q_pow(eps_add(u, v)) == w.q_pow(u) * w.q_pow(v))) hom_ok = false;
  }
  rep.add("restrict la to h^{-1}h* + h*", "q-power map is a homomorphism", hom_ok);
  // kostant monotonicity
  bool mono_ok = true;
  std::vector<Eps> small;
  for (int i = 1; i <= n; ++i) small.push_back(rs.simple(i));
  for (const Eps& r : rs.positive_roots())
    if (kostant_count(rs, r, small) > kostant_count(rs, r, rs.positive_roots())) mono_ok = false;
  rep.add("is free over", "enlarging the generators never lowers the count", mono_ok);
  return rep;
}

int RunResult::exit_code() const {
  bool fail = false, inconclusive = false;
  for (const auto& r : reports) {
    for (const auto& c : r.checks) {
      if (c.status == "fail") fail = true;
      if (c.status == "inconclusive") inconclusive = true;
    }
  }
  if (fail) return 1;
  if (inconclusive) return 2;
  return 0;
}

std::string RunResult::summary() const {
  // coverage matrix: anchor -> status over all suites
  std::map<std::string, std::pair<int, int>> anchors;  // pass count, total
  std::ostringstream os;
  int pass = 0, fail = 0, inc = 0;
  for (const auto& r : reports) {
    int p = 0, f = 0, i = 0;
    for (const auto& c : r.checks) {
      auto& a = anchors[c.anchor];
      a.second++;
      if (c.status == "pass") {
        a.first++;
        ++p;
      } else if (c.status == "fail") {
        ++f;
      } else {
        ++i;
      }
    }
    pass += p;
    fail += f;
    inc += i;
    os << r.suite << " [" << r.blocks << " depth " << r.depth << "]: " << p << " pass";
    if (f) os << ", " << f << " FAIL";
    if (i) os << ", " << i << " inconclusive";
    os << "\n";
  }
  os << "anchors:\n";
  for (const auto& anchor : all_anchors()) {
    auto it = anchors.find(anchor);
    if (it == anchors.end()) {
      os << "  [--] " << anchor << " (not run)\n";
    } else {
      os << "  [" << (it->second.first == it->second.second ? "ok" : "XX") << "] " << anchor
         << " (" << it->second.first << "/" << it->second.second << ")\n";
    }
  }
  for (const auto& [anchor, counts] : anchors) {
    if (std::find(all_anchors().begin(), all_anchors().end(), anchor) == all_anchors().end())
      os << "  [??] " << anchor << " (" << counts.first << "/" << counts.second
         << ", unregistered)\n";
  }
  os << "total: " << pass << " pass, " << fail << " fail, " << inc << " inconclusive\n";
  return os.str();
}

RunResult run_suites(const RunConfig& cfg) {
  RunResult out;
  std::set<std::string> want(cfg.suites.begin(), cfg.suites.end());
  bool all = want.count("all") > 0;
  auto wanted = [&](const std::string& s) { return all || want.count(s) > 0; };
  for (const std::string& s : cfg.suites) {
    if (s != "all" &&
        std::find(suite_names().begin(), suite_names().end(), s) == suite_names().end())
      throw Error(Errc::invalid_argument, "unknown suite '" + s + "'");
  }

  if (wanted("scalars")) out.reports.push_back(suite_scalars(cfg.seed));
  if (wanted("rootdata")) out.reports.push_back(suite_rootdata(cfg));

  bool needs_engine = false;
  for (const std::string& s :
       {"pbw", "verma", "singular", "vectorrep", "rmatrix", "quasir", "minpoly", "qtrace",
        "reflection", "filtration", "classical"})
    needs_engine = needs_engine || wanted(s);
  if (needs_engine) {
    BlockStructure b = BlockStructure::parse(cfg.n, cfg.blocks);
    WeightMode mode = cfg.generic_lambda ? WeightMode::generic : WeightMode::kappa;
    if (cfg.depth < 2 * cfg.n - 1)
      throw Error(Errc::invalid_argument, "depth must be at least 2n-1 for the Q suites");
    Engine e(cfg.n, b, mode, cfg.seed, cfg.symbolic_z, cfg.depth);
    if (wanted("pbw")) out.reports.push_back(suite_pbw(e));
    if (wanted("verma")) out.reports.push_back(suite_verma(e));
    if (wanted("singular")) out.reports.push_back(suite_singular(e));
    if (wanted("vectorrep")) out.reports.push_back(suite_vectorrep(e));
    if (wanted("rmatrix")) out.reports.push_back(suite_rmatrix(e));
    if (wanted("quasir")) out.reports.push_back(suite_quasir(e));
    if (cfg.generic_lambda) {
      // the Q spectral machinery needs the quotient module; in the negative
      // control mode those suites are recorded as not-run
      for (const std::string& s : {"minpoly", "qtrace", "reflection", "filtration"})
        if (wanted(s)) {
          Report r = e.new_report(s);
          r.add_status("polynomial equation of degree 2l+2", "suite requires the kappa weight",
                       "inconclusive", "generic-lambda mode");
          out.reports.push_back(std::move(r));
        }
      if (wanted("classical")) out.reports.push_back(suite_classical(e));
    } else {
      if (wanted("minpoly")) out.reports.push_back(suite_minpoly(e));
      if (wanted("qtrace")) out.reports.push_back(suite_qtrace(e));
      if (wanted("reflection")) out.reports.push_back(suite_reflection(e));
      if (wanted("filtration")) out.reports.push_back(suite_filtration(e));
      if (wanted("classical")) out.reports.push_back(suite_classical(e));
    }
  }
  if (wanted("classical") && !cfg.gl_eigs.empty()) {
    out.reports.push_back(suite_classical_gl(ClassSpec::gl(ClassSpec::parse_eigs(cfg.gl_eigs))));
  } else if (wanted("classical")) {
    // default GL cases
    out.reports.push_back(suite_classical_gl(
        ClassSpec::gl({{Gauss(2), 1}, {Gauss(3), 1}})));
    out.reports.push_back(suite_classical_gl(
        ClassSpec::gl({{Gauss(2), 2}, {Gauss(3), 1}})));
    out.reports.push_back(suite_classical_gl(ClassSpec::gl({{Gauss(5), 3}})));
  }
  return out;
}

}  // namespace spq
