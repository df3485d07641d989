#include "classical.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace spq {

namespace {

// diag matrix from entries
Mat diag_of(const std::vector<Gauss>& d) {
  Mat m(int(d.size()), int(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = Scalar(d[i]);
  return m;
}

// the symplectic form C_{ij} = eps_i delta_{i j'}
Mat form_c(int N) {
  Mat c(N, N);
  for (int i = 1; i <= N; ++i) c.at(i - 1, N - i) = Scalar(i <= N / 2 ? 1 : -1);
  return c;
}

// dF at o for F(A) = prod (A - mu_k), as a linear operator on End(C^N):
// dF(xi) = sum_k L_k xi R_k.
Mat min_poly_differential(const Mat& o, const std::vector<Gauss>& roots) {
  int N = o.rows();
  size_t K = roots.size();
  std::vector<Mat> left(K, Mat::identity(N)), right(K, Mat::identity(N));
  for (size_t k = 1; k < K; ++k)
    left[k] = left[k - 1] * (o - Mat::identity(N, Scalar(roots[k - 1])));
  for (size_t k = K - 1; k-- > 0;)
    right[k] = (o - Mat::identity(N, Scalar(roots[k + 1]))) * right[k + 1];
  Mat d(N * N, N * N);
  for (int kk = 0; kk < N; ++kk)
    for (int ll = 0; ll < N; ++ll)
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          Scalar acc;
          for (size_t s = 0; s < K; ++s) acc += left[s].at(i, kk) * right[s].at(ll, j);
          if (!acc.is_zero()) d.at(i * N + j, kk * N + ll) = acc;
        }
  return d;
}

// dH at o for H(A) = A C A^t C + 1: dH(xi) = xi C o^t C + o C xi^t C.
Mat group_differential(const Mat& o, const Mat& C) {
  int N = o.rows();
  Mat coc = C * o.transpose() * C;
  Mat oc = o * C;
  Mat d(N * N, N * N);
  for (int kk = 0; kk < N; ++kk)
    for (int ll = 0; ll < N; ++ll)
      for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
          Scalar acc;
          // (e_{kl} C o^t C)_{ij} = delta_{ik} (C o^t C)_{lj}
          if (i == kk) acc += coc.at(ll, j);
          // (o C e_{lk} C)_{ij} = (oC)_{il} C_{kj}
          acc += oc.at(i, ll) * C.at(kk, j);
          if (!acc.is_zero()) d.at(i * N + j, kk * N + ll) = acc;
        }
  return d;
}

int stacked_kernel_dim(const std::vector<const Mat*>& ops) {
  int cols = ops.front()->cols();
  int rows = 0;
  for (const Mat* m : ops) rows += m->rows();
  Mat big(rows, cols);
  int r0 = 0;
  for (const Mat* m : ops) {
    for (int r = 0; r < m->rows(); ++r)
      for (int c = 0; c < cols; ++c)
        if (!m->at(r, c).is_zero()) big.at(r0 + r, c) = m->at(r, c);
    r0 += m->rows();
  }
  return cols - mat_rank(std::move(big));
}

// random-ish rational symplectic matrix: exp of a strictly upper triangular
// element of sp(2n); exact because the exponent is nilpotent
Mat random_symplectic(int n, uint64_t seed) {
  int N = 2 * n;
  Mat C = form_c(N);
  auto next = [&seed]() {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    return seed;
  };
  Mat xi(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) xi.at(i, j) = Scalar(long(next() % 5) - 2);
  // project to sp: (xi + sigma(xi))/2 with sigma(x) = C x^t C (note C^2 = -1)
  Mat sig = C * xi.transpose() * C;
  Mat y = (xi + sig).mul_scalar(Scalar::frac(1, 2));
  // exp(y), nilpotent
  Mat g = Mat::identity(N), term = Mat::identity(N);
  for (int k = 1; k <= N; ++k) {
    term = term * y;
    if (term.is_zero()) break;
    g = g + term.mul_scalar(Scalar(Gauss::frac(1, [k] {
      long f = 1;
      for (int t = 2; t <= k; ++t) f *= t;
      return f;
    }())));
  }
  return g;
}

Mat inverse_of(const Mat& m) {
  int N = m.rows();
  Mat aug(N, 2 * N);
  for (int i = 0; i < N; ++i) {
    for (int j = 0; j < N; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, N + i) = Scalar(1);
  }
  rref_in_place(aug);
  Mat inv(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) inv.at(i, j) = aug.at(i, N + j);
  return inv;
}

}  // namespace

int ClassSpec::matrix_size() const {
  if (group == Group::GL) {
    int s = 0;
    for (const auto& [v, k] : eigs) s += k;
    return s;
  }
  int s = 0;
  for (const auto& [v, k] : eigs) s += k;
  return 2 * (s + m + p);
}

std::vector<Gauss> ClassSpec::diagonal() const {
  std::vector<Gauss> d;
  if (group == Group::GL) {
    for (const auto& [v, k] : eigs)
      for (int t = 0; t < k; ++t) d.push_back(v);
    return d;
  }
  for (const auto& [v, k] : eigs)
    for (int t = 0; t < k; ++t) d.push_back(v);
  for (int t = 0; t < m; ++t) d.push_back(Gauss(-1));
  for (int t = 0; t < 2 * p; ++t) d.push_back(Gauss(1));
  for (int t = 0; t < m; ++t) d.push_back(Gauss(-1));
  for (auto it = eigs.rbegin(); it != eigs.rend(); ++it)
    for (int t = 0; t < it->second; ++t) d.push_back(it->first.inv());
  return d;
}

long ClassSpec::orbit_dimension() const {
  if (group == Group::GL) {
    long N = matrix_size(), s = 0;
    for (const auto& [v, k] : eigs) s += long(k) * k;
    return N * N - s;
  }
  long n = matrix_size() / 2;
  long dimK = long(m) * (2 * m + 1) + long(p) * (2 * p + 1);
  for (const auto& [v, k] : eigs) dimK += long(k) * k;
  return n * (2 * n + 1) - dimK;
}

ClassSpec ClassSpec::gl(std::vector<std::pair<Gauss, int>> eigs) {
  ClassSpec s;
  s.group = Group::GL;
  s.eigs = std::move(eigs);
  return s;
}

ClassSpec ClassSpec::sp(const BlockStructure& b, const std::vector<Gauss>& mu0) {
  if (int(mu0.size()) != b.ell())
    throw Error(Errc::invalid_argument, "need one classical eigenvalue per GL block");
  ClassSpec s;
  s.group = Group::SP;
  s.m = b.m;
  s.p = b.p;
  for (int i = 0; i < b.ell(); ++i) {
    const Gauss& v = mu0[size_t(i)];
    if (v.is_zero() || v == Gauss(1) || v == Gauss(-1))
      throw Error(Errc::invalid_argument, "GL-block eigenvalue must be invertible and not +-1");
    s.eigs.push_back({v, b.gl_sizes[size_t(i)]});
  }
  return s;
}

std::vector<std::pair<Gauss, int>> ClassSpec::parse_eigs(const std::string& text) {
  std::vector<std::pair<Gauss, int>> out;
  std::istringstream is(text);
  std::string item;
  while (std::getline(is, item, ',')) {
    auto colon = item.find(':');
    if (colon == std::string::npos)
      throw Error(Errc::invalid_argument, "eigenvalue list: expected value:multiplicity");
    std::string val = item.substr(0, colon);
    int mult = std::stoi(item.substr(colon + 1));
    auto slash = val.find('/');
    Gauss g = slash == std::string::npos
                  ? Gauss(mpq_class(std::stol(val)))
                  : Gauss::frac(std::stol(val.substr(0, slash)), std::stol(val.substr(slash + 1)));
    out.push_back({g, mult});
  }
  return out;
}

Report suite_classical_gl(const ClassSpec& spec) {
  Report rep;
  rep.suite = "classical-gl";
  rep.n = spec.matrix_size();
  rep.mode = "exact-rational";
  // distinct eigenvalues required
  for (size_t i = 0; i < spec.eigs.size(); ++i)
    for (size_t j = i + 1; j < spec.eigs.size(); ++j)
      if (spec.eigs[i].first == spec.eigs[j].first)
        throw Error(Errc::invalid_argument, "repeated eigenvalue in the class data");
  int N = spec.matrix_size();
  Mat o = diag_of(spec.diagonal());
  std::vector<Gauss> roots;
  for (const auto& [v, k] : spec.eigs) roots.push_back(v);
  Mat dF = min_poly_differential(o, roots);
  int ker = N * N - mat_rank(dF);
  rep.add("generates the defining ideal", "kernel of dF at the initial point has the orbit dimension",
          ker == spec.orbit_dimension(),
          "kernel dim " + std::to_string(ker) + " vs " + std::to_string(spec.orbit_dimension()));
  // trace differentials are redundant: ker dF subset ker dtheta_k
  {
    Mat kerb = kernel_basis(dF);
    bool ok = true;
    for (int c = 0; c < kerb.cols(); ++c) {
      for (int k = 1; k <= N; ++k) {
        // d theta_k (xi) = k Tr(o^{k-1} xi)
        Mat pw = Mat::identity(N);
        for (int t = 1; t < k; ++t) pw = pw * o;
        Scalar tr;
        for (int i = 0; i < N; ++i)
          for (int j = 0; j < N; ++j) tr += pw.at(j, i) * kerb.at(i * N + j, c);
        if (!tr.is_zero()) ok = false;
      }
    }
    rep.add("the equations with dtheta_k are redundant", "trace differentials vanish on ker dF",
            ok);
  }
  // dF vanishes on the off-diagonal blocks and scales the diagonal ones
  {
    bool ok = true;
    std::vector<int> block_of;
    for (size_t b = 0; b < spec.eigs.size(); ++b)
      for (int t = 0; t < spec.eigs[b].second; ++t) block_of.push_back(int(b));
    for (int i = 0; i < N && ok; ++i)
      for (int j = 0; j < N; ++j) {
        // dF(e_ij) as a matrix
        Mat img(N, N);
        for (int r = 0; r < N; ++r)
          for (int cc = 0; cc < N; ++cc) img.at(r, cc) = dF.at(r * N + cc, i * N + j);
        if (block_of[size_t(i)] != block_of[size_t(j)]) {
          if (!img.is_zero()) ok = false;
        } else {
          Scalar factor(1);
          for (size_t b = 0; b < spec.eigs.size(); ++b) {
            if (int(b) == block_of[size_t(i)]) continue;
            factor *= Scalar(spec.eigs[size_t(block_of[size_t(i)])].first - spec.eigs[b].first);
          }
          Mat expect(N, N);
          expect.at(i, j) = factor;
          if (!(img == expect)) ok = false;
        }
      }
    rep.add("dF(xi) = prod (mu_j - mu_i) xi", "block structure of the differential", ok);
  }
  return rep;
}

Report suite_classical(Engine& e) {
  Report rep = e.new_report("classical");
  const BlockStructure& b = e.blocks();
  int n = b.n, N = 2 * n;

  if (e.mode() != WeightMode::kappa) {
    rep.add_status("generate the defining ideal of the class", "classical checks",
                   "inconclusive", "generic-lambda mode has no classical class");
    return rep;
  }

  // classical eigenvalues from the quantum mu parameters
  auto mu = mu_parameters(b, e.weights());
  std::vector<Gauss> mu0;
  bool numeric = true;
  for (int i = 0; i < b.ell(); ++i) {
    Scalar cl = mu[size_t(i)].classical_limit();
    if (!cl.den().is_constant() || !cl.num().is_constant()) {
      numeric = false;
      break;
    }
    mu0.push_back(cl.num().is_zero() ? Gauss(0) : cl.num().lead().second);
  }
  rep.add("mu0 = lim mu", "limits of the m and p block parameters",
          mu[size_t(b.ell())].classical_limit() == Scalar(-1) &&
              mu[size_t(b.ell() + 1)].classical_limit() == Scalar(1));

  if (!numeric) {
    rep.add_status("generate the defining ideal of the class", "jacobian checks",
                   "inconclusive", "symbolic z: no numeric class to check");
    return rep;
  }

  ClassSpec spec = ClassSpec::sp(b, mu0);
  Mat o = diag_of(spec.diagonal());
  Mat C = form_c(N);

  // o is symplectic and lies on the variety
  {
    bool sympl = (o * C * o.transpose()) == C;
    std::vector<Gauss> roots;
    for (const auto& [v, k] : spec.eigs) roots.push_back(v);
    roots.push_back(Gauss(-1));
    roots.push_back(Gauss(1));
    for (auto it = spec.eigs.rbegin(); it != spec.eigs.rend(); ++it)
      roots.push_back(it->first.inv());
    Mat F = Mat::identity(N);
    for (const Gauss& r : roots) F = F * (o - Mat::identity(N, Scalar(r)));
    Mat H = o * C * o.transpose() * C + Mat::identity(N);
    rep.add("The initial point o", "o is symplectic and satisfies the class equations",
            sympl && F.is_zero() && H.is_zero());
  }

  std::vector<Gauss> roots;
  for (const auto& [v, k] : spec.eigs) roots.push_back(v);
  roots.push_back(Gauss(-1));
  roots.push_back(Gauss(1));
  for (auto it = spec.eigs.rbegin(); it != spec.eigs.rend(); ++it)
    roots.push_back(it->first.inv());

  auto kernel_at = [&](const Mat& point) {
    Mat dF = min_poly_differential(point, roots);
    Mat dH = group_differential(point, C);
    return stacked_kernel_dim({&dH, &dF});
  };
  int ker = kernel_at(o);
  rep.add("generate the defining ideal of the class",
          "kernel of dH + dF at o equals the class dimension", ker == spec.orbit_dimension(),
          "kernel dim " + std::to_string(ker) + " vs " + std::to_string(spec.orbit_dimension()));

  // dim K double check: the commutant of o inside sp(2n)
  {
    // basis of sp: e_{ij} - eps_i eps_j e_{j'i'} (paired), e_{i i'} (self)
    std::vector<Mat> basis;
    auto conj = [&](int i) { return N + 1 - i; };
    auto sgn = [&](int i) { return i <= n ? 1 : -1; };
    for (int i = 1; i <= N; ++i)
      for (int j = 1; j <= N; ++j) {
        int pi = conj(j), pj = conj(i);
        if (std::make_pair(i, j) > std::make_pair(pi, pj)) continue;  // canonical rep
        Mat m(N, N);
        m.at(i - 1, j - 1) = Scalar(1);
        if (std::make_pair(i, j) != std::make_pair(pi, pj))
          m.at(pi - 1, pj - 1) = Scalar(-sgn(i) * sgn(j));
        basis.push_back(std::move(m));
      }
    long expect_sp = long(n) * (2 * n + 1);
    bool basis_ok = long(basis.size()) == expect_sp;
    int commutant = 0;
    for (const Mat& m : basis)
      if ((m * o - o * m).is_zero()) ++commutant;
    // the commutant of a diagonal o inside sp splits over the basis
    rep.add("K = GL(n_1) x ... x SP(2p)", "commutant dimension equals dim K",
            basis_ok && commutant == b.dim_stabilizer(),
            "commutant " + std::to_string(commutant));
  }

  // trace identities at o
  {
    bool ok = true;
    for (int k = 1; k <= 2 * n; ++k) {
      Mat pw = Mat::identity(N);
      for (int t = 0; t < k; ++t) pw = pw * o;
      Scalar tr;
      for (int i = 0; i < N; ++i) tr += pw.at(i, i);
      Scalar expect;
      for (const auto& [v, kk] : spec.eigs)
        expect += Scalar(kk) * (Scalar(v).pow(k) + Scalar(v).pow(-k));
      expect += Scalar(2 * b.m) * (k % 2 ? Scalar(-1) : Scalar(1));
      expect += Scalar(2 * b.p);
      if (!(tr == expect)) ok = false;
    }
    rep.add("determined by the set of polynomial equations", "trace values at the initial point",
            ok);
  }

  // homogeneity smoke test: conjugated point gives the same kernel dimension
  {
    Mat g = random_symplectic(n, e.seed() * 2654435761u + 7);
    Mat o2 = g * o * inverse_of(g);
    int ker2 = kernel_at(o2);
    rep.add("coincides with the defining ideal", "kernel dimension is conjugation invariant",
            ker2 == ker);
  }

  // bridge: classical limits of the quantum minimal polynomial roots
  {
    auto qroots = eigenvalues_quo(b, e.weights());
    std::multiset<std::string> got, expect;
    for (const auto& r : qroots) got.insert(r.classical_limit().str());
    for (const Gauss& r : roots) expect.insert(Scalar(r).str());
    rep.add("is an equivariant quantization of the class",
            "q -> 1 limits of the quantum roots give the classical factors", got == expect);
    auto hroots = eigenvalues_hat(b, e.weights());
    std::multiset<std::string> hgot;
    for (const auto& r : hroots) hgot.insert(r.classical_limit().str());
    std::multiset<std::string> hexpect = expect;
    hexpect.insert(Scalar(-1).str());
    rep.add("glue up, and the isotropy subgroup jumps",
            "the extra parabolic root collapses onto -1", hgot == hexpect);
  }
  return rep;
}

}  // namespace spq
