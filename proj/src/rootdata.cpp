#include "rootdata.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace spq {

std::string eps_str(const Eps& v, int n) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < n; ++i) os << (i ? "," : "") << v[size_t(i)];
  os << ")";
  return os.str();
}

RootSystem::RootSystem(int n) : n_(n) {
  if (n < 1 || n > kMaxRank) throw Error(Errc::invalid_argument, "rank out of range");
  for (int i = 1; i < n; ++i) {
    Eps a = eps_zero();
    a[size_t(i - 1)] = 1;
    a[size_t(i)] = -1;
    simple_.push_back(a);
  }
  Eps b = eps_zero();
  b[size_t(n - 1)] = 2;
  simple_.push_back(b);
  rho_ = eps_zero();
  for (int i = 1; i <= n; ++i) rho_[size_t(i - 1)] = int16_t(n + 1 - i);
  // positive roots: e_i - e_j (i<j), e_i + e_j (i<j), 2 e_i
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      positive_.push_back(eps_sub(eps_unit(i - 1), eps_unit(j - 1)));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      positive_.push_back(eps_add(eps_unit(i - 1), eps_unit(j - 1)));
  for (int i = 1; i <= n; ++i) positive_.push_back(eps_scale(2, eps_unit(i - 1)));
}

bool RootSystem::to_simple_coords(const Eps& v, RootVec& out) const {
  // v = sum c_i a_i + c_n b: back-substitute from the first coordinate.
  out.fill(0);
  int carry = 0;
  // c_1 = v_1; c_i = v_i + c_{i-1}; finally 2 c_n(long) = v_n + c_{n-1}
  for (int i = 1; i < n_; ++i) {
    int c = v[size_t(i - 1)] + carry;
    if (c < 0) return false;
    out[size_t(i - 1)] = int16_t(c);
    carry = c;
  }
  int last = v[size_t(n_ - 1)] + carry;
  if (last < 0 || last % 2 != 0) return false;
  out[size_t(n_ - 1)] = int16_t(last / 2);
  for (int i = n_; i < kMaxRank; ++i)
    if (v[size_t(i)] != 0) return false;
  return true;
}

Eps RootSystem::from_simple_coords(const RootVec& c) const {
  Eps v = eps_zero();
  for (int i = 1; i <= n_; ++i) v = eps_add(v, eps_scale(c[size_t(i - 1)], simple(i)));
  return v;
}

int RootSystem::height(const RootVec& c) const {
  int h = 0;
  for (int i = 0; i < n_; ++i) h += c[size_t(i)];
  return h;
}

int BlockStructure::gl_total() const {
  int s = 0;
  for (int v : gl_sizes) s += v;
  return s;
}

std::vector<int> BlockStructure::levi_simple() const {
  std::vector<int> cut;
  int acc = 0;
  for (int v : gl_sizes) {
    acc += v;
    cut.push_back(acc);
  }
  cut.push_back(n - p);  // the distinguished root (also = gl_total + m)
  std::vector<int> keep;
  for (int i = 1; i <= n; ++i)
    if (std::find(cut.begin(), cut.end(), i) == cut.end()) keep.push_back(i);
  return keep;
}

bool BlockStructure::in_levi(int i) const {
  auto keep = levi_simple();
  return std::find(keep.begin(), keep.end(), i) != keep.end();
}

Eps BlockStructure::gamma(const RootSystem& rs) const {
  Eps g = eps_zero();
  for (int i = n - p; i <= n - 1; ++i) g = eps_add(g, rs.simple(i));
  return g;
}

Eps BlockStructure::delta(const RootSystem& rs) const {
  return eps_add(eps_scale(2, gamma(rs)), rs.simple(rs.long_root_index()));
}

int BlockStructure::block_of(int j) const {
  int acc = 0;
  for (size_t i = 0; i < gl_sizes.size(); ++i) {
    acc += gl_sizes[i];
    if (j <= acc) return int(i) + 1;
  }
  if (j <= acc + m) return ell() + 1;
  return ell() + 2;
}

std::vector<Eps> BlockStructure::levi_positive_roots(const RootSystem& rs) const {
  std::vector<Eps> out;
  for (const Eps& r : rs.positive_roots()) {
    // classify by the epsilon slots it touches
    int lo = 0, hi = 0, cnt = 0, sum = 0;
    for (int j = 1; j <= n; ++j)
      if (r[size_t(j - 1)] != 0) {
        if (!cnt) lo = j;
        hi = j;
        ++cnt;
        sum += r[size_t(j - 1)];
      }
    (void)cnt;
    int blo = block_of(lo), bhi = block_of(hi);
    if (blo != bhi) continue;
    if (blo <= ell() + 1) {
      // GL block (including the m block): only e_i - e_j
      if (sum == 0) out.push_back(r);
    } else {
      out.push_back(r);  // the sp(2p) block keeps all its roots
    }
  }
  return out;
}

std::vector<Eps> BlockStructure::stab_positive_roots(const RootSystem& rs) const {
  std::vector<Eps> out = levi_positive_roots(rs);
  // add e_i + e_j (i <= j) inside the m block
  int lo = gl_total() + 1, hi = gl_total() + m;
  for (int i = lo; i <= hi; ++i)
    for (int j = i; j <= hi; ++j)
      out.push_back(eps_add(eps_unit(i - 1), eps_unit(j - 1)));
  return out;
}

long BlockStructure::dim_stabilizer() const {
  long d = 0;
  for (int v : gl_sizes) d += long(v) * v;
  d += long(m) * (2 * m + 1);
  d += long(p) * (2 * p + 1);
  return d;
}

BlockStructure BlockStructure::parse(int n, const std::string& text) {
  auto semi = text.find(';');
  if (semi == std::string::npos)
    throw Error(Errc::invalid_argument, "blocks: expected \"n1,..,nl;m,p\"");
  BlockStructure b;
  b.n = n;
  auto parse_list = [](const std::string& s) {
    std::vector<int> out;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ','))
      if (!item.empty()) out.push_back(std::stoi(item));
    return out;
  };
  b.gl_sizes = parse_list(text.substr(0, semi));
  auto mp = parse_list(text.substr(semi + 1));
  if (mp.size() != 2) throw Error(Errc::invalid_argument, "blocks: need m,p after ';'");
  b.m = mp[0];
  b.p = mp[1];
  if (b.m < 1 || b.p < 1) throw Error(Errc::invalid_argument, "blocks: m and p must be >= 1");
  for (int v : b.gl_sizes)
    if (v < 1) throw Error(Errc::invalid_argument, "blocks: GL sizes must be >= 1");
  if (b.gl_total() + b.m + b.p != n)
    throw Error(Errc::invalid_argument, "blocks: parts must sum to the rank");
  if (b.ell() > 3) throw Error(Errc::invalid_argument, "blocks: at most 3 GL blocks supported");
  return b;
}

std::string BlockStructure::str() const {
  std::ostringstream os;
  for (size_t i = 0; i < gl_sizes.size(); ++i) os << (i ? "," : "") << gl_sizes[i];
  os << ";" << m << "," << p;
  return os.str();
}

WeightAssignment::WeightAssignment(const RootSystem& rs, const BlockStructure& b, WeightMode mode,
                                   const std::vector<Gauss>& z_values)
    : mode_(mode) {
  if (mode == WeightMode::full_generic)
    throw Error(Errc::invalid_argument, "full_generic needs the bare constructor");
  if (!z_values.empty() && int(z_values.size()) != b.ell())
    throw Error(Errc::invalid_argument, "need one z value per GL block");
  if (z_values.empty() && b.ell() > 3)
    throw Error(Errc::invalid_argument, "symbolic z supports at most 3 GL blocks");
  for (int j = 1; j <= b.n; ++j) {
    int blk = b.block_of(j);
    if (blk <= b.ell()) {
      if (z_values.empty())
        vals_.push_back(Scalar::var(VZ1 + (blk - 1)));
      else
        vals_.push_back(Scalar(z_values[size_t(blk - 1)]));
    } else if (blk == b.ell() + 1) {
      if (mode == WeightMode::kappa)
        vals_.push_back(Scalar::i() * Scalar::q_pow(-b.p));
      else
        vals_.push_back(Scalar::var(VT));
    } else {
      vals_.push_back(Scalar(1));
    }
  }
  (void)rs;
}

WeightAssignment::WeightAssignment(const RootSystem& rs, WeightMode mode) : mode_(mode) {
  if (mode != WeightMode::full_generic)
    throw Error(Errc::invalid_argument, "bare constructor is for full_generic");
  if (rs.rank() > 3)
    throw Error(Errc::invalid_argument, "full_generic supports rank <= 3");
  for (int j = 1; j <= rs.rank(); ++j) vals_.push_back(Scalar::var(VY1 + (j - 1)));
}

Scalar WeightAssignment::q_pow(const Eps& mu) const {
  Scalar r(1);
  for (size_t j = 0; j < vals_.size(); ++j) {
    int e = mu[j];
    if (e != 0) r = r * vals_[j].pow(e);
  }
  for (size_t j = vals_.size(); j < kMaxRank; ++j)
    if (mu[j] != 0) throw Error(Errc::invalid_argument, "weight beyond rank");
  return r;
}

Scalar WeightAssignment::q_pow_simple(const RootSystem& rs, const RootVec& c) const {
  Eps v = rs.from_simple_coords(c);
  return q_pow(v);
}

std::vector<Scalar> mu_parameters(const BlockStructure& b, const WeightAssignment& w) {
  if (!w.is_kappa())
    throw Error(Errc::unsupported, "mu parameters require the kappa-type weight");
  std::vector<Scalar> mu;
  int acc = 0;
  for (int i = 1; i <= b.ell(); ++i) {
    // z_i is the slot value of the first epsilon index of block i
    Scalar zi = w.slot(acc + 1);
    mu.push_back(zi * zi * Scalar::q_pow(-2 * acc));
    acc += b.gl_sizes[size_t(i - 1)];
  }
  mu.push_back(-(Scalar::q_pow(-2 * (b.gl_total() + b.p))));
  mu.push_back(Scalar::q_pow(-2 * (b.gl_total() + b.m)));
  return mu;
}

namespace {

long kostant_rec(const RootSystem& rs, const Eps& beta, const std::vector<Eps>& gens, size_t from) {
  bool zero = true;
  for (int i = 0; i < rs.rank(); ++i)
    if (beta[size_t(i)] != 0) zero = false;
  if (zero) return 1;
  long total = 0;
  RootVec c;
  for (size_t g = from; g < gens.size(); ++g) {
    Eps rem = eps_sub(beta, gens[g]);
    if (!rs.to_simple_coords(rem, c)) continue;
    total += kostant_rec(rs, rem, gens, g);
  }
  return total;
}

}  // namespace

long kostant_count(const RootSystem& rs, const Eps& beta, const std::vector<Eps>& generators) {
  RootVec c;
  if (!rs.to_simple_coords(beta, c))
    throw Error(Errc::invalid_argument, "weight is not a nonnegative root combination");
  return kostant_rec(rs, beta, generators, 0);
}

std::vector<Gauss> specialize_z(const BlockStructure& b, uint64_t seed) {
  // xorshift-style deterministic generator; independent of std:: internals
  auto next = [&seed]() {
    seed ^= seed << 13;
    seed ^= seed >> 7;
    seed ^= seed << 17;
    return seed;
  };
  std::vector<Gauss> zs;
  auto ok = [&](const Gauss& z) {
    if (z.is_zero()) return false;
    Gauss z2 = z * z;
    if (z2 == Gauss(1) || z2 == Gauss(-1)) return false;
    for (const Gauss& prev : zs) {
      Gauss p2 = prev * prev;
      if (z2 == p2 || z2 == p2.inv() || (z2 * p2) == Gauss(1)) return false;
    }
    return true;
  };
  for (int i = 0; i < b.ell(); ++i) {
    while (true) {
      long num = long(next() % 9) + 2;   // 2..10
      long den = long(next() % 5) + 1;   // 1..5
      Gauss z = Gauss::frac(num, den);
      if (ok(z)) {
        zs.push_back(z);
        break;
      }
    }
  }
  return zs;
}

}  // namespace spq
