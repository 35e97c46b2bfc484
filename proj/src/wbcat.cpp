#include "wbk/wbcat.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

namespace wbk {

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

long long hom_count(int m, int n, int p, int q) {
  int r = p - m;
  if (r < 0 || q - n != r) return 0;
  return factorial(p) * factorial(q) / factorial(r);
}

bool WalledMorphism::valid() const {
  int r = p - m;
  if (m < 0 || n < 0 || r < 0 || q - n != r) return false;
  if (static_cast<int>(left.size()) != m || static_cast<int>(right.size()) != n) return false;
  if (static_cast<int>(pairing.size()) != r) return false;
  std::vector<int> hl(p + 1, 0), hr(q + 1, 0);
  for (int v : left) {
    if (v < 1 || v > p || hl[v]++) return false;
  }
  for (int v : right) {
    if (v < 1 || v > q || hr[v]++) return false;
  }
  for (std::size_t i = 0; i < pairing.size(); ++i) {
    auto [x, y] = pairing[i];
    if (x < 1 || x > p || y < 1 || y > q || hl[x]++ || hr[y]++) return false;
    if (i && pairing[i - 1].second >= y) return false;
  }
  return true;
}

std::string WalledMorphism::str() const {
  std::ostringstream os;
  os << "(" << m << "," << n << ")->(" << p << "," << q << ") L[";
  for (std::size_t i = 0; i < left.size(); ++i) os << (i ? " " : "") << left[i];
  os << "] R[";
  for (std::size_t i = 0; i < right.size(); ++i) os << (i ? " " : "") << right[i];
  os << "] P[";
  for (std::size_t i = 0; i < pairing.size(); ++i) os << (i ? " " : "") << pairing[i].first << ":" << pairing[i].second;
  os << "]";
  return os.str();
}

WalledMorphism identity_morphism(int m, int n) {
  WalledMorphism f;
  f.m = f.p = m;
  f.n = f.q = n;
  for (int i = 1; i <= m; ++i) f.left.push_back(i);
  for (int i = 1; i <= n; ++i) f.right.push_back(i);
  return f;
}

WalledMorphism from_perms(const Perm& sigma, const Perm& tau) {
  WalledMorphism f;
  f.m = f.p = static_cast<int>(sigma.size());
  f.n = f.q = static_cast<int>(tau.size());
  for (int v : sigma) f.left.push_back(v + 1);
  for (int v : tau) f.right.push_back(v + 1);
  return f;
}

std::pair<Perm, Perm> to_perms(const WalledMorphism& f) {
  if (f.degree() != 0) throw std::invalid_argument("to_perms: morphism has positive degree");
  Perm s, t;
  for (int v : f.left) s.push_back(v - 1);
  for (int v : f.right) t.push_back(v - 1);
  return {s, t};
}

int normalize_pairing(std::vector<std::pair<int, int>>& pairs) {
  std::vector<int> ys;
  for (const auto& pr : pairs) ys.push_back(pr.second);
  Perm s = sorting_perm(ys);
  std::vector<std::pair<int, int>> out(pairs.size());
  for (std::size_t i = 0; i < pairs.size(); ++i) out[s[i]] = pairs[i];
  pairs.swap(out);
  return perm_sign(s);
}

namespace {

void injections(int m, int p, std::vector<int>& cur, std::vector<bool>& used, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (int v = 1; v <= p; ++v) {
    if (used[v]) continue;
    used[v] = true;
    cur.push_back(v);
    injections(m, p, cur, used, out);
    cur.pop_back();
    used[v] = false;
  }
}

std::vector<std::vector<int>> all_injections(int m, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(p + 1, false);
  injections(m, p, cur, used, out);
  return out;
}

std::vector<int> complement(const std::vector<int>& img, int p) {
  std::vector<bool> hit(p + 1, false);
  for (int v : img) hit[v] = true;
  std::vector<int> c;
  for (int v = 1; v <= p; ++v)
    if (!hit[v]) c.push_back(v);
  return c;
}

}  // namespace

std::vector<WalledMorphism> hom_basis(int m, int n, int p, int q) {
  std::vector<WalledMorphism> out;
  int r = p - m;
  if (m < 0 || n < 0 || r < 0 || q - n != r) return out;
  auto ls = all_injections(m, p);
  auto rs = all_injections(n, q);
  for (const auto& l : ls) {
    auto cl = complement(l, p);
    for (const auto& rr : rs) {
      auto cr = complement(rr, q);
      Perm pi = identity_perm(r);
      do {
        WalledMorphism f;
        f.m = m, f.n = n, f.p = p, f.q = q;
        f.left = l;
        f.right = rr;
        for (int i = 0; i < r; ++i) f.pairing.emplace_back(cl[pi[i]], cr[i]);
        out.push_back(std::move(f));
      } while (std::next_permutation(pi.begin(), pi.end()));
    }
  }
  return out;
}

namespace {

struct HomCache {
  std::mutex mu;
  std::map<std::tuple<int, int, int, int>, std::vector<WalledMorphism>> bases;
  std::map<std::tuple<int, int, int, int>, std::map<WalledMorphism, int>> index;
};

HomCache& cache() {
  static HomCache c;
  return c;
}

std::vector<WalledMorphism> load_or_build(int m, int n, int p, int q) {
  const char* dir = std::getenv("WBK_CACHE_DIR");
  if (!dir || !*dir) return hom_basis(m, n, p, q);
  namespace fs = std::filesystem;
  fs::path path = fs::path(dir) / ("hom_" + std::to_string(m) + "_" + std::to_string(n) + "_" +
                                   std::to_string(p) + "_" + std::to_string(q) + ".txt");
  long long expect = hom_count(m, n, p, q);
  std::ifstream in(path);
  if (in) {
    std::vector<WalledMorphism> out;
    std::string header;
    long long cnt = -1;
    in >> header >> cnt;
    if (header == "wbk-hom-1" && cnt == expect) {
      int r = p - m;
      for (long long k = 0; k < cnt && in; ++k) {
        WalledMorphism f;
        f.m = m, f.n = n, f.p = p, f.q = q;
        f.left.resize(m);
        f.right.resize(n);
        f.pairing.resize(r);
        for (auto& v : f.left) in >> v;
        for (auto& v : f.right) in >> v;
        for (auto& pr : f.pairing) in >> pr.first >> pr.second;
        if (in && f.valid()) out.push_back(std::move(f));
      }
      if (static_cast<long long>(out.size()) == cnt) return out;
    }
  }
  auto out = hom_basis(m, n, p, q);
  std::error_code ec;
  fs::create_directories(dir, ec);
  fs::path tmp = path;
  tmp += ".tmp";
  std::ofstream os(tmp);
  if (os) {
    os << "wbk-hom-1 " << out.size() << "\n";
    for (const auto& f : out) {
      for (int v : f.left) os << v << " ";
      for (int v : f.right) os << v << " ";
      for (const auto& [x, y] : f.pairing) os << x << " " << y << " ";
      os << "\n";
    }
    os.close();
    fs::rename(tmp, path, ec);
  }
  return out;
}

}  // namespace

const std::vector<WalledMorphism>& hom_basis_cached(int m, int n, int p, int q) {
  HomCache& c = cache();
  auto key = std::make_tuple(m, n, p, q);
  {
    std::lock_guard<std::mutex> lock(c.mu);
    auto it = c.bases.find(key);
    if (it != c.bases.end()) return it->second;
  }
  auto basis = load_or_build(m, n, p, q);
  std::map<WalledMorphism, int> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], static_cast<int>(i));
  std::lock_guard<std::mutex> lock(c.mu);
  auto [it, inserted] = c.bases.emplace(key, std::move(basis));
  if (inserted) c.index.emplace(key, std::move(idx));
  return it->second;
}

int hom_index(const WalledMorphism& f) {
  hom_basis_cached(f.m, f.n, f.p, f.q);
  HomCache& c = cache();
  std::lock_guard<std::mutex> lock(c.mu);
  const auto& idx = c.index.at(std::make_tuple(f.m, f.n, f.p, f.q));
  auto it = idx.find(f);
  if (it == idx.end()) throw std::invalid_argument("morphism not in normal form: " + f.str());
  return it->second;
}

SignedMorphism compose(const SignedMorphism& g, const SignedMorphism& f, bool twisted) {
  if (g.opposite != f.opposite) throw CompositionError("cannot compose uwb with dwb morphism");
  if (g.opposite) {
    // (a^op) o (b^op) = (b o a)^op
    SignedMorphism r = compose(SignedMorphism{f.f, f.sign, false}, SignedMorphism{g.f, g.sign, false}, twisted);
    r.opposite = true;
    return r;
  }
  const WalledMorphism& a = f.f;
  const WalledMorphism& b = g.f;
  if (a.p != b.m || a.q != b.n)
    throw CompositionError("composition: target " + std::to_string(a.p) + "," + std::to_string(a.q) +
                           " does not match source " + std::to_string(b.m) + "," + std::to_string(b.n));
  SignedMorphism r;
  WalledMorphism& c = r.f;
  c.m = a.m, c.n = a.n, c.p = b.p, c.q = b.q;
  for (int v : a.left) c.left.push_back(b.left[v - 1]);
  for (int v : a.right) c.right.push_back(b.right[v - 1]);
  for (const auto& [x, y] : a.pairing) c.pairing.emplace_back(b.left[x - 1], b.right[y - 1]);
  for (const auto& pr : b.pairing) c.pairing.push_back(pr);
  int s = normalize_pairing(c.pairing);
  r.sign = f.sign * g.sign * (twisted ? s : 1);
  return r;
}

SignedMorphism compose(const WalledMorphism& g, const WalledMorphism& f, bool twisted) {
  return compose(SignedMorphism{g, 1, false}, SignedMorphism{f, 1, false}, twisted);
}

std::vector<std::pair<int, int>> pair1(int m, int n) {
  std::vector<std::pair<int, int>> out;
  for (int x = 1; x <= m; ++x)
    for (int y = 1; y <= n; ++y) out.emplace_back(x, y);
  return out;
}

WalledMorphism iota(int x, int y, int m, int n) {
  if (x < 1 || x > m || y < 1 || y > n) throw std::out_of_range("iota: index out of range");
  WalledMorphism f;
  f.m = m - 1, f.n = n - 1, f.p = m, f.q = n;
  for (int i = 1; i <= m; ++i)
    if (i != x) f.left.push_back(i);
  for (int j = 1; j <= n; ++j)
    if (j != y) f.right.push_back(j);
  f.pairing.emplace_back(x, y);
  return f;
}

IotaSplit split_last_pair(const WalledMorphism& f, bool twisted) {
  if (f.pairing.empty()) throw std::invalid_argument("split_last_pair: degree 0");
  IotaSplit s;
  s.x = f.pairing.back().first;
  s.y = f.pairing.back().second;
  WalledMorphism& g = s.rest;
  g.m = f.m, g.n = f.n, g.p = f.p - 1, g.q = f.q - 1;
  for (int v : f.left) g.left.push_back(drop_label(v, s.x));
  for (int v : f.right) g.right.push_back(drop_label(v, s.y));
  for (std::size_t i = 0; i + 1 < f.pairing.size(); ++i)
    g.pairing.emplace_back(drop_label(f.pairing[i].first, s.x), drop_label(f.pairing[i].second, s.y));
  SignedMorphism c = compose(iota(s.x, s.y, f.p, f.q), g, twisted);
  if (c.f != f) throw std::logic_error("split_last_pair: factorization mismatch");
  s.sign = c.sign;  // [iota][rest] = sign [f]
  return s;
}

}  // namespace wbk
