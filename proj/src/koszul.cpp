#include "wbk/koszul.hpp"

#include <algorithm>

namespace wbk {

namespace {

bool increasing(const std::vector<int>& v) { return std::is_sorted(v.begin(), v.end()); }

std::vector<WalledMorphism> up_reps(int m, int n, int p, int q) {
  std::vector<WalledMorphism> out;
  for (const auto& f : hom_basis_cached(m, n, p, q))
    if (increasing(f.left) && increasing(f.right)) out.push_back(f);
  return out;
}

bool in_window(const WbModule& m, int a, int b) { return a >= 0 && b >= 0 && a <= m.max_m() && b <= m.max_n(); }

}  // namespace

ChainComplex koszul_up(const WbModule& mod, int p, int q) {
  ChainComplex c;
  c.p = p, c.q = q;
  int r0 = std::min(p, q);
  std::map<int, std::vector<WalledMorphism>> reps;
  std::map<int, std::map<WalledMorphism, int>> rep_index;
  for (int r = 0; r <= r0; ++r) {
    int m = p - r, n = q - r;
    reps[n] = up_reps(m, n, p, q);
    for (size_t i = 0; i < reps[n].size(); ++i) rep_index[n][reps[n][i]] = static_cast<int>(i);
    c.dim[n] = static_cast<int>(reps[n].size()) * mod.dim(m, n);
    c.complete[n] = in_window(mod, m, n);
  }
  for (int r = 0; r < r0; ++r) {
    int m = p - r, n = q - r;
    int dv = mod.dim(m, n), dl = mod.dim(m - 1, n - 1);
    if (!c.term(n) || !c.term(n - 1)) continue;
    Matrix d(c.term(n - 1), c.term(n));
    for (auto [x, y] : pair1(m, n)) {
      Matrix cx = mod.map(m, n, x, y);
      WalledMorphism io = iota(x, y, m, n);
      for (size_t g = 0; g < reps[n].size(); ++g) {
        SignedMorphism h = compose(reps[n][g], io, !mod.twisted);
        int hi = rep_index[n - 1].at(h.f);
        for (int j = 0; j < dv; ++j)
          for (const auto& [i, v] : cx.col(j)) d.add_to(hi * dl + i, static_cast<int>(g) * dv + j, v * h.sign);
      }
    }
    c.d[n] = std::move(d);
  }
  return c;
}

Coinvariants down_term(const WbModule& mod, int p, int q, int r) {
  int m = p + r, n = q + r;
  int d = mod.dim(m, n);
  const GroupAction* g = mod.underlying.at(m, n);
  std::vector<Matrix> gens;
  for (int i = 0; i + 1 < r; ++i) {
    Matrix h = g->gen(0, p + i) * g->gen(1, q + i);
    gens.push_back(mod.twisted ? h : Q(-1) * h);
  }
  return coinvariants(GroupAction(d, {r}, std::move(gens)));
}

ChainComplex koszul_down(const WbModule& mod, int p, int q) {
  ChainComplex c;
  c.p = p, c.q = q;
  std::map<int, Coinvariants> terms;
  for (int r = 0; in_window(mod, p + r, q + r); ++r) {
    int n = q + r;
    c.complete[n] = in_window(mod, p + r + 1, q + r + 1);
    if (!mod.dim(p + r, q + r)) {
      c.dim[n] = 0;
      continue;
    }
    terms.emplace(r, down_term(mod, p, q, r));
    c.dim[n] = terms.at(r).dim();
  }
  for (auto& [r, t] : terms) {
    if (r == 0 || !terms.count(r - 1)) continue;
    int m = p + r, n = q + r;
    Matrix sum(mod.dim(m - 1, n - 1), mod.dim(m, n));
    for (int i = 1; i <= r; ++i) {
      int sign = !mod.twisted && (r - i) % 2 ? -1 : 1;
      sum = sum + Q(sign) * mod.map(m, n, p + i, q + i);
    }
    c.d[n] = terms.at(r - 1).projection * sum * t.section();
  }
  return c;
}

namespace {

HomologyTable table(const WbModule& mod, int threads, bool up) {
  std::vector<std::pair<int, int>> outs;
  for (int p = 0; p <= mod.max_m(); ++p)
    for (int q = 0; q <= mod.max_n(); ++q) outs.emplace_back(p, q);
  std::vector<std::vector<HomologyEntry>> found(outs.size());
  parallel_for(static_cast<int>(outs.size()), threads, [&](int i) {
    auto [p, q] = outs[i];
    ChainComplex c = up ? koszul_up(mod, p, q) : koszul_down(mod, p, q);
    std::string where = std::string(up ? "koszul_up" : "koszul_down");
    auto h = homology(c, where);
    for (const auto& [k, d] : c.dim) {
      HomologyEntry e;
      e.p = p, e.q = q, e.degree = k, e.weight = p - q;
      e.dim = h.count(k) ? h.at(k) : 0;
      auto ok = [&](int j) { return !c.complete.count(j) || c.complete.at(j); };
      e.safe = ok(k - 1) && ok(k) && ok(k + 1);
      found[i].push_back(e);
    }
  });
  HomologyTable t;
  for (const auto& v : found)
    for (const auto& e : v) t.set(e);
  return t;
}

}  // namespace

HomologyTable koszul_up_table(const WbModule& m, int threads) { return table(m, threads, true); }
HomologyTable koszul_down_table(const WbModule& m, int threads) { return table(m, threads, false); }

}  // namespace wbk
