#pragma once
// Unreduced Koszul complexes: full hom bases tensored with M, coinvariants by
// Reynolds averaging over S_m x S_n. Test-only second route.

#include "wbk/complex.hpp"
#include "wbk/module.hpp"

namespace wbk::testing {

// S_m x S_n generator (side, j) as a degree-0 morphism of (m,n).
inline WalledMorphism swap_morphism(int m, int n, int side, int j) {
  Perm a = identity_perm(m), b = identity_perm(n);
  std::swap(side ? b[j] : a[j], side ? b[j + 1] : a[j + 1]);
  return from_perms(a, b);
}

inline ChainComplex literal_up(const WbModule& mod, int p, int q) {
  ChainComplex c;
  c.p = p, c.q = q;
  std::map<int, Coinvariants> co;
  for (int r = 0; r <= std::min(p, q); ++r) {
    int m = p - r, n = q - r, dv = mod.dim(m, n);
    const auto& hom = hom_basis_cached(m, n, p, q);
    int h = static_cast<int>(hom.size());
    if (!dv) {
      c.dim[n] = 0;
      continue;
    }
    std::vector<Matrix> gens;
    for (int side = 0; side < 2; ++side)
      for (int j = 0; j + 1 < (side ? n : m); ++j) {
        WalledMorphism s = swap_morphism(m, n, side, j);
        Matrix a(h, h);
        for (int i = 0; i < h; ++i) {
          SignedMorphism g = compose(hom[i], s, !mod.twisted);
          a.set(hom_index(g.f), i, g.sign);
        }
        gens.push_back(kron(a, mod.underlying.at(m, n)->gen(side, j)));
      }
    co.emplace(n, coinvariants(GroupAction(h * dv, {m, n}, gens)));
    c.dim[n] = co.at(n).dim();
  }
  for (auto& [n, t] : co) {
    if (!co.count(n - 1)) continue;
    int m = p - q + n, dv = mod.dim(m, n), dl = mod.dim(m - 1, n - 1);
    const auto& hom = hom_basis_cached(m, n, p, q);
    Matrix d(static_cast<int>(hom_basis_cached(m - 1, n - 1, p, q).size()) * dl, static_cast<int>(hom.size()) * dv);
    for (auto [x, y] : pair1(m, n)) {
      Matrix cx = mod.map(m, n, x, y);
      for (size_t g = 0; g < hom.size(); ++g) {
        SignedMorphism h = compose(hom[g], iota(x, y, m, n), !mod.twisted);
        int hi = hom_index(h.f);
        for (int j = 0; j < dv; ++j)
          for (const auto& [i, v] : cx.col(j)) d.add_to(hi * dl + i, static_cast<int>(g) * dv + j, v * h.sign);
      }
    }
    c.d[n] = co.at(n - 1).projection * d * t.section();
  }
  return c;
}

inline ChainComplex literal_down(const WbModule& mod, int p, int q) {
  ChainComplex c;
  c.p = p, c.q = q;
  std::map<int, Coinvariants> co;
  for (int r = 0; p + r <= mod.max_m() && q + r <= mod.max_n(); ++r) {
    int m = p + r, n = q + r, dv = mod.dim(m, n);
    if (!dv) {
      c.dim[n] = 0;
      continue;
    }
    const auto& hom = hom_basis_cached(p, q, m, n);
    int h = static_cast<int>(hom.size());
    std::vector<Matrix> gens;
    for (int side = 0; side < 2; ++side)
      for (int j = 0; j + 1 < (side ? n : m); ++j) {
        WalledMorphism s = swap_morphism(m, n, side, j);
        Matrix a(h, h);  // on dual basis: s.[g]^* = eps [s o g]^*
        for (int i = 0; i < h; ++i) {
          SignedMorphism g = compose(s, hom[i], !mod.twisted);
          a.set(hom_index(g.f), i, g.sign);
        }
        gens.push_back(kron(a, mod.underlying.at(m, n)->gen(side, j)));
      }
    co.emplace(n, coinvariants(GroupAction(h * dv, {m, n}, gens)));
    c.dim[n] = co.at(n).dim();
  }
  for (auto& [n, t] : co) {
    if (!co.count(n - 1)) continue;
    int m = p - q + n, dv = mod.dim(m, n), dl = mod.dim(m - 1, n - 1);
    const auto& hom = hom_basis_cached(p, q, m, n);
    const auto& lower = hom_basis_cached(p, q, m - 1, n - 1);
    Matrix d(static_cast<int>(lower.size()) * dl, static_cast<int>(hom.size()) * dv);
    for (auto [x, y] : pair1(m, n)) {
      Matrix cx = mod.map(m, n, x, y);
      // transpose of postcomposition by iota: [g]^* -> sum over h with iota o h = +-g
      for (size_t hl = 0; hl < lower.size(); ++hl) {
        SignedMorphism g = compose(iota(x, y, m, n), lower[hl], !mod.twisted);
        int gi = hom_index(g.f);
        for (int j = 0; j < dv; ++j)
          for (const auto& [i, v] : cx.col(j))
            d.add_to(static_cast<int>(hl) * dl + i, gi * dv + j, v * g.sign);
      }
    }
    c.d[n] = co.at(n - 1).projection * d * t.section();
  }
  return c;
}

}  // namespace wbk::testing
