#include "wbk/oracle.hpp"

#include <sstream>

namespace wbk {

namespace {

using Key = std::pair<int, int>;

bool down(const WbModule& n) { return n.dir == Direction::Down; }

// Bidegree holding the source of the structure maps landing in (s,t).
Key above(const WbModule& n, int s, int t) { return down(n) ? Key{s + 1, t + 1} : Key{s - 1, t - 1}; }

Matrix block_diag_embed(int rows, int offset, const Matrix& a, int cols, int col_offset) {
  Matrix out(rows, cols);
  for (int j = 0; j < a.cols(); ++j)
    for (const auto& [i, v] : a.col(j)) out.set(offset + i, col_offset + j, v);
  return out;
}

}  // namespace

Matrix top_lift(const WbModule& n, int s, int t) {
  int d = n.dim(s, t);
  if (!d) return Matrix(0, 0);
  std::vector<SVec> images;
  auto [a, b] = above(n, s, t);
  if (n.dim(a, b)) {
    // maps are keyed by the larger bidegree
    int km = down(n) ? a : s, kn = down(n) ? b : t;
    for (auto [x, y] : pair1(km, kn)) {
      Matrix c = n.map(km, kn, x, y);
      for (const auto& col : c.columns())
        if (!col.empty()) images.push_back(col);
    }
  }
  Matrix h = invariant_form(*n.underlying.at(s, t));
  if (images.empty()) return Matrix::identity(d);
  Matrix span = rank_kernel_image(Matrix::from_columns(d, images)).image;
  return kernel_basis(span.transpose() * h);
}

Support top(const WbModule& n) {
  Support out;
  for (const auto& [k, g] : n.underlying.spaces()) {
    int d = top_lift(n, k.first, k.second).cols();
    if (d) out[k] = d;
  }
  return out;
}

WbModule submodule(const WbModule& n, const std::map<Key, Matrix>& basis) {
  WbModule k;
  k.twisted = n.twisted;
  k.dir = n.dir;
  k.underlying = FbFbModule(n.max_m(), n.max_n());
  for (const auto& [key, b] : basis) {
    if (!b.cols()) continue;
    const GroupAction* g = n.underlying.at(key.first, key.second);
    std::vector<Matrix> gens;
    for (const auto& s : g->gens()) gens.push_back(solve_in_span(b, s * b));
    k.underlying.set(key.first, key.second, GroupAction(b.cols(), g->factors(), std::move(gens), false));
  }
  for (const auto& [key, a] : n.structure) {
    auto [m, nn, x, y] = key;
    Key hi{m, nn}, lo{m - 1, nn - 1};
    Key src = down(n) ? hi : lo, tgt = down(n) ? lo : hi;
    auto bs = basis.find(src), bt = basis.find(tgt);
    if (bs == basis.end() || bt == basis.end() || !bs->second.cols() || !bt->second.cols()) continue;
    k.set_map(m, nn, x, y, solve_in_span(bt->second, a * bs->second));
  }
  return k;
}

CoverStep projective_cover(const WbModule& n) {
  bool dn = down(n);
  int P = n.max_m(), Qn = n.max_n();
  struct Piece {
    Key at;
    Matrix lift;        // columns: basis of the top complement in N(s,t)
    GroupAction u;      // action on the complement
    WbModule rep;       // representable
    std::map<Key, Coinvariants> co;  // (rep (x) U)_S per (m,n)
  };
  std::vector<Piece> pieces;
  for (const auto& [key, g] : n.underlying.spaces()) {
    Matrix lift = top_lift(n, key.first, key.second);
    if (!lift.cols()) continue;
    std::vector<Matrix> ug;
    for (const auto& s : g.gens()) ug.push_back(solve_in_span(lift, s * lift));
    Piece pc{key, lift, GroupAction(lift.cols(), g.factors(), std::move(ug), false),
             representable(n.dir, key.first, key.second, n.twisted, P, Qn), {}};
    auto [s, t] = key;
    int du = pc.lift.cols();
    for (const auto& [mk, rg] : pc.rep.underlying.spaces()) {
      auto [m, nn] = mk;
      const auto& hom = dn ? hom_basis_cached(m, nn, s, t) : hom_basis_cached(s, t, m, nn);
      int h = static_cast<int>(hom.size());
      // S_s x S_t acts on hom by post- (Down) or pre-composition (Up)
      std::vector<Matrix> gens;
      for (int side = 0; side < 2; ++side)
        for (int j = 0; j + 1 < (side ? t : s); ++j) {
          Perm a = identity_perm(s), b = identity_perm(t);
          std::swap(side ? b[j] : a[j], side ? b[j + 1] : a[j + 1]);
          WalledMorphism rho = from_perms(a, b);
          Matrix act(h, h);
          for (int i = 0; i < h; ++i) {
            SignedMorphism c = dn ? compose(rho, hom[i], n.twisted) : compose(hom[i], rho, n.twisted);
            act.set(hom_index(c.f), i, c.sign);
          }
          gens.push_back(kron(act, pc.u.gen(side, j)));
        }
      pc.co.emplace(mk, coinvariants(GroupAction(h * du, {s, t}, std::move(gens), false)));
    }
    pieces.push_back(std::move(pc));
  }

  CoverStep out;
  WbModule& pm = out.projective;
  pm.twisted = n.twisted;
  pm.dir = n.dir;
  pm.underlying = FbFbModule(P, Qn);
  std::map<Key, std::vector<int>> offset;  // per (m,n): offset of each piece
  std::map<Key, int> total;
  for (int m = 0; m <= P; ++m)
    for (int nn = 0; nn <= Qn; ++nn) {
      int sum = 0;
      for (const auto& pc : pieces) {
        offset[{m, nn}].push_back(sum);
        auto it = pc.co.find({m, nn});
        if (it != pc.co.end()) sum += it->second.dim();
      }
      total[{m, nn}] = sum;
    }
  for (int m = 0; m <= P; ++m)
    for (int nn = 0; nn <= Qn; ++nn) {
      Key mk{m, nn};
      int d = total[mk];
      if (!d) continue;
      int ngen = std::max(m - 1, 0) + std::max(nn - 1, 0);
      std::vector<Matrix> gens(ngen, Matrix(d, d));
      Matrix phi(n.dim(m, nn), d);
      for (size_t pi = 0; pi < pieces.size(); ++pi) {
        const auto& pc = pieces[pi];
        auto it = pc.co.find(mk);
        if (it == pc.co.end()) continue;
        const Coinvariants& co = it->second;
        int off = offset[mk][pi], du = pc.lift.cols();
        const GroupAction* rg = pc.rep.underlying.at(m, nn);
        for (int gi = 0; gi < ngen; ++gi) {
          Matrix ind = co.induce(kron(rg->gens()[gi], Matrix::identity(du)));
          gens[gi] = gens[gi] + block_diag_embed(d, off, ind, d, off);
        }
        auto [s, t] = pc.at;
        const auto& hom = dn ? hom_basis_cached(m, nn, s, t) : hom_basis_cached(s, t, m, nn);
        for (int c = 0; c < co.dim(); ++c) {
          int l = co.lift_index[c];
          int f = l / du, j = l % du;
          phi.col(off + c) = act(n, SignedMorphism{hom[f], 1, dn}, pc.lift.col(j));
        }
      }
      pm.underlying.set(m, nn, GroupAction(d, {m, nn}, std::move(gens), false));
      out.cover[mk] = std::move(phi);
    }
  for (int m = 1; m <= P; ++m)
    for (int nn = 1; nn <= Qn; ++nn) {
      Key hi{m, nn}, lo{m - 1, nn - 1};
      if (!total[hi] || !total[lo]) continue;
      Key src = dn ? hi : lo, tgt = dn ? lo : hi;
      for (auto [x, y] : pair1(m, nn)) {
        Matrix a(total[tgt], total[src]);
        for (size_t pi = 0; pi < pieces.size(); ++pi) {
          const auto& pc = pieces[pi];
          auto is = pc.co.find(src), it = pc.co.find(tgt);
          if (is == pc.co.end() || it == pc.co.end()) continue;
          Matrix c = kron(pc.rep.map(m, nn, x, y), Matrix::identity(pc.lift.cols()));
          Matrix ind = it->second.projection * c * is->second.section();
          a = a + block_diag_embed(total[tgt], offset[tgt][pi], ind, total[src], offset[src][pi]);
        }
        pm.set_map(m, nn, x, y, std::move(a));
      }
    }
  for (const auto& [mk, phi] : out.cover) {
    Matrix kb = kernel_basis(phi);
    if (kb.cols()) out.inclusion[mk] = std::move(kb);
  }
  out.kernel = submodule(pm, out.inclusion);
  return out;
}

std::vector<Support> resolution_tops(const WbModule& n, int max_r) {
  std::vector<Support> tops;
  WbModule cur = n;
  for (int r = 0; r <= max_r; ++r) {
    tops.push_back(top(cur));
    if (cur.underlying.is_zero() || r == max_r) break;
    cur = projective_cover(cur).kernel;
  }
  return tops;
}

namespace {

HomologyTable from_tops(const std::vector<Support>& tops, int P, int Qn, int sign) {
  HomologyTable t;
  for (int p = 0; p <= P; ++p)
    for (int q = 0; q <= Qn; ++q)
      for (size_t r = 0; r < tops.size(); ++r) {
        auto it = tops[r].find({p, q});
        HomologyEntry e;
        e.p = p, e.q = q, e.degree = q + sign * static_cast<int>(r), e.weight = p - q;
        e.dim = it == tops[r].end() ? 0 : it->second;
        if (e.dim) t.set(e);
      }
  return t;
}

}  // namespace

HomologyTable tor_oracle(const WbModule& m) {
  int max_r = std::min(m.max_m(), m.max_n());
  return from_tops(resolution_tops(m, max_r), m.max_m(), m.max_n(), +1);
}

HomologyTable ext_oracle(const WbModule& m) {
  int max_r = std::min(m.max_m(), m.max_n());
  return from_tops(resolution_tops(dual(m), max_r), m.max_m(), m.max_n(), -1);
}

Report koszulness(bool twisted, int max_m, int max_n) {
  Report rep;
  for (int s = 0; s <= max_m; ++s)
    for (int t = 0; t <= max_n; ++t) {
      WbModule e;
      e.twisted = twisted;
      e.underlying = FbFbModule(max_m, max_n);
      e.underlying.set(s, t, regular_action(s, t));
      auto tops = resolution_tops(e, std::min(s, t) + 1);
      for (size_t r = 0; r < tops.size(); ++r)
        for (const auto& [k, dim] : tops[r])
          if (k != Key{s - static_cast<int>(r), t - static_cast<int>(r)}) {
            std::ostringstream os;
            os << "simple at (" << s << "," << t << "): syzygy " << r << " has top at (" << k.first << ","
               << k.second << ")";
            rep.fail(os.str());
          }
    }
  return rep;
}

}  // namespace wbk
