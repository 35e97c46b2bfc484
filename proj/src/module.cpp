#include "wbk/module.hpp"

#include <sstream>

namespace wbk {

Matrix WbModule::map(int m, int n, int x, int y) const {
  auto it = structure.find({m, n, x, y});
  if (it != structure.end()) return it->second;
  if (dir == Direction::Down) return Matrix(dim(m - 1, n - 1), dim(m, n));
  return Matrix(dim(m, n), dim(m - 1, n - 1));
}

void WbModule::set_map(int m, int n, int x, int y, Matrix a) {
  if (a.is_zero()) {
    structure.erase({m, n, x, y});
    int r = dir == Direction::Down ? dim(m - 1, n - 1) : dim(m, n);
    int c = dir == Direction::Down ? dim(m, n) : dim(m - 1, n - 1);
    if (a.rows() != r || a.cols() != c) throw std::invalid_argument("structure map has wrong shape");
    return;
  }
  structure.insert_or_assign({m, n, x, y}, std::move(a));
}

SVec apply_perms(const FbFbModule& f, int m, int n, const Perm& sigma, const Perm& tau, SVec v) {
  const GroupAction* g = f.at(m, n);
  if (!g) return {};
  v = g->apply(1, tau, std::move(v));
  return g->apply(0, sigma, std::move(v));
}

namespace {

std::string pos(int m, int n, int x, int y) {
  std::ostringstream os;
  os << "(" << m << "," << n << ") pair (" << x << "," << y << ")";
  return os.str();
}

// Relabeled restriction of the adjacent transposition s_j (1-based j swaps j, j+1)
// to the complement of x: returns 0 for identity, else the 1-based generator index.
int restrict_gen(int j, int x) {
  if (x == j || x == j + 1) return 0;
  return x < j ? j - 1 : j;
}

Report validate_down(const WbModule& mod) {
  Report r;
  const FbFbModule& u = mod.underlying;
  int eps = mod.twisted ? -1 : 1;
  for (const auto& [key, a] : mod.structure) {
    auto [m, n, x, y] = key;
    if (m < 1 || n < 1 || x < 1 || x > m || y < 1 || y > n) {
      r.fail("structure map with invalid index at " + pos(m, n, x, y));
      return r;
    }
    if (a.rows() != u.dim(m - 1, n - 1) || a.cols() != u.dim(m, n)) {
      r.fail("dimension mismatch at " + pos(m, n, x, y));
      return r;
    }
  }
  for (const auto& [k, g] : u.spaces()) {
    auto [m, n] = k;
    if (m < 1 || n < 1) continue;
    const GroupAction* low = u.at(m - 1, n - 1);
    // equivariance on generators of both factors
    for (int side = 0; side < 2; ++side) {
      int len = side == 0 ? m : n;
      for (int j = 1; j < len; ++j) {
        const Matrix& s = g.gen(side, j - 1);
        for (auto [x, y] : pair1(m, n)) {
          int sx = x, sy = y;
          int& moved = side == 0 ? sx : sy;
          if (moved == j) moved = j + 1;
          else if (moved == j + 1) moved = j;
          Matrix lhs = mod.map(m, n, sx, sy) * s;
          Matrix c = mod.map(m, n, x, y);
          int rg = restrict_gen(j, side == 0 ? x : y);
          Matrix rhs = (rg && low) ? low->gen(side, rg - 1) * c : c;
          if (!(lhs == rhs)) {
            r.fail("equivariance fails at " + pos(m, n, x, y) + " for generator " + std::to_string(j) +
                   (side == 0 ? " of S_m" : " of S_n"));
            return r;
          }
        }
      }
    }
    if (m < 2 || n < 2) continue;
    for (auto [x, y] : pair1(m, n))
      for (auto [x2, y2] : pair1(m, n)) {
        if (x2 == x || y2 == y) continue;
        if (std::make_pair(x2, y2) < std::make_pair(x, y)) continue;
        Matrix a = mod.map(m - 1, n - 1, drop_label(x2, x), drop_label(y2, y)) * mod.map(m, n, x, y);
        Matrix b = mod.map(m - 1, n - 1, drop_label(x, x2), drop_label(y, y2)) * mod.map(m, n, x2, y2);
        if (!(a == Q(eps) * b)) {
          r.fail("quadratic relation fails at " + pos(m, n, x, y) + " with pair (" + std::to_string(x2) + "," +
                 std::to_string(y2) + ")");
          return r;
        }
      }
  }
  return r;
}

}  // namespace

WbModule dual(const WbModule& m) {
  WbModule d;
  d.twisted = m.twisted;
  d.dir = m.dir == Direction::Down ? Direction::Up : Direction::Down;
  d.underlying = FbFbModule(m.max_m(), m.max_n());
  for (const auto& [k, g] : m.underlying.spaces()) {
    std::vector<Matrix> gens;
    for (const auto& s : g.gens()) gens.push_back(s.transpose());
    d.underlying.set(k.first, k.second, GroupAction(g.dim(), g.factors(), std::move(gens), false));
  }
  for (const auto& [k, a] : m.structure) d.structure.emplace(k, a.transpose());
  return d;
}

Report validate(const WbModule& m) {
  if (m.dir == Direction::Down) return validate_down(m);
  return validate_down(dual(m));
}

SVec act(const WbModule& mod, const SignedMorphism& sf, const SVec& v) {
  const WalledMorphism& f = sf.f;
  bool down = mod.dir == Direction::Down;
  if (sf.opposite != down) throw std::invalid_argument("act: morphism direction does not match module");
  if (f.degree() == 0) {
    auto [s, t] = to_perms(f);
    if (down) return scaled(apply_perms(mod.underlying, f.p, f.q, inverse(s), inverse(t), v), sf.sign);
    return scaled(apply_perms(mod.underlying, f.m, f.n, s, t, v), sf.sign);
  }
  IotaSplit sp = split_last_pair(f, mod.twisted);
  SignedMorphism rest{sp.rest, sf.sign * sp.sign, sf.opposite};
  if (down) {
    SVec w = mod.map(f.p, f.q, sp.x, sp.y).apply(v);
    return act(mod, rest, w);
  }
  SVec w = act(mod, rest, v);
  return mod.map(f.p, f.q, sp.x, sp.y).apply(w);
}

Matrix act_matrix(const WbModule& mod, const SignedMorphism& f) {
  bool down = mod.dir == Direction::Down;
  int src = down ? mod.dim(f.f.p, f.f.q) : mod.dim(f.f.m, f.f.n);
  int tgt = down ? mod.dim(f.f.m, f.f.n) : mod.dim(f.f.p, f.f.q);
  Matrix a(tgt, src);
  for (int j = 0; j < src; ++j) a.col(j) = act(mod, f, unit_vec(j));
  return a;
}

WbModule sign_twist_module(const WbModule& m) {
  WbModule t;
  t.twisted = !m.twisted;
  t.dir = m.dir;
  t.underlying = sign_twist(m.underlying, TwistSide::Right);
  for (const auto& [k, a] : m.structure) {
    int y = std::get<3>(k);
    t.structure.emplace(k, (y % 2 == 1) ? a : Q(-1) * a);
  }
  return t;
}



WbModule representable(Direction dir, int s, int t, bool twisted, int max_m, int max_n) {
  WbModule mod;
  mod.twisted = twisted;
  mod.dir = dir;
  mod.underlying = FbFbModule(max_m, max_n);
  bool down = dir == Direction::Down;
  auto basis = [&](int m, int n) -> const std::vector<WalledMorphism>& {
    return down ? hom_basis_cached(m, n, s, t) : hom_basis_cached(s, t, m, n);
  };
  // composite as a column in the basis of its hom set
  auto column = [&](const SignedMorphism& h) { return SVec{{hom_index(h.f), Q(h.sign)}}; };
  for (int m = 0; m <= max_m; ++m)
    for (int n = 0; n <= max_n; ++n) {
      const auto& b = basis(m, n);
      if (b.empty()) continue;
      int d = static_cast<int>(b.size());
      std::vector<Matrix> gens;
      for (int side = 0; side < 2; ++side)
        for (int j = 0; j + 1 < (side == 0 ? m : n); ++j) {
          Perm sm = identity_perm(m), tn = identity_perm(n);
          std::swap(side == 0 ? sm[j] : tn[j], side == 0 ? sm[j + 1] : tn[j + 1]);
          WalledMorphism rho = from_perms(sm, tn);
          Matrix g(d, d);
          for (int i = 0; i < d; ++i)
            g.col(i) = column(down ? compose(b[i], rho, twisted) : compose(rho, b[i], twisted));
          gens.push_back(std::move(g));
        }
      mod.underlying.set(m, n, GroupAction(d, {m, n}, std::move(gens)));
    }
  for (int m = 1; m <= max_m; ++m)
    for (int n = 1; n <= max_n; ++n) {
      const auto& hi = basis(m, n);
      const auto& lo = basis(m - 1, n - 1);
      if (hi.empty() || lo.empty()) continue;
      for (auto [x, y] : pair1(m, n)) {
        WalledMorphism io = iota(x, y, m, n);
        if (down) {
          Matrix a(static_cast<int>(lo.size()), static_cast<int>(hi.size()));
          for (size_t i = 0; i < hi.size(); ++i) a.col(static_cast<int>(i)) = column(compose(hi[i], io, twisted));
          mod.set_map(m, n, x, y, std::move(a));
        } else {
          Matrix a(static_cast<int>(hi.size()), static_cast<int>(lo.size()));
          for (size_t i = 0; i < lo.size(); ++i) a.col(static_cast<int>(i)) = column(compose(io, lo[i], twisted));
          mod.set_map(m, n, x, y, std::move(a));
        }
      }
    }
  return mod;
}

}  // namespace wbk
