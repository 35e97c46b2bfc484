#include "wbk/schur.hpp"

#include "wbk/ltfb.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace wbk {

namespace {

long long ipow(int b, int e) {
  long long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

// Sorted words of length len over {0..d-1}.
std::vector<std::vector<int>> multisets(int len, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int c = lo; c < d; ++c) {
      cur.push_back(c);
      rec(c);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

// Coinvariants of g (factors {m, n} or {k}) under the stabilizers of the sorted
// words w (first factor) and u (second factor).
// Quotient by (s - 1) e_j over the block generators; sparse for the large
// permutation-like actions met here.
Coinvariants young_coinvariants(const GroupAction& g, const std::vector<int>& w, const std::vector<int>& u) {
  std::vector<SVec> rel;
  auto blocks = [&](const std::vector<int>& word, int side) {
    for (size_t t = 0; t + 1 < word.size(); ++t) {
      if (word[t + 1] != word[t]) continue;
      const Matrix& s = g.gen(side, static_cast<int>(t));
      for (int j = 0; j < g.dim(); ++j) {
        SVec v = s.col(j);
        axpy(v, Q(-1), unit_vec(j));
        if (!v.empty()) rel.push_back(std::move(v));
      }
    }
  };
  blocks(w, 0);
  blocks(u, 1);
  return quotient_by_span(g.dim(), rel);
}

std::vector<int> erase_at(std::vector<int> v, int i) {
  v.erase(v.begin() + i);
  return v;
}

std::vector<int> splice(const std::vector<int>& w, int s, const std::vector<int>& ins) {
  std::vector<int> out(w.begin(), w.begin() + s);
  out.insert(out.end(), ins.begin(), ins.end());
  out.insert(out.end(), w.begin() + s + 1, w.end());
  return out;
}

// A(k) (x)_{S_k} V^{(x)k} for k in [0, max_k], A(k) = arity[k].
class FreeAlgebra {
 public:
  struct Elem {
    int k;
    std::vector<int> word;
    int j;
  };

  FreeAlgebra(const std::vector<GroupAction>& arity, int d, int min_k, int max_k) : arity_(arity) {
    for (int k = min_k; k <= max_k && k < static_cast<int>(arity.size()); ++k) {
      if (!arity[k].dim()) continue;
      for (const auto& w : multisets(k, d)) {
        Coinvariants c = young_coinvariants(arity[k], w, {});
        for (int j = 0; j < c.dim(); ++j) {
          index_[{k, w, j}] = static_cast<int>(basis_.size());
          basis_.push_back({k, w, j});
        }
        coinv_.emplace(std::make_pair(k, w), std::move(c));
      }
    }
  }

  int size() const { return static_cast<int>(basis_.size()); }
  const Elem& elem(int i) const { return basis_[i]; }
  // Basis element of A(k) representing elem i.
  SVec lift(int i) const {
    const Elem& e = basis_[i];
    return unit_vec(coinv_.at({e.k, e.word}).lift_index[e.j]);
  }
  // Class of o (x) word; zero when the arity is outside the range.
  SVec reduce(int k, SVec o, const std::vector<int>& word) const {
    if (o.empty()) return {};
    Perm rho = sorting_perm(word);
    std::vector<int> sorted = word;
    std::sort(sorted.begin(), sorted.end());
    auto it = coinv_.find({k, sorted});
    if (it == coinv_.end()) return {};
    if (!is_identity(rho)) o = arity_[k].apply(0, rho, std::move(o));
    SVec out;
    for (const auto& [j, c] : it->second.projection.apply(o)) axpy(out, c, unit_vec(index_.at({k, sorted, j})));
    return out;
  }

 private:
  const std::vector<GroupAction>& arity_;
  std::vector<Elem> basis_;
  std::map<std::tuple<int, std::vector<int>, int>, int> index_;
  std::map<std::pair<int, std::vector<int>>, Coinvariants> coinv_;
};

}  // namespace

int MixedTensors::dim(int m, int n) const { return static_cast<int>(ipow(d_, m + n)); }

std::vector<int> MixedTensors::word(int m, int n, int index) const {
  std::vector<int> wu(m + n);
  for (int i = m + n - 1; i >= 0; --i) {
    wu[i] = index % d_;
    index /= d_;
  }
  return wu;
}

int MixedTensors::index(int, int, const std::vector<int>& wu) const {
  int idx = 0;
  for (int c : wu) idx = idx * d_ + c;
  return idx;
}

GroupAction MixedTensors::action(int m, int n) const {
  int dm = dim(m, n);
  std::vector<Matrix> gens;
  for (int side = 0; side < 2; ++side)
    for (int j = 0; j + 1 < (side ? n : m); ++j) {
      Matrix g(dm, dm);
      int off = side ? m : 0;
      for (int i = 0; i < dm; ++i) {
        auto wu = word(m, n, i);
        std::swap(wu[off + j], wu[off + j + 1]);
        g.set(index(m, n, wu), i, Q(1));
      }
      gens.push_back(std::move(g));
    }
  return GroupAction(dm, {m, n}, std::move(gens));
}

Matrix MixedTensors::contraction(int m, int n, int x, int y) const {
  Matrix c(dim(m - 1, n - 1), dim(m, n));
  for (int i = 0; i < dim(m, n); ++i) {
    auto wu = word(m, n, i);
    if (wu[x - 1] != wu[m + y - 1]) continue;
    wu.erase(wu.begin() + m + y - 1);
    wu.erase(wu.begin() + x - 1);
    c.set(index(m - 1, n - 1, wu), i, Q(1));
  }
  return c;
}

WbModule mixed_tensor_module(int d, int max_m, int max_n) {
  MixedTensors t(d);
  WbModule mod;
  mod.twisted = false;
  mod.dir = Direction::Down;
  mod.underlying = FbFbModule(max_m, max_n);
  for (int m = 0; m <= max_m; ++m)
    for (int n = 0; n <= max_n; ++n)
      if (t.dim(m, n)) mod.underlying.set(m, n, t.action(m, n));
  for (int m = 1; m <= max_m; ++m)
    for (int n = 1; n <= max_n; ++n)
      if (t.dim(m, n))
        for (auto [x, y] : pair1(m, n)) mod.set_map(m, n, x, y, t.contraction(m, n, x, y));
  return mod;
}

std::map<Bideg, int> schur_apply(const FbFbModule& f, int d) {
  std::map<Bideg, int> out;
  for (const auto& [mn, g] : f.spaces()) {
    auto [m, n] = mn;
    int total = 0;
    for (const auto& w : multisets(m, d))
      for (const auto& u : multisets(n, d)) total += young_coinvariants(g, w, u).dim();
    if (total) out[mn] = total;
  }
  return out;
}

std::map<int, int> by_weight(const std::map<Bideg, int>& dims) {
  std::map<int, int> out;
  for (const auto& [mn, k] : dims) out[mn.first - mn.second] += k;
  return out;
}

std::map<int, ChainComplex> schur_koszul(const WbModule& mod, int d) {
  struct Cell {
    std::vector<int> w, u;
    int j;
  };
  struct Term {
    std::vector<Cell> cells;
    std::map<std::pair<std::vector<int>, std::vector<int>>, Coinvariants> coinv;
    std::map<std::tuple<std::vector<int>, std::vector<int>, int>, int> index;
  };
  std::map<Bideg, Term> terms;
  std::map<int, ChainComplex> out;
  for (const auto& [mn, g] : mod.underlying.spaces()) {
    auto [m, n] = mn;
    Term& t = terms[mn];
    for (const auto& w : multisets(m, d))
      for (const auto& u : multisets(n, d)) {
        Coinvariants c = young_coinvariants(g, w, u);
        for (int j = 0; j < c.dim(); ++j) {
          t.index[{w, u, j}] = static_cast<int>(t.cells.size());
          t.cells.push_back({w, u, j});
        }
        t.coinv.emplace(std::make_pair(w, u), std::move(c));
      }
    ChainComplex& c = out[m - n];
    c.dim[n] = static_cast<int>(t.cells.size());
    c.complete[n] = true;
  }
  for (auto& [mn, t] : terms) {
    auto [m, n] = mn;
    auto lo = terms.find({m - 1, n - 1});
    if (t.cells.empty() || lo == terms.end() || lo->second.cells.empty()) continue;
    const Term& s = lo->second;
    Matrix dm(static_cast<int>(s.cells.size()), static_cast<int>(t.cells.size()));
    for (size_t ci = 0; ci < t.cells.size(); ++ci) {
      const Cell& cell = t.cells[ci];
      SVec v = unit_vec(t.coinv.at({cell.w, cell.u}).lift_index[cell.j]);
      SVec col;
      for (int x = 0; x < m; ++x)
        for (int y = 0; y < n; ++y) {
          if (cell.w[x] != cell.u[y]) continue;
          SVec cv = mod.map(m, n, x + 1, y + 1).apply(v);
          if (cv.empty()) continue;
          auto w2 = erase_at(cell.w, x), u2 = erase_at(cell.u, y);
          for (const auto& [j, c] : s.coinv.at({w2, u2}).projection.apply(cv))
            axpy(col, c, unit_vec(s.index.at({w2, u2, j})));
        }
      dm.col(static_cast<int>(ci)) = std::move(col);
    }
    out[m - n].d[n] = std::move(dm);
  }
  for (auto& [w, c] : out) {
    c.p = w;
    c.q = 0;
  }
  return out;
}

// ---------------------------------------------------------------------------
// DG Lie algebra

SVec TruncatedDgLie::bracket_of(const SVec& a, const SVec& b) const {
  SVec out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : b) {
      if (i == j) continue;
      auto it = bracket.find({std::min(i, j), std::max(i, j)});
      if (it == bracket.end()) continue;
      axpy(out, i < j ? Q(x * y) : Q(-x * y), it->second);
    }
  return out;
}

SVec TruncatedDgLie::act(const SVec& a, const SVec& w) const {
  SVec out;
  for (const auto& [i, x] : a)
    for (const auto& [j, y] : w) {
      auto it = action.find({i, j});
      if (it != action.end()) axpy(out, x * y, it->second);
    }
  return out;
}

SVec TruncatedDgLie::div(const SVec& a) const {
  SVec out;
  for (const auto& [i, x] : a) axpy(out, x, divergence[i]);
  return out;
}

Report TruncatedDgLie::check_jacobi() const {
  Report r;
  int n = ders();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (der_weight[i] + der_weight[j] + der_weight[k] > max_weight) continue;
        SVec a = unit_vec(i), b = unit_vec(j), c = unit_vec(k);
        SVec s = bracket_of(bracket_of(a, b), c);
        s = add(s, bracket_of(bracket_of(b, c), a));
        s = add(s, bracket_of(bracket_of(c, a), b));
        if (!s.empty()) {
          r.fail("Jacobi identity fails for derivations " + std::to_string(i) + ", " + std::to_string(j) + ", " +
                 std::to_string(k));
          return r;
        }
      }
  return r;
}

Report TruncatedDgLie::check_module() const {
  Report r;
  for (int i = 0; i < ders(); ++i)
    for (int j = i + 1; j < ders(); ++j)
      for (int w = 0; w < wheel_elems(); ++w) {
        if (der_weight[i] + der_weight[j] + wheel_weight[w] > max_weight) continue;
        SVec a = unit_vec(i), b = unit_vec(j), x = unit_vec(w);
        SVec lhs = act(bracket_of(a, b), x);
        SVec rhs = add(act(a, act(b, x)), scaled(act(b, act(a, x)), Q(-1)));
        if (!add(lhs, scaled(rhs, Q(-1))).empty()) {
          r.fail("wheel module relation fails for derivations " + std::to_string(i) + ", " + std::to_string(j));
          return r;
        }
      }
  return r;
}

Report TruncatedDgLie::check_cocycle() const {
  Report r;
  for (int i = 0; i < ders(); ++i)
    for (int j = i + 1; j < ders(); ++j) {
      if (der_weight[i] + der_weight[j] > max_weight) continue;
      SVec a = unit_vec(i), b = unit_vec(j);
      SVec lhs = div(bracket_of(a, b));
      SVec rhs = add(act(a, div(b)), scaled(act(b, div(a)), Q(-1)));
      if (!add(lhs, scaled(rhs, Q(-1))).empty()) {
        r.fail("divergence is not a cocycle on derivations " + std::to_string(i) + ", " + std::to_string(j));
        return r;
      }
    }
  return r;
}

TruncatedDgLie build_dglie(const TruncatedOperad& o, int d, int max_weight) {
  if (o.has_arity_zero()) throw std::invalid_argument("build_dglie: arity 0 gives derivations of weight -1");
  WheeledComponent wc = wheeled_component(o);
  FreeAlgebra fo(o.arity, d, 1, std::min(o.max_arity, max_weight + 1));
  FreeAlgebra fw(wc.arity, d, 0, std::min(wc.max_arity, max_weight));
  TruncatedDgLie l;
  l.max_weight = max_weight;
  int nf = fo.size();
  for (int a = 0; a < d; ++a)
    for (int f = 0; f < nf; ++f) l.der_weight.push_back(fo.elem(f).k - 1);
  for (int w = 0; w < fw.size(); ++w) l.wheel_weight.push_back(fw.elem(w).k);
  auto letter = [&](int i) { return i / nf; };
  auto part = [&](int i) { return i % nf; };
  auto as_der = [&](int a, const SVec& v) {
    SVec out;
    for (const auto& [f, c] : v) out.emplace_back(a * nf + f, c);
    return out;
  };
  // x_b^* (x) (E(x_b) with every letter a replaced by D(x_a))
  auto substitute = [&](int i, int j) {
    int a = letter(i), b = letter(j);
    const auto& D = fo.elem(part(i));
    const auto& E = fo.elem(part(j));
    SVec od = fo.lift(part(i)), oe = fo.lift(part(j));
    SVec out;
    for (int s = 0; s < E.k; ++s) {
      if (E.word[s] != a) continue;
      int k = E.k + D.k - 1;
      if (k > o.max_arity) continue;
      SVec c = o.compose_vec(E.k, s + 1, D.k, oe, od);
      axpy(out, Q(1), as_der(b, fo.reduce(k, std::move(c), splice(E.word, s, D.word))));
    }
    return out;
  };
  for (int i = 0; i < l.ders(); ++i)
    for (int j = i + 1; j < l.ders(); ++j) {
      if (l.der_weight[i] + l.der_weight[j] > max_weight) continue;
      SVec br = add(substitute(i, j), scaled(substitute(j, i), Q(-1)));
      if (!br.empty()) l.bracket[{i, j}] = std::move(br);
    }
  for (int i = 0; i < l.ders(); ++i) {
    int a = letter(i);
    const auto& D = fo.elem(part(i));
    SVec od = fo.lift(part(i));
    for (int w = 0; w < fw.size(); ++w) {
      if (l.der_weight[i] + l.wheel_weight[w] > max_weight) continue;
      const auto& Wd = fw.elem(w);
      SVec lifted;
      for (const auto& [e, c] : fw.lift(w)) axpy(lifted, c, wc.lift(Wd.k, e));
      SVec out;
      for (int s = 0; s < Wd.k; ++s) {
        if (Wd.word[s] != a) continue;
        int k = Wd.k + D.k;  // arity of the composite with the marked slot last
        if (k > o.max_arity) continue;
        SVec c = o.compose_vec(Wd.k + 1, s + 1, D.k, lifted, od);
        axpy(out, Q(1), fw.reduce(k - 1, wc.projection(k - 1).apply(c), splice(Wd.word, s, D.word)));
      }
      if (!out.empty()) l.action[{i, w}] = std::move(out);
    }
    SVec dv;
    for (int s = 0; s < D.k; ++s) {
      if (D.word[s] != a) continue;
      Perm rot(D.k);
      for (int t = 0; t < D.k; ++t) rot[t] = t < s ? t : (t == s ? D.k - 1 : t - 1);
      SVec v = o.arity[D.k].apply(0, rot, od);
      axpy(dv, Q(1), fw.reduce(D.k - 1, wc.projection(D.k - 1).apply(v), erase_at(D.word, s)));
    }
    l.divergence.push_back(std::move(dv));
  }
  return l;
}

std::map<int, ChainComplex> ce_complex(const TruncatedDgLie& l, int max_factors, bool wheels) {
  using Key = std::pair<std::vector<int>, std::vector<int>>;
  // blocks[(weight, p)]
  std::map<std::pair<int, int>, std::vector<Key>> blocks;
  std::map<std::pair<int, int>, std::map<Key, int>> index;
  std::vector<int> ders, ws;
  std::function<void(int, int)> pick_wheels = [&](int lo, int weight) {
    int p = static_cast<int>(ders.size());
    auto& b = blocks[{weight, p}];
    index[{weight, p}][{ders, ws}] = static_cast<int>(b.size());
    b.push_back({ders, ws});
    if (!wheels || p + static_cast<int>(ws.size()) >= max_factors) return;
    for (int w = lo; w < l.wheel_elems(); ++w) {
      if (weight + l.wheel_weight[w] > l.max_weight) continue;
      ws.push_back(w);
      pick_wheels(w, weight + l.wheel_weight[w]);
      ws.pop_back();
    }
  };
  std::function<void(int, int)> pick_ders = [&](int lo, int weight) {
    pick_wheels(0, weight);
    if (static_cast<int>(ders.size()) >= max_factors) return;
    for (int i = lo; i < l.ders(); ++i) {
      if (weight + l.der_weight[i] > l.max_weight) continue;
      ders.push_back(i);
      pick_ders(i + 1, weight + l.der_weight[i]);
      ders.pop_back();
    }
  };
  pick_ders(0, 0);

  std::map<int, ChainComplex> out;
  for (const auto& [wp, b] : blocks) {
    ChainComplex& c = out[wp.first];
    c.p = wp.first;
    c.dim[wp.second] = static_cast<int>(b.size());
    c.complete[wp.second] = true;
  }
  for (const auto& [wp, b] : blocks) {
    auto [weight, p] = wp;
    if (p == 0) continue;
    auto lo = index.find({weight, p - 1});
    if (lo == index.end()) continue;
    const auto& target = lo->second;
    Matrix dm(static_cast<int>(target.size()), static_cast<int>(b.size()));
    for (size_t col = 0; col < b.size(); ++col) {
      const auto& [D, f] = b[col];
      SVec v;
      auto emit = [&](std::vector<int> d2, std::vector<int> f2, const Q& c) {
        std::sort(f2.begin(), f2.end());
        auto it = target.find({d2, f2});
        if (it == target.end()) throw std::logic_error("ce_complex: term outside the truncation");
        axpy(v, c, unit_vec(it->second));
      };
      for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j) {
          std::vector<int> rest;
          for (int t = 0; t < p; ++t)
            if (t != i && t != j) rest.push_back(D[t]);
          int sign = (i + j) % 2 ? -1 : 1;
          for (const auto& [c, x] : l.bracket_of(unit_vec(D[i]), unit_vec(D[j]))) {
            if (std::binary_search(rest.begin(), rest.end(), c)) continue;
            auto pos = std::lower_bound(rest.begin(), rest.end(), c) - rest.begin();
            std::vector<int> d2 = rest;
            d2.insert(d2.begin() + pos, c);
            emit(d2, f, x * (pos % 2 ? -sign : sign));
          }
        }
      for (int i = 0; i < p; ++i) {
        std::vector<int> rest = erase_at(D, i);
        Q sign = i % 2 ? 1 : -1;
        for (size_t s = 0; s < f.size(); ++s)
          for (const auto& [c, x] : l.act(unit_vec(D[i]), unit_vec(f[s]))) {
            std::vector<int> f2 = f;
            f2[s] = c;
            emit(rest, f2, sign * x);
          }
        if (wheels)
          for (const auto& [c, x] : l.divergence[D[i]]) {
            std::vector<int> f2 = f;
            f2.push_back(c);
            emit(rest, f2, sign * x);
          }
      }
      dm.col(static_cast<int>(col)) = std::move(v);
    }
    out[weight].d[p] = std::move(dm);
  }
  return out;
}

CeCompareReport ce_compare(const TruncatedOperad& o, int d, int max_weight, int max_factors) {
  CeCompareReport rep;
  TruncatedDgLie l = build_dglie(o, d, max_weight);
  for (const auto& r : {l.check_jacobi(), l.check_module(), l.check_cocycle()})
    if (!r.ok) {
      rep.ok = false;
      rep.failures.push_back(r.message);
    }
  int V = max_factors;
  for (int wheeled = 1; wheeled >= 0; --wheeled) {
    WbModule mod = wheeled ? build_ltfb(o, V + max_weight, V, V) : build_lambda(o, V + max_weight, V, V);
    auto sk = schur_koszul(mod, d);
    auto ce = ce_complex(l, V, wheeled);
    for (int w = 0; w <= max_weight; ++w) {
      std::map<int, int> hs, hc;
      if (sk.count(w)) hs = homology(sk.at(w), "schur_koszul");
      if (ce.count(w)) hc = homology(ce.at(w), "ce_complex");
      for (int p = 0; p <= V; ++p) {
        CeCompareRow row;
        row.wheeled = wheeled;
        row.weight = w, row.degree = p;
        row.schur = hs.count(p) ? hs.at(p) : 0;
        row.ce = hc.count(p) ? hc.at(p) : 0;
        if (row.schur != row.ce) {
          rep.ok = false;
          std::ostringstream os;
          os << (wheeled ? "wheeled" : "non-wheeled") << " weight " << w << " degree " << p << ": schur " << row.schur
             << ", ce " << row.ce;
          rep.failures.push_back(os.str());
        }
        rep.rows.push_back(row);
      }
    }
  }
  return rep;
}

}  // namespace wbk
