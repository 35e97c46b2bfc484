#include "wbk/ltfb.hpp"

#include <algorithm>
#include <climits>
#include <functional>

namespace wbk {

namespace {

using Terms = std::map<Monomial, Q>;

std::pair<int, int> key(const Factor& f, int out) { return {f.inputs.empty() ? INT_MAX : f.inputs[0], out}; }

// O-factor output labels in Lambda order.
std::vector<int> lambda_order(const std::vector<Factor>& outs) {
  std::vector<int> ord(outs.size());
  for (size_t i = 0; i < ord.size(); ++i) ord[i] = static_cast<int>(i);
  std::sort(ord.begin(), ord.end(), [&](int a, int b) { return key(outs[a], a) < key(outs[b], b); });
  return ord;
}

// Sign of the permutation rearranging the list `from` into `to` (same ids).
int rearrange_sign(const std::vector<int>& from, const std::vector<int>& to) {
  Perm p(from.size());
  for (size_t i = 0; i < from.size(); ++i)
    p[i] = static_cast<int>(std::find(to.begin(), to.end(), from[i]) - to.begin());
  return perm_sign(p);
}

// Re-express an element whose slots carry `labels` in increasing label order.
std::pair<std::vector<int>, SVec> normalize(const GroupAction& g, const std::vector<int>& labels, SVec v) {
  Perm p = sorting_perm(labels);
  std::vector<int> sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (!is_identity(p)) v = g.apply(0, p, std::move(v));
  return {sorted, std::move(v)};
}

void drop_input(Monomial& mono, int x) {
  auto fix = [x](Factor& f) {
    f.inputs.erase(std::remove(f.inputs.begin(), f.inputs.end(), x), f.inputs.end());
    for (int& l : f.inputs)
      if (l > x) --l;
  };
  for (auto& f : mono.outs) fix(f);
  for (auto& f : mono.wheels) fix(f);
}

void canonical(Monomial& mono) {
  std::vector<Factor> keep;
  for (auto& f : mono.wheels) {
    if (f.inputs.empty()) mono.closed.push_back(f.elem);
    else keep.push_back(std::move(f));
  }
  mono.wheels = std::move(keep);
  std::sort(mono.wheels.begin(), mono.wheels.end());
  std::sort(mono.closed.begin(), mono.closed.end());
}

}  // namespace

int lambda_sign(const Monomial& mono) {
  std::vector<int> natural(mono.outs.size());
  for (size_t i = 0; i < natural.size(); ++i) natural[i] = static_cast<int>(i);
  return rearrange_sign(natural, lambda_order(mono.outs));
}

FactorModel::FactorModel(const TruncatedOperad& o, int max_m, int max_n, int max_factors)
    : o_(o), w_(wheeled_component(o)), max_m_(max_m), max_n_(max_n),
      max_f_(max_factors < 0 ? std::max(max_m, max_n) : max_factors) {
  int N = o.max_arity;
  for (int m = 0; m <= max_m; ++m)
    for (int n = 0; n <= max_n; ++n) {
      auto& out = basis_[{m, n}];
      if (n > max_f_) continue;
      // owner[l] < n: O-factor; owner[l] >= n: wheel block owner[l]-n
      std::vector<int> owner(m);
      std::function<void(int, int)> assign = [&](int l, int blocks) {
        if (n + blocks > max_f_) return;
        if (l < m) {
          for (int c = 0; c < n + blocks + 1; ++c) {
            owner[l] = c;
            assign(l + 1, std::max(blocks, c - n + 1));
          }
          return;
        }
        Monomial shape;
        shape.outs.resize(n);
        shape.wheels.resize(blocks);
        for (int x = 0; x < m; ++x) {
          if (owner[x] < n) shape.outs[owner[x]].inputs.push_back(x);
          else shape.wheels[owner[x] - n].inputs.push_back(x);
        }
        for (const auto& f : shape.outs)
          if (static_cast<int>(f.inputs.size()) > N || o.dim(static_cast<int>(f.inputs.size())) == 0) return;
        for (const auto& f : shape.wheels)
          if (w_.dim(static_cast<int>(f.inputs.size())) == 0) return;
        // choose elements factor by factor, then closed wheels
        std::vector<Factor*> slots;
        for (auto& f : shape.outs) slots.push_back(&f);
        for (auto& f : shape.wheels) slots.push_back(&f);
        int free = max_f_ - n - blocks;
        std::function<void(size_t)> choose = [&](size_t s) {
          if (s < slots.size()) {
            int k = static_cast<int>(slots[s]->inputs.size());
            int d = s < static_cast<size_t>(n) ? o.dim(k) : w_.dim(k);
            for (int e = 0; e < d; ++e) {
              slots[s]->elem = e;
              choose(s + 1);
            }
            return;
          }
          int d0 = w_.dim(0);
          std::vector<int> closed;
          std::function<void(int)> multiset = [&](int lo) {
            out.push_back(shape);
            out.back().closed = closed;
            if (static_cast<int>(closed.size()) >= free) return;
            for (int e = lo; e < d0; ++e) {
              closed.push_back(e);
              multiset(e);
              closed.pop_back();
            }
          };
          multiset(0);
        };
        choose(0);
      };
      assign(0, 0);
      auto& idx = index_[{m, n}];
      for (size_t i = 0; i < out.size(); ++i) idx.emplace(out[i], static_cast<int>(i));
    }
}

const std::vector<Monomial>& FactorModel::basis(int m, int n) const {
  static const std::vector<Monomial> empty;
  auto it = basis_.find({m, n});
  return it == basis_.end() ? empty : it->second;
}

int FactorModel::index(int m, int n, const Monomial& mono) const {
  auto it = index_.find({m, n});
  if (it == index_.end()) return -1;
  auto jt = it->second.find(mono);
  return jt == it->second.end() ? -1 : jt->second;
}

SVec FactorModel::permute(int m, int n, int side, int j, int col, bool twisted) const {
  const Monomial& src = basis(m, n)[col];
  Monomial mono = src;
  int sign = 1;
  std::vector<int> before = lambda_order(src.outs);
  // ids of the O-factors after the move, indexed by new output label
  std::vector<int> id(n);
  for (int i = 0; i < n; ++i) id[i] = i;
  // the factor (O or wheel) holding both labels picks up a slot permutation
  const GroupAction* group = nullptr;
  Factor* hit = nullptr;
  if (side == 1) {
    std::swap(mono.outs[j], mono.outs[j + 1]);
    std::swap(id[j], id[j + 1]);
  } else {
    auto relabel = [&](Factor& f, const GroupAction& g) {
      bool a = false, b = false;
      for (int& l : f.inputs) {
        if (l == j) l = j + 1, a = true;
        else if (l == j + 1) l = j, b = true;
      }
      if (a && b) {
        group = &g;
        hit = &f;
      } else {
        std::sort(f.inputs.begin(), f.inputs.end());
      }
    };
    for (auto& f : mono.outs) relabel(f, o_.arity[f.inputs.size()]);
    for (auto& f : mono.wheels) relabel(f, w_.arity[f.inputs.size()]);
  }
  std::vector<Factor> outs_after = mono.outs;
  if (twisted) {
    std::vector<int> after = lambda_order(outs_after);
    for (int& a : after) a = id[a];
    sign = rearrange_sign(before, after);
  }
  SVec out;
  if (!hit) {
    canonical(mono);
    out.emplace_back(index(m, n, mono), Q(sign));
    return out;
  }
  auto [labels, v] = normalize(*group, hit->inputs, unit_vec(hit->elem));
  hit->inputs = labels;
  for (const auto& [e, c] : v) {
    hit->elem = e;
    Monomial t = mono;
    canonical(t);
    int k = index(m, n, t);
    if (k < 0) throw std::logic_error("permute: monomial outside basis");
    axpy(out, c * sign, unit_vec(k));
  }
  return out;
}

SVec FactorModel::contract(int m, int n, int x, int y, int col, bool twisted) const {
  const Monomial& src = basis(m, n)[col];
  int x0 = x - 1, y0 = y - 1;
  const Factor& A = src.outs[y0];
  int kA = static_cast<int>(A.inputs.size());
  std::vector<int> ord = lambda_order(src.outs);
  int iA = static_cast<int>(std::find(ord.begin(), ord.end(), y0) - ord.begin());
  Terms terms;
  auto add = [&](Monomial t, const Q& c) {
    canonical(t);
    terms[t] += c;
  };

  auto owner_of = [&](const std::vector<Factor>& fs) {
    for (size_t i = 0; i < fs.size(); ++i)
      if (std::binary_search(fs[i].inputs.begin(), fs[i].inputs.end(), x0)) return static_cast<int>(i);
    return -1;
  };
  int b = owner_of(src.outs);
  int wi = owner_of(src.wheels);

  if (b == y0) {
    // pi: close the loop of A at x, marked slot moved to the end
    int p = static_cast<int>(std::find(A.inputs.begin(), A.inputs.end(), x0) - A.inputs.begin());
    Perm rot(kA);
    for (int i = 0; i < kA; ++i) rot[i] = i < p ? i : (i == p ? kA - 1 : i - 1);
    SVec v = o_.arity[kA].apply(0, rot, unit_vec(A.elem));
    SVec wv = w_.projection(kA - 1).apply(v);
    int sign = twisted && iA % 2 ? -1 : 1;
    for (const auto& [e, c] : wv) {
      Monomial t = src;
      Factor wf{A.inputs, e};
      t.outs.erase(t.outs.begin() + y0);
      t.wheels.push_back(wf);
      drop_input(t, x0);
      add(std::move(t), c * sign);
    }
  } else if (b >= 0) {
    // mu: plug A into input x of B
    const Factor& B = src.outs[b];
    int kB = static_cast<int>(B.inputs.size());
    int p = static_cast<int>(std::find(B.inputs.begin(), B.inputs.end(), x0) - B.inputs.begin());
    SVec v = o_.compose(kB, p + 1, kA, B.elem, A.elem);
    std::vector<int> labels(B.inputs.begin(), B.inputs.begin() + p);
    labels.insert(labels.end(), A.inputs.begin(), A.inputs.end());
    labels.insert(labels.end(), B.inputs.begin() + p + 1, B.inputs.end());
    int kC = kB + kA - 1;
    int sign = 1;
    if (twisted) {
      std::vector<int> front{y0, b};
      for (int i : ord)
        if (i != b && i != y0) front.push_back(i);
      sign = rearrange_sign(ord, front);
      // [C, rest] into Lambda order of the result; C keeps B's output label
      std::vector<std::pair<int, int>> keys;
      Factor C{labels, 0};
      std::sort(C.inputs.begin(), C.inputs.end());
      keys.push_back(key(C, b));
      for (size_t i = 2; i < front.size(); ++i) keys.push_back(key(src.outs[front[i]], front[i]));
      sign *= perm_sign(sorting_perm(keys));
    }
    if (kC <= o_.max_arity && !v.empty()) {
      auto [sorted, nv] = normalize(o_.arity[kC], labels, std::move(v));
      for (const auto& [e, c] : nv) {
        Monomial t = src;
        t.outs[b] = Factor{sorted, e};
        t.outs.erase(t.outs.begin() + y0);
        drop_input(t, x0);
        add(std::move(t), c * sign);
      }
    }
  } else if (wi >= 0) {
    // alpha: plug A into input x of a wheel
    const Factor& W = src.wheels[wi];
    int kW = static_cast<int>(W.inputs.size());
    int p = static_cast<int>(std::find(W.inputs.begin(), W.inputs.end(), x0) - W.inputs.begin());
    int k = kW + kA;  // arity of the lifted composite, marked slot last
    if (k <= o_.max_arity) {
      SVec v = o_.compose_vec(kW + 1, p + 1, kA, w_.lift(kW, W.elem), unit_vec(A.elem));
      std::vector<int> labels(W.inputs.begin(), W.inputs.begin() + p);
      labels.insert(labels.end(), A.inputs.begin(), A.inputs.end());
      labels.insert(labels.end(), W.inputs.begin() + p + 1, W.inputs.end());
      Perm srt = sorting_perm(labels);
      srt.push_back(k - 1);
      if (!is_identity(srt)) v = o_.arity[k].apply(0, srt, std::move(v));
      std::sort(labels.begin(), labels.end());
      SVec wv = w_.projection(k - 1).apply(v);
      int sign = twisted && iA % 2 ? -1 : 1;
      for (const auto& [e, c] : wv) {
        Monomial t = src;
        t.wheels[wi] = Factor{labels, e};
        t.outs.erase(t.outs.begin() + y0);
        drop_input(t, x0);
        add(std::move(t), c * sign);
      }
    }
  } else {
    throw std::logic_error("contract: input label has no owner");
  }
  SVec out;
  for (const auto& [t, c] : terms) {
    if (c == 0) continue;
    int k = index(m - 1, n - 1, t);
    if (k < 0) throw TruncationError("contraction leaves the factor model at (" + std::to_string(m - 1) + "," +
                                     std::to_string(n - 1) + ")");
    axpy(out, c, unit_vec(k));
  }
  return out;
}

WbModule FactorModel::build(bool twisted) const {
  WbModule mod;
  mod.twisted = twisted;
  mod.dir = Direction::Down;
  mod.underlying = FbFbModule(max_m_, max_n_);
  for (int m = 0; m <= max_m_; ++m)
    for (int n = 0; n <= max_n_; ++n) {
      int d = static_cast<int>(basis(m, n).size());
      if (!d) continue;
      std::vector<Matrix> gens;
      for (int side = 0; side < 2; ++side)
        for (int j = 0; j + 1 < (side ? n : m); ++j) {
          Matrix g(d, d);
          for (int c = 0; c < d; ++c) g.col(c) = permute(m, n, side, j, c, twisted);
          gens.push_back(std::move(g));
        }
      mod.underlying.set(m, n, GroupAction(d, {m, n}, std::move(gens)));
    }
  for (int m = 1; m <= max_m_; ++m)
    for (int n = 1; n <= max_n_; ++n) {
      int d = static_cast<int>(basis(m, n).size());
      int d1 = static_cast<int>(basis(m - 1, n - 1).size());
      if (!d || !d1) continue;
      for (auto [x, y] : pair1(m, n)) {
        Matrix a(d1, d);
        for (int c = 0; c < d; ++c) a.col(c) = contract(m, n, x, y, c, twisted);
        mod.set_map(m, n, x, y, std::move(a));
      }
    }
  return mod;
}

WbModule build_ltfb(const TruncatedOperad& o, int max_m, int max_n, int max_factors) {
  return FactorModel(o, max_m, max_n, max_factors).build(true);
}

WbModule build_stfb(const TruncatedOperad& o, int max_m, int max_n, int max_factors) {
  return FactorModel(o, max_m, max_n, max_factors).build(false);
}

WbModule build_lambda(const TruncatedOperad& o, int max_m, int max_n, int max_factors) {
  FactorModel fm(o, max_m, max_n, max_factors);
  WbModule full = fm.build(true);
  // kept[(m,n)]: indices of wheel-free monomials
  std::map<std::pair<int, int>, std::vector<int>> kept;
  for (int m = 0; m <= max_m; ++m)
    for (int n = 0; n <= max_n; ++n) {
      const auto& b = fm.basis(m, n);
      for (size_t i = 0; i < b.size(); ++i)
        if (b[i].wheels.empty() && b[i].closed.empty()) kept[{m, n}].push_back(static_cast<int>(i));
    }
  auto restrict = [&](const Matrix& a, const std::vector<int>& rows, const std::vector<int>& cols) {
    std::map<int, int> pos;
    for (size_t i = 0; i < rows.size(); ++i) pos[rows[i]] = static_cast<int>(i);
    Matrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
    for (size_t j = 0; j < cols.size(); ++j)
      for (const auto& [i, v] : a.col(cols[j])) {
        auto it = pos.find(i);
        if (it != pos.end()) r.set(it->second, static_cast<int>(j), v);
      }
    return r;
  };
  WbModule mod;
  mod.twisted = true;
  mod.dir = Direction::Down;
  mod.underlying = FbFbModule(max_m, max_n);
  for (const auto& [mn, g] : full.underlying.spaces()) {
    const auto& k = kept[mn];
    if (k.empty()) continue;
    std::vector<Matrix> gens;
    for (const auto& h : g.gens()) gens.push_back(restrict(h, k, k));
    mod.underlying.set(mn.first, mn.second, GroupAction(static_cast<int>(k.size()), g.factors(), std::move(gens)));
  }
  for (const auto& [key, a] : full.structure) {
    auto [m, n, x, y] = key;
    const auto& src = kept[{m, n}];
    const auto& dst = kept[{m - 1, n - 1}];
    if (src.empty() || dst.empty()) continue;
    mod.set_map(m, n, x, y, restrict(a, dst, src));
  }
  return mod;
}

}  // namespace wbk
