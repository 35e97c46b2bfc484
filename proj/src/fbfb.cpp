#include "wbk/fbfb.hpp"

#include <algorithm>
#include <stdexcept>

namespace wbk {

int FbFbModule::dim(int m, int n) const {
  auto it = spaces_.find({m, n});
  return it == spaces_.end() ? 0 : it->second.dim();
}

const GroupAction* FbFbModule::at(int m, int n) const {
  auto it = spaces_.find({m, n});
  return it == spaces_.end() ? nullptr : &it->second;
}

void FbFbModule::set(int m, int n, GroupAction g) {
  if (!in_window(m, n)) throw std::out_of_range("FbFbModule::set outside window");
  if (g.factors() != std::vector<int>{m, n}) throw MalformedAction("space at (m,n) must carry S_m x S_n");
  if (g.dim() == 0) {
    spaces_.erase({m, n});
    return;
  }
  spaces_.insert_or_assign({m, n}, std::move(g));
}

FbFbModule point_module(int m, int n, int max_m, int max_n) {
  FbFbModule f(max_m, max_n);
  f.set(m, n, GroupAction::trivial(1, {m, n}));
  return f;
}

FbFbModule direct_sum(const FbFbModule& a, const FbFbModule& b) {
  FbFbModule s(std::min(a.max_m(), b.max_m()), std::min(a.max_n(), b.max_n()));
  std::map<Bideg, bool> keys;
  for (const auto& [k, v] : a.spaces()) keys[k] = true;
  for (const auto& [k, v] : b.spaces()) keys[k] = true;
  for (const auto& [k, v] : keys) {
    if (!s.in_window(k.first, k.second)) continue;
    const GroupAction* x = a.at(k.first, k.second);
    const GroupAction* y = b.at(k.first, k.second);
    if (!x) { s.set(k.first, k.second, *y); continue; }
    if (!y) { s.set(k.first, k.second, *x); continue; }
    std::vector<Matrix> g;
    for (std::size_t i = 0; i < x->gens().size(); ++i) g.push_back(direct_sum(x->gens()[i], y->gens()[i]));
    s.set(k.first, k.second, GroupAction(x->dim() + y->dim(), x->factors(), std::move(g), false));
  }
  return s;
}

namespace {

std::vector<std::vector<int>> subsets_lex(const std::vector<int>& items) {
  std::vector<std::vector<int>> out;
  int k = static_cast<int>(items.size());
  for (int mask = 0; mask < (1 << k); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < k; ++i)
      if (mask & (1 << i)) s.push_back(items[i]);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

DayBasis::DayBasis(const std::vector<const FbFbModule*>& factors, int m, int n) : f_(factors), m_(m), n_(n) {
  int d = static_cast<int>(f_.size());
  if (d == 0) {
    if (m == 0 && n == 0) {
      elems_.push_back(DayElem{});
      index_.emplace(DayElem{}, 0);
    }
    return;
  }
  DayElem cur;
  cur.in_owner.assign(m, -1);
  cur.out_owner.assign(n, -1);
  cur.dec.assign(d, 0);
  // Nested enumeration: (S_i, T_i) lexicographic, then the factor's basis index.
  auto rec = [&](auto&& self, int level, std::vector<int> rin, std::vector<int> rout) -> void {
    const FbFbModule& fm = *f_[level];
    if (level == d - 1) {
      int dm = fm.dim(static_cast<int>(rin.size()), static_cast<int>(rout.size()));
      for (int x : rin) cur.in_owner[x] = level;
      for (int y : rout) cur.out_owner[y] = level;
      for (int b = 0; b < dm; ++b) {
        cur.dec[level] = b;
        elems_.push_back(cur);
      }
      return;
    }
    auto sin = subsets_lex(rin), sout = subsets_lex(rout);
    for (const auto& s : sin)
      for (const auto& t : sout) {
        int dm = fm.dim(static_cast<int>(s.size()), static_cast<int>(t.size()));
        if (dm == 0) continue;
        std::vector<int> rin2, rout2;
        for (int x : rin)
          if (!std::binary_search(s.begin(), s.end(), x)) rin2.push_back(x);
        for (int y : rout)
          if (!std::binary_search(t.begin(), t.end(), y)) rout2.push_back(y);
        for (int x : s) cur.in_owner[x] = level;
        for (int y : t) cur.out_owner[y] = level;
        for (int b = 0; b < dm; ++b) {
          cur.dec[level] = b;
          self(self, level + 1, rin2, rout2);
        }
      }
  };
  std::vector<int> rin, rout;
  for (int i = 0; i < m; ++i) rin.push_back(i);
  for (int j = 0; j < n; ++j) rout.push_back(j);
  rec(rec, 0, rin, rout);
  for (std::size_t i = 0; i < elems_.size(); ++i) index_.emplace(elems_[i], static_cast<int>(i));
}

int DayBasis::index(const DayElem& e) const {
  auto it = index_.find(e);
  return it == index_.end() ? -1 : it->second;
}

Matrix DayBasis::generator(int side, int j) const {
  Matrix g(size(), size());
  for (int i = 0; i < size(); ++i) {
    const DayElem& e = elems_[i];
    const std::vector<int>& own = side == 0 ? e.in_owner : e.out_owner;
    int a = own[j], b = own[j + 1];
    if (a != b) {
      DayElem e2 = e;
      std::vector<int>& own2 = side == 0 ? e2.in_owner : e2.out_owner;
      std::swap(own2[j], own2[j + 1]);
      g.col(i) = unit_vec(index(e2));
      continue;
    }
    int pos = 0, km = 0, kn = 0;
    for (int t = 0; t < j; ++t) pos += own[t] == a;
    for (int v : e.in_owner) km += v == a;
    for (int v : e.out_owner) kn += v == a;
    const GroupAction* ga = f_[a]->at(km, kn);
    SVec img = ga->gen(side, pos).col(e.dec[a]);
    SVec out;
    DayElem e2 = e;
    for (const auto& [b2, c] : img) {
      e2.dec[a] = b2;
      out.emplace_back(index(e2), c);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    g.col(i) = std::move(out);
  }
  return g;
}

Matrix DayBasis::factor_swap(int fi, int sign) const {
  if (f_[fi] != f_[fi + 1]) throw std::invalid_argument("factor_swap: factors differ");
  Matrix g(size(), size());
  for (int i = 0; i < size(); ++i) {
    DayElem e = elems_[i];
    for (auto& v : e.in_owner) v = v == fi ? fi + 1 : (v == fi + 1 ? fi : v);
    for (auto& v : e.out_owner) v = v == fi ? fi + 1 : (v == fi + 1 ? fi : v);
    std::swap(e.dec[fi], e.dec[fi + 1]);
    g.col(i) = SVec{{index(e), Q(sign)}};
  }
  return g;
}

GroupAction DayBasis::action() const {
  std::vector<Matrix> gens;
  for (int j = 0; j + 1 < m_; ++j) gens.push_back(generator(0, j));
  for (int j = 0; j + 1 < n_; ++j) gens.push_back(generator(1, j));
  return GroupAction(size(), {m_, n_}, std::move(gens));
}

namespace {

FbFbModule day_product(const std::vector<const FbFbModule*>& fs, int max_m, int max_n) {
  FbFbModule out(max_m, max_n);
  for (int m = 0; m <= max_m; ++m)
    for (int n = 0; n <= max_n; ++n) {
      DayBasis b(fs, m, n);
      if (b.size()) out.set(m, n, b.action());
    }
  return out;
}

FbFbModule power(const FbFbModule& f, int d, int sign) {
  if (d < 0) throw std::invalid_argument("negative power");
  if (d == 0) return point_module(0, 0, f.max_m(), f.max_n());
  std::vector<const FbFbModule*> fs(d, &f);
  FbFbModule out(f.max_m(), f.max_n());
  for (int m = 0; m <= f.max_m(); ++m)
    for (int n = 0; n <= f.max_n(); ++n) {
      DayBasis b(fs, m, n);
      if (!b.size()) continue;
      std::vector<Matrix> sw;
      for (int i = 0; i + 1 < d; ++i) sw.push_back(b.factor_swap(i, sign));
      Coinvariants c = coinvariants(GroupAction(b.size(), {d}, std::move(sw), false));
      if (!c.dim()) continue;
      out.set(m, n, induce(c, b.action(), false));
    }
  return out;
}

}  // namespace

FbFbModule day_convolve(const FbFbModule& f, const FbFbModule& g) {
  return day_product({&f, &g}, std::min(f.max_m(), g.max_m()), std::min(f.max_n(), g.max_n()));
}

Matrix day_symmetry(const FbFbModule& f, const FbFbModule& g, int m, int n) {
  DayBasis a({&f, &g}, m, n), b({&g, &f}, m, n);
  Matrix s(b.size(), a.size());
  for (int i = 0; i < a.size(); ++i) {
    DayElem e = a.elem(i);
    for (auto& v : e.in_owner) v = 1 - v;
    for (auto& v : e.out_owner) v = 1 - v;
    std::swap(e.dec[0], e.dec[1]);
    s.col(i) = unit_vec(b.index(e));
  }
  return s;
}

FbFbModule day_power(const FbFbModule& f, int d) {
  if (d == 0) return point_module(0, 0, f.max_m(), f.max_n());
  std::vector<const FbFbModule*> fs(d, &f);
  return day_product(fs, f.max_m(), f.max_n());
}

FbFbModule sym_power(const FbFbModule& f, int d) { return power(f, d, 1); }
FbFbModule ext_power(const FbFbModule& f, int d) { return power(f, d, -1); }

FbFbModule shift(const FbFbModule& f, int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative shift");
  FbFbModule out(std::max(0, f.max_m() - a), std::max(0, f.max_n() - b));
  if (f.max_m() < a || f.max_n() < b) return out;
  for (const auto& [k, g] : f.spaces()) {
    int m = k.first - a, n = k.second - b;
    if (m < 0 || n < 0) continue;
    std::vector<Matrix> gens;
    for (int j = 0; j + 1 < m; ++j) gens.push_back(g.gen(0, j));
    for (int j = 0; j + 1 < n; ++j) gens.push_back(g.gen(1, j));
    out.set(m, n, GroupAction(g.dim(), {m, n}, std::move(gens), false));
  }
  return out;
}

FbFbModule sign_twist(const FbFbModule& f, TwistSide which) {
  FbFbModule out(f.max_m(), f.max_n());
  int side = which == TwistSide::Left ? 0 : 1;
  for (const auto& [k, g] : f.spaces()) {
    std::vector<Matrix> gens;
    for (int s = 0; s < 2; ++s) {
      int cnt = g.factors()[s] > 1 ? g.factors()[s] - 1 : 0;
      for (int j = 0; j < cnt; ++j) gens.push_back(s == side ? Q(-1) * g.gen(s, j) : g.gen(s, j));
    }
    out.set(k.first, k.second, GroupAction(g.dim(), g.factors(), std::move(gens), false));
  }
  return out;
}



GroupAction regular_action(int s, int t) {
  auto ps = all_perms(s), pt = all_perms(t);
  std::sort(ps.begin(), ps.end());
  std::sort(pt.begin(), pt.end());
  int d = static_cast<int>(ps.size() * pt.size());
  std::vector<Matrix> gens;
  for (int side = 0; side < 2; ++side)
    for (int j = 0; j + 1 < (side ? t : s); ++j) {
      Matrix g(d, d);
      for (size_t a = 0; a < ps.size(); ++a)
        for (size_t b = 0; b < pt.size(); ++b) {
          Perm x = ps[a], y = pt[b];
          Perm& z = side ? y : x;
          for (int& v : z)
            if (v == j) v = j + 1;
            else if (v == j + 1) v = j;
          int ia = static_cast<int>(std::lower_bound(ps.begin(), ps.end(), x) - ps.begin());
          int ib = static_cast<int>(std::lower_bound(pt.begin(), pt.end(), y) - pt.begin());
          g.set(ia * static_cast<int>(pt.size()) + ib, static_cast<int>(a * pt.size() + b), 1);
        }
      gens.push_back(g);
    }
  return GroupAction(d, {s, t}, std::move(gens));
}

FbFbModule regular_module(int max_m, int max_n) {
  FbFbModule f(max_m, max_n);
  for (int m = 0; m <= max_m; ++m)
    for (int n = 0; n <= max_n; ++n) f.set(m, n, regular_action(m, n));
  return f;
}

}  // namespace wbk
