#include "wbk/operad.hpp"

#include <mutex>
#include <sstream>

namespace wbk {

namespace {
std::mutex perm_mu;

std::string triple(int a, int b, int c) {
  std::ostringstream os;
  os << "(" << a << "," << b << "," << c << ")";
  return os.str();
}
}  // namespace

Matrix TruncatedOperad::composition(int m, int i, int n) const {
  int r = m + n - 1;
  if (r > max_arity || r < 0) {
    if (has_arity_zero()) throw TruncationError("composition " + triple(m, i, n) + " leaves the truncation");
    return Matrix(0, dim(m) * dim(n));
  }
  auto it = comp.find({m, i, n});
  if (it != comp.end()) return it->second;
  return Matrix(dim(r), dim(m) * dim(n));
}

SVec TruncatedOperad::compose(int m, int i, int n, int a, int b) const {
  if (m + n - 1 > max_arity) {
    if (has_arity_zero()) throw TruncationError("composition " + triple(m, i, n) + " leaves the truncation");
    return {};
  }
  auto it = comp.find({m, i, n});
  if (it == comp.end()) return {};
  return it->second.col(a * dim(n) + b);
}

SVec TruncatedOperad::compose_vec(int m, int i, int n, const SVec& a, const SVec& b) const {
  SVec out;
  for (const auto& [x, ca] : a)
    for (const auto& [y, cb] : b) axpy(out, ca * cb, compose(m, i, n, x, y));
  return out;
}

const Matrix& TruncatedOperad::perm_matrix(int k, const Perm& p) const {
  std::lock_guard<std::mutex> lock(perm_mu);
  auto key = std::make_pair(k, p);
  auto it = perm_cache_.find(key);
  if (it != perm_cache_.end()) return it->second;
  return perm_cache_.emplace(key, arity[k].element(0, p)).first->second;
}

Perm block_perm(const Perm& sigma, int i, int n) {
  int m = static_cast<int>(sigma.size());
  int total = m + n - 1;
  Perm out(total);
  int i2 = sigma[i - 1] + 1;
  auto start = [&](int slot, int ins) { return slot < ins ? slot : slot + n - 1; };
  for (int k = 1; k <= m; ++k) {
    int width = k == i ? n : 1;
    int s2 = sigma[k - 1] + 1;
    for (int t = 0; t < width; ++t) {
      int from = (k <= i ? k : k + n - 1) + t;
      int to = (s2 == i2 ? i2 : start(s2, i2)) + t;
      out[from - 1] = to - 1;
    }
  }
  return out;
}

void TruncatedOperad::complete_by_equivariance() {
  for (int m = 1; m <= max_arity; ++m)
    for (int n = 0; m + n - 1 <= max_arity; ++n) {
      if (dim(m) == 0 || dim(n) == 0) continue;
      int i0 = 0;
      for (int i = 1; i <= m; ++i)
        if (comp.count({m, i, n})) {
          i0 = i;
          break;
        }
      if (!i0) continue;
      const Matrix base = comp.at({m, i0, n});
      for (int i = 1; i <= m; ++i) {
        if (comp.count({m, i, n})) continue;
        Perm sigma = identity_perm(m);
        std::swap(sigma[i0 - 1], sigma[i - 1]);
        // (sigma mu) o_{sigma(i0)} nu = sigma'.(mu o_{i0} nu)
        Matrix left = perm_matrix(m + n - 1, block_perm(sigma, i0, n));
        Matrix right = kron(perm_matrix(m, inverse(sigma)), Matrix::identity(dim(n)));
        comp[{m, i, n}] = left * base * right;
      }
    }
}

TruncatedOperad zero_operad(int max_arity) {
  TruncatedOperad o;
  o.name = "zero";
  o.max_arity = max_arity;
  for (int k = 0; k <= max_arity; ++k) o.arity.push_back(GroupAction::trivial(0, {k}));
  return o;
}

TruncatedOperad algebra_operad(const std::string& name, const std::vector<std::vector<SVec>>& mult) {
  TruncatedOperad o;
  o.name = name;
  o.max_arity = 1;
  int d = static_cast<int>(mult.size());
  o.arity.push_back(GroupAction::trivial(0, {0}));
  o.arity.push_back(GroupAction::trivial(d, {1}));
  Matrix c(d, d * d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) c.col(a * d + b) = mult[a][b];
  o.comp[{1, 1, 1}] = c;
  return o;
}

Report validate_operad(const TruncatedOperad& o) {
  Report r;
  int N = o.max_arity;
  if (static_cast<int>(o.arity.size()) != N + 1) {
    r.fail("arity table has wrong length");
    return r;
  }
  for (int k = 0; k <= N; ++k) {
    if (o.arity[k].factors() != std::vector<int>{k}) {
      r.fail("arity " + std::to_string(k) + " does not carry an S_k action");
      return r;
    }
  }
  for (const auto& [key, a] : o.comp) {
    auto [m, i, n] = key;
    if (m < 1 || m > N || n < 0 || n > N || i < 1 || i > m || m + n - 1 > N) {
      r.fail("composition " + triple(m, i, n) + " out of range");
      return r;
    }
    if (a.rows() != o.dim(m + n - 1) || a.cols() != o.dim(m) * o.dim(n)) {
      r.fail("dimension mismatch in composition " + triple(m, i, n));
      return r;
    }
  }
  // equivariance
  for (int m = 1; m <= N; ++m)
    for (int n = 0; m + n - 1 <= N; ++n) {
      if (!o.dim(m) || !o.dim(n)) continue;
      for (int i = 1; i <= m; ++i) {
        Matrix c = o.composition(m, i, n);
        for (int j = 0; j + 1 < m; ++j) {
          Perm s = identity_perm(m);
          std::swap(s[j], s[j + 1]);
          Matrix lhs = o.composition(m, s[i - 1] + 1, n) * kron(o.arity[m].gen(0, j), Matrix::identity(o.dim(n)));
          Matrix rhs = o.perm_matrix(m + n - 1, block_perm(s, i, n)) * c;
          if (!(lhs == rhs)) {
            r.fail("S_m-equivariance fails for composition " + triple(m, i, n) + " at generator " + std::to_string(j + 1));
            return r;
          }
        }
        for (int j = 0; j + 1 < n; ++j) {
          Matrix lhs = c * kron(Matrix::identity(o.dim(m)), o.arity[n].gen(0, j));
          Matrix rhs = o.arity[m + n - 1].gen(0, i - 1 + j) * c;
          if (!(lhs == rhs)) {
            r.fail("S_n-equivariance fails for composition " + triple(m, i, n) + " at generator " + std::to_string(j + 1));
            return r;
          }
        }
      }
    }
  // sequential and parallel axioms on O(l) (x) O(m) (x) O(n)
  for (int l = 1; l <= N; ++l)
    for (int m = 0; m <= N; ++m)
      for (int n = 0; n <= N; ++n) {
        if (l + m + n - 2 > N || l + m + n - 2 < 0) continue;
        if (!o.dim(l) || !o.dim(m) || !o.dim(n)) continue;
        int dl = o.dim(l), dm = o.dim(m), dn = o.dim(n);
        for (int i = 1; i <= l; ++i) {
          if (l + m - 1 > N || m + n - 1 > N) throw TruncationError("intermediate arity above truncation");
          for (int j = 1; j <= m; ++j) {
            Matrix lhs = o.composition(l + m - 1, i + j - 1, n) * kron(o.composition(l, i, m), Matrix::identity(dn));
            Matrix rhs = o.composition(l, i, m + n - 1) * kron(Matrix::identity(dl), o.composition(m, j, n));
            if (!(lhs == rhs)) {
              r.fail("sequential axiom fails for arities " + triple(l, m, n) + " at slots (" + std::to_string(i) + "," +
                     std::to_string(j) + ")");
              return r;
            }
          }
          for (int k = i + 1; k <= l; ++k) {
            if (l + n - 1 > N) throw TruncationError("intermediate arity above truncation");
            Matrix lhs = o.composition(l + m - 1, k + m - 1, n) * kron(o.composition(l, i, m), Matrix::identity(dn));
            // (lambda o_k nu) o_i mu, evaluated on lambda (x) mu (x) nu
            Matrix swap(dn * dm, dm * dn);
            for (int a = 0; a < dm; ++a)
              for (int b = 0; b < dn; ++b) swap.col(a * dn + b) = unit_vec(b * dm + a);
            Matrix rhs = o.composition(l + n - 1, i, m) * kron(o.composition(l, k, n), Matrix::identity(dm)) *
                         kron(Matrix::identity(dl), swap);
            if (!(lhs == rhs)) {
              r.fail("parallel axiom fails for arities " + triple(l, m, n) + " at slots (" + std::to_string(i) + "," +
                     std::to_string(k) + ")");
              return r;
            }
          }
        }
      }
  if (o.unit) {
    if (o.dim(1) == 0) r.fail("unit given but O(1) is zero");
  }
  return r;
}

std::vector<SVec> commutator_span(const TruncatedOperad& o, int k) {
  int dk = o.dim(k + 1);
  std::vector<SVec> gens;
  for (int s = 0; s <= k; ++s) {
    int t = k - s;
    Perm sigma(k + 1);
    for (int p = 0; p < t; ++p) sigma[p] = s + p;
    for (int p = t; p < t + s; ++p) sigma[p] = p - t;
    sigma[k] = k;
    const Matrix& ps = o.perm_matrix(k + 1, sigma);
    for (int a = 0; a < o.dim(s + 1); ++a)
      for (int b = 0; b < o.dim(t + 1); ++b) {
        SVec v = o.compose(s + 1, s + 1, t + 1, a, b);
        axpy(v, -1, ps.apply(o.compose(t + 1, t + 1, s + 1, b, a)));
        if (!v.empty()) gens.push_back(std::move(v));
      }
  }
  // close under S_k acting on the unmarked slots
  Echelon e(dk);
  std::vector<SVec> basis;
  std::vector<SVec> queue = gens;
  while (!queue.empty()) {
    SVec v = std::move(queue.back());
    queue.pop_back();
    if (!e.insert(v)) continue;
    basis.push_back(v);
    for (int j = 0; j + 1 < k; ++j) queue.push_back(o.arity[k + 1].gen(0, j).apply(v));
  }
  return basis;
}

WheeledComponent wheeled_component(const TruncatedOperad& o) {
  WheeledComponent w;
  w.max_arity = o.max_arity - 1;
  for (int k = 0; k <= w.max_arity; ++k) {
    Coinvariants q = quotient_by_span(o.dim(k + 1), commutator_span(o, k));
    Matrix s = q.section();
    std::vector<Matrix> gens;
    for (int j = 0; j + 1 < k; ++j) gens.push_back(q.projection * o.arity[k + 1].gen(0, j) * s);
    w.arity.emplace_back(q.dim(), std::vector<int>{k}, std::move(gens));
    w.quotient.push_back(std::move(q));
  }
  return w;
}

Report validate_wheel_action(const TruncatedOperad& o, const WheeledComponent& w) {
  Report r;
  for (int k = 0; k <= w.max_arity; ++k) {
    // projection is equivariant
    for (int j = 0; j + 1 < k; ++j) {
      if (!(w.projection(k) * o.arity[k + 1].gen(0, j) == w.arity[k].gen(0, j) * w.projection(k))) {
        r.fail("wheel projection not equivariant in arity " + std::to_string(k));
        return r;
      }
    }
    auto cs = commutator_span(o, k);
    for (int l = 0; k + l - 1 <= w.max_arity; ++l) {
      if (k + l - 1 < 0 || !o.dim(l)) continue;
      for (int x = 1; x <= k; ++x)
        for (const auto& c : cs)
          for (int b = 0; b < o.dim(l); ++b) {
            SVec v = o.compose_vec(k + 1, x, l, c, unit_vec(b));
            if (!w.projection(k + l - 1).apply(v).empty()) {
              r.fail("wheel action not well defined: arity " + std::to_string(k) + " slot " + std::to_string(x) +
                     " with O(" + std::to_string(l) + ")");
              return r;
            }
          }
    }
  }
  return r;
}

SVec unit_wheel_image(const TruncatedOperad& o, const WheeledComponent& w, const SVec& u) {
  if (o.dim(1) == 0 || w.max_arity < 0) return {};
  return w.projection(0).apply(u);
}

}  // namespace wbk
