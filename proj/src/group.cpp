#include "wbk/group.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace wbk {

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm inverse(const Perm& p) {
  Perm q(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[b[i]];
  return c;
}

int perm_sign(const Perm& p) {
  int s = 1;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true, ++len;
    if (len % 2 == 0) s = -s;
  }
  return s;
}

bool is_identity(const Perm& p) {
  for (std::size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<int> adjacent_word(const Perm& p) {
  // Bubble the values into place: s_j o p swaps values j and j+1.
  Perm q = p, pos = inverse(p);
  std::vector<int> word;
  int n = static_cast<int>(p.size());
  bool changed = true;
  while (changed) {
    changed = false;
    for (int j = 0; j + 1 < n; ++j) {
      if (pos[j + 1] < pos[j]) {
        std::swap(q[pos[j]], q[pos[j + 1]]);
        std::swap(pos[j], pos[j + 1]);
        word.push_back(j);
        changed = true;
      }
    }
  }
  return word;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

GroupAction::GroupAction(int dim, std::vector<int> factors, std::vector<Matrix> gens, bool check_now)
    : dim_(dim), factors_(std::move(factors)), gens_(std::move(gens)) {
  std::size_t expect = 0;
  for (int k : factors_) expect += k > 1 ? k - 1 : 0;
  if (gens_.size() != expect)
    throw MalformedAction("expected " + std::to_string(expect) + " generators, got " + std::to_string(gens_.size()));
  for (const auto& g : gens_)
    if (g.rows() != dim_ || g.cols() != dim_) throw MalformedAction("generator has wrong shape");
  if (check_now) check();
}

GroupAction GroupAction::trivial(int dim, std::vector<int> factors) {
  std::vector<Matrix> gens;
  for (int k : factors)
    for (int j = 0; j + 1 < k; ++j) gens.push_back(Matrix::identity(dim));
  return GroupAction(dim, std::move(factors), std::move(gens), false);
}

long long GroupAction::order() const {
  long long o = 1;
  for (int k : factors_)
    for (int i = 2; i <= k; ++i) o *= i;
  return o;
}

int GroupAction::gen_index(int factor, int j) const {
  int base = 0;
  for (int f = 0; f < factor; ++f) base += factors_[f] > 1 ? factors_[f] - 1 : 0;
  return base + j;
}

Matrix GroupAction::element(int factor, const Perm& p) const {
  Matrix m = Matrix::identity(dim_);
  for (int j : adjacent_word(p)) m = m * gen(factor, j);
  return m;
}

SVec GroupAction::apply_word(int factor, const std::vector<int>& word, SVec v) const {
  for (auto it = word.rbegin(); it != word.rend(); ++it) v = gen(factor, *it).apply(v);
  return v;
}

SVec GroupAction::apply(int factor, const Perm& p, SVec v) const {
  return apply_word(factor, adjacent_word(p), std::move(v));
}

void GroupAction::check() const {
  Matrix id = Matrix::identity(dim_);
  int nf = static_cast<int>(factors_.size());
  for (int f = 0; f < nf; ++f) {
    int ng = factors_[f] > 1 ? factors_[f] - 1 : 0;
    for (int i = 0; i < ng; ++i) {
      const Matrix& a = gen(f, i);
      if (!(a * a == id)) throw MalformedAction("generator " + std::to_string(i + 1) + " of factor " + std::to_string(f) + " is not an involution");
      for (int j = i + 1; j < ng; ++j) {
        const Matrix& b = gen(f, j);
        Matrix ab = a * b;
        if (j == i + 1) {
          if (!(ab * ab * ab == id)) throw MalformedAction("braid relation fails in factor " + std::to_string(f));
        } else if (!(ab == b * a)) {
          throw MalformedAction("far generators do not commute in factor " + std::to_string(f));
        }
      }
      for (int g = f + 1; g < nf; ++g) {
        int nh = factors_[g] > 1 ? factors_[g] - 1 : 0;
        for (int j = 0; j < nh; ++j) {
          const Matrix& b = gen(g, j);
          if (!(a * b == b * a)) throw MalformedAction("factors do not commute");
        }
      }
    }
  }
}

namespace {

// Sum over S_k as A_k A_{k-1} ... A_2 with A_k = I + A_{k-1} s_{k-1}.
Matrix symmetrizer(const GroupAction& g, int f, int dim) {
  int k = g.factors()[f];
  Matrix id = Matrix::identity(dim);
  Matrix total = id;
  Matrix a = id;
  for (int j = 2; j <= k; ++j) {
    a = id + a * g.gen(f, j - 2);
    total = a * total;
  }
  return total;
}

}  // namespace

Matrix reynolds(const GroupAction& g) {
  Matrix id = Matrix::identity(g.dim());
  for (const auto& s : g.gens())
    if (!(s * s == id)) throw MalformedAction("non-invertible or non-involutive generator");
  Matrix p = id;
  for (std::size_t f = 0; f < g.factors().size(); ++f) p = symmetrizer(g, static_cast<int>(f), g.dim()) * p;
  return Q(1) / Q(static_cast<long>(g.order())) * p;
}

Matrix invariant_form(const GroupAction& g) {
  Matrix x = Matrix::identity(g.dim());
  for (std::size_t f = 0; f < g.factors().size(); ++f) {
    int k = g.factors()[f];
    // T_k(X) = T_{k-1}(B_k(X)), B_k(X) = X + s_{k-1}^T B_{k-1}(X) s_{k-1}.
    for (int top = k; top >= 2; --top) {
      Matrix b = x;
      for (int j = 2; j <= top; ++j) {
        const Matrix& s = g.gen(static_cast<int>(f), j - 2);
        b = x + s.transpose() * b * s;
      }
      x = b;
    }
  }
  return x;
}

Matrix Coinvariants::section() const {
  Matrix s(projection.cols(), static_cast<int>(lift_index.size()));
  for (std::size_t i = 0; i < lift_index.size(); ++i) s.col(static_cast<int>(i)) = unit_vec(lift_index[i]);
  return s;
}

Coinvariants coinvariants_from_projector(const Matrix& p) {
  int n = p.cols();
  Echelon e(p.rows(), true);
  std::vector<int> pos(n, -1);
  std::vector<SVec> coords(n);
  Coinvariants c;
  for (int j = 0; j < n; ++j) {
    if (e.insert(p.col(j))) {
      pos[j] = static_cast<int>(c.lift_index.size());
      c.lift_index.push_back(j);
      coords[j] = unit_vec(pos[j]);
    } else {
      // relation: e_j + sum r_i e_i == 0 among inserted columns
      SVec out;
      for (const auto& [i, a] : e.relations().back())
        if (i != j) out.emplace_back(pos[i], -a);
      std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      coords[j] = std::move(out);
    }
  }
  int k = static_cast<int>(c.lift_index.size());
  c.projection = Matrix::from_columns(k, std::move(coords));
  std::vector<SVec> qb;
  for (int j : c.lift_index) qb.push_back(p.col(j));
  c.quotient_basis = Matrix::from_columns(p.rows(), std::move(qb));
  return c;
}

Coinvariants coinvariants(const GroupAction& g) { return coinvariants_from_projector(reynolds(g)); }

Coinvariants coinvariants_of_elements(int dim, const std::vector<Matrix>& elements) {
  if (elements.empty()) throw MalformedAction("empty element list");
  Matrix p(dim, dim);
  for (const auto& g : elements) {
    if (g.rows() != dim || g.cols() != dim) throw MalformedAction("group element has wrong shape");
    p = p + g;
  }
  return coinvariants_from_projector(Q(1) / Q(static_cast<long>(elements.size())) * p);
}

GroupAction induce(const Coinvariants& c, const GroupAction& h, bool check) {
  Matrix s = c.section();
  std::vector<Matrix> gens;
  for (const auto& g : h.gens()) gens.push_back(c.projection * g * s);
  return GroupAction(c.dim(), h.factors(), std::move(gens), check);
}


Coinvariants quotient_by_span(int dim, const std::vector<SVec>& vs) {
  Echelon full(dim, true);
  for (const auto& v : vs) full.insert(v);
  int ns = static_cast<int>(vs.size());
  Coinvariants c;
  std::vector<int> unit_pos(dim, -1);
  for (int j = 0; j < dim; ++j) {
    if (full.insert(unit_vec(j))) {
      unit_pos[j] = static_cast<int>(c.lift_index.size());
      c.lift_index.push_back(j);
    }
  }
  int k = static_cast<int>(c.lift_index.size());
  std::vector<SVec> cols(dim);
  for (int j = 0; j < dim; ++j) {
    // e_j = (element of the span) + sum a_u e_u over the chosen unit lifts
    SVec out;
    for (const auto& [p, a] : full.coordinates(unit_vec(j))) {
      int ins = full.independent()[p];
      if (ins >= ns) out.emplace_back(unit_pos[ins - ns], a);
    }
    std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    cols[j] = std::move(out);
  }
  c.projection = Matrix::from_columns(k, std::move(cols));
  std::vector<SVec> qb;
  for (int j : c.lift_index) qb.push_back(unit_vec(j));
  c.quotient_basis = Matrix::from_columns(dim, std::move(qb));
  return c;
}

}  // namespace wbk
