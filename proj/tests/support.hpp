#pragma once
// Random representations and modules shared by the unit and acceptance tests.

#include "wbk/fbfb.hpp"

#include <random>

namespace wbk::testing {

struct Rep {
  int dim = 1;
  std::vector<Matrix> gens;  // k-1 generators
};

inline Rep trivial_rep(int k, bool sign) {
  Rep r;
  for (int j = 0; j + 1 < k; ++j) r.gens.push_back(sign ? Q(-1) * Matrix::identity(1) : Matrix::identity(1));
  return r;
}

// Place permutations of binary words of length k with c ones.
inline Rep word_rep(int k, int c, bool sign) {
  std::vector<int> words;
  for (int w = 0; w < (1 << k); ++w)
    if (__builtin_popcount(w) == c) words.push_back(w);
  Rep r;
  r.dim = static_cast<int>(words.size());
  for (int j = 0; j + 1 < k; ++j) {
    Matrix g(r.dim, r.dim);
    for (int i = 0; i < r.dim; ++i) {
      int w = words[i];
      int bj = (w >> j) & 1, bk = (w >> (j + 1)) & 1;
      int w2 = (w & ~(3 << j)) | (bk << j) | (bj << (j + 1));
      int t = static_cast<int>(std::lower_bound(words.begin(), words.end(), w2) - words.begin());
      g.set(t, i, sign ? Q(-1) : Q(1));
    }
    r.gens.push_back(g);
  }
  return r;
}

inline Rep random_rep(std::mt19937& rng, int k) {
  if (k <= 1) return trivial_rep(k, false);
  int kind = static_cast<int>(rng() % 4);
  bool sg = rng() % 2;
  if (kind == 0) return trivial_rep(k, sg);
  int c = 1 + static_cast<int>(rng() % (k - 1));
  if (kind == 1) c = 1;
  return word_rep(k, c, sg);
}

inline GroupAction outer(const Rep& a, const Rep& b, int m, int n) {
  std::vector<Matrix> g;
  for (const auto& x : a.gens) g.push_back(kron(x, Matrix::identity(b.dim)));
  for (const auto& y : b.gens) g.push_back(kron(Matrix::identity(a.dim), y));
  return GroupAction(a.dim * b.dim, {m, n}, g);
}

inline GroupAction conjugate_randomly(std::mt19937& rng, const GroupAction& g) {
  int d = g.dim();
  Matrix t = Matrix::identity(d);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (rng() % 3 == 0) t.set(i, j, Q(static_cast<int>(rng() % 5) - 2));
  Matrix ti = solve_in_span(t, Matrix::identity(d));
  std::vector<Matrix> gens;
  for (const auto& s : g.gens()) gens.push_back(t * s * ti);
  return GroupAction(d, g.factors(), gens);
}

// Small random module on the window; roughly half the bidegrees are nonzero.
inline FbFbModule random_module(std::mt19937& rng, int max_m, int max_n, bool allow_origin = true) {
  FbFbModule f(max_m, max_n);
  for (int m = 0; m <= max_m; ++m)
    for (int n = 0; n <= max_n; ++n) {
      if (!allow_origin && m == 0 && n == 0) continue;
      if (rng() % 2) continue;
      GroupAction g = outer(random_rep(rng, m), random_rep(rng, n), m, n);
      if (g.dim() > 6) continue;
      if (rng() % 2) g = conjugate_randomly(rng, g);
      f.set(m, n, g);
    }
  return f;
}

}  // namespace wbk::testing
