#include "wbk/examples.hpp"

#include <algorithm>

namespace wbk {

TruncatedOperad rational_operad() { return algebra_operad("Q", {{unit_vec(0)}}); }

TruncatedOperad n3_operad() {
  std::vector<std::vector<SVec>> mult(3, std::vector<SVec>(3));
  mult[0][1] = unit_vec(2);
  return algebra_operad("n3", mult);
}

namespace {

// A word w (permutation of 0..n-1) stands for the monomial x_{w_1} ... x_{w_n}.
int word_index(const std::vector<Perm>& words, const Perm& w) {
  return static_cast<int>(std::lower_bound(words.begin(), words.end(), w) - words.begin());
}

}  // namespace

TruncatedOperad ass_operad(int N) {
  TruncatedOperad o;
  o.name = "Ass";
  o.max_arity = N;
  o.arity.push_back(GroupAction::trivial(0, {0}));
  std::vector<std::vector<Perm>> words(N + 1);
  for (int k = 1; k <= N; ++k) {
    words[k] = all_perms(k);
    std::sort(words[k].begin(), words[k].end());
    int d = static_cast<int>(words[k].size());
    std::vector<Matrix> gens;
    for (int j = 0; j + 1 < k; ++j) {
      Matrix g(d, d);
      for (int a = 0; a < d; ++a) {
        Perm w = words[k][a];
        for (int& x : w)
          if (x == j) x = j + 1;
          else if (x == j + 1) x = j;
        g.set(word_index(words[k], w), a, 1);
      }
      gens.push_back(g);
    }
    o.arity.emplace_back(d, std::vector<int>{k}, gens);
  }
  for (int m = 1; m <= N; ++m)
    for (int n = 1; m + n - 1 <= N; ++n)
      for (int i = 1; i <= m; ++i) {
        int r = m + n - 1;
        Matrix c(static_cast<int>(words[r].size()), static_cast<int>(words[m].size() * words[n].size()));
        for (size_t a = 0; a < words[m].size(); ++a)
          for (size_t b = 0; b < words[n].size(); ++b) {
            Perm w;
            for (int x : words[m][a]) {
              if (x == i - 1)
                for (int y : words[n][b]) w.push_back(y + i - 1);
              else
                w.push_back(x < i - 1 ? x : x + n - 1);
            }
            c.set(word_index(words[r], w), static_cast<int>(a * words[n].size() + b), 1);
          }
        o.comp[{m, i, n}] = c;
      }
  return o;
}

TruncatedOperad com_operad(int N) {
  TruncatedOperad o;
  o.name = "Com";
  o.max_arity = N;
  o.arity.push_back(GroupAction::trivial(0, {0}));
  for (int k = 1; k <= N; ++k) o.arity.push_back(GroupAction::trivial(1, {k}));
  for (int m = 1; m <= N; ++m)
    for (int n = 1; m + n - 1 <= N; ++n)
      for (int i = 1; i <= m; ++i) o.comp[{m, i, n}] = Matrix::identity(1);
  return o;
}

}  // namespace wbk
