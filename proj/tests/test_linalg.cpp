#include "doctest.h"
#include "wbk/group.hpp"
#include "wbk/linalg.hpp"

#include <random>

using namespace wbk;

namespace {

// Plain dense elimination, written separately from the sparse echelon code.
int dense_rank(std::vector<std::vector<Q>> a) {
  int r = 0;
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c] != 0) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    for (int i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Q f = a[i][c] / a[r][c];
      for (int j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

Matrix random_matrix(std::mt19937& rng, int r, int c, int density) {
  std::uniform_int_distribution<int> val(-3, 3), pct(0, 99);
  Matrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j)
      if (pct(rng) < density) m.set(i, j, Q(val(rng), 1 + pct(rng) % 3));
  return m;
}

Matrix swap2() { return Matrix::from_dense({{0, 1}, {1, 0}}); }

}  // namespace

TEST_CASE("rank kernel image: small cases") {
  auto e = rank_kernel_image(Matrix(0, 0));
  CHECK(e.rank == 0);
  CHECK(e.kernel.cols() == 0);
  CHECK(e.image.cols() == 0);

  auto id = rank_kernel_image(Matrix::identity(3));
  CHECK(id.rank == 3);
  CHECK(id.kernel.cols() == 0);

  auto a = rank_kernel_image(Matrix::from_dense({{1, 2}, {2, 4}}));
  CHECK(a.rank == 1);
  REQUIRE(a.kernel.cols() == 1);
  // kernel vector proportional to (-2, 1)
  Q k0 = a.kernel.at(0, 0), k1 = a.kernel.at(1, 0);
  CHECK(k1 != 0);
  CHECK(k0 / k1 == Q(-2));
}

TEST_CASE("rational formatting round trip") {
  CHECK(to_string(Q(6, 4)) == "3/2");
  CHECK(to_string(Q(-5)) == "-5");
  CHECK(parse_rational("-10/4") == Q(-5, 2));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
}

TEST_CASE("rank-nullity and kernel property on random matrices") {
  std::mt19937 rng(7);
  for (int t = 0; t < 60; ++t) {
    int r = 1 + t % 7, c = 1 + (t * 3) % 8;
    Matrix a = random_matrix(rng, r, c, 35);
    if (t % 4 == 0) a = a * random_matrix(rng, c, c, 30);  // force dependencies
    auto rk = rank_kernel_image(a);
    CHECK(rk.rank == dense_rank(a.dense()));
    CHECK(rk.rank + rk.kernel.cols() == c);
    CHECK((a * rk.kernel).is_zero());
    CHECK(rank(rk.image) == rk.rank);
    CHECK(rank(rk.kernel) == rk.kernel.cols());
  }
}

TEST_CASE("solve_in_span recovers coordinates") {
  std::mt19937 rng(11);
  for (int t = 0; t < 20; ++t) {
    Matrix b = random_matrix(rng, 6, 3, 60);
    if (rank(b) < 3) continue;
    Matrix x = random_matrix(rng, 3, 4, 50);
    CHECK(solve_in_span(b, b * x) == x);
  }
}

TEST_CASE("kron matches index convention") {
  Matrix a = Matrix::from_dense({{1, 2}, {3, 4}});
  Matrix b = Matrix::from_dense({{0, 1}, {1, 0}});
  Matrix k = kron(a, b);
  CHECK(k.at(0 * 2 + 1, 1 * 2 + 0) == a.at(0, 1) * b.at(1, 0));
  CHECK(k.at(1 * 2 + 0, 0 * 2 + 1) == a.at(1, 0) * b.at(0, 1));
}

TEST_CASE("permutation words") {
  for (int n = 0; n <= 5; ++n)
    for (const auto& p : all_perms(n)) {
      Perm q = identity_perm(n);
      for (int j : adjacent_word(p)) {
        Perm s = identity_perm(n);
        std::swap(s[j], s[j + 1]);
        q = compose(q, s);
      }
      CHECK(q == p);
      CHECK(perm_sign(p) == ((adjacent_word(p).size() % 2) ? -1 : 1));
    }
}

TEST_CASE("coinvariants: examples") {
  auto triv = coinvariants(GroupAction(2, {}, {}));
  CHECK(triv.dim() == 2);
  CHECK(triv.projection == Matrix::identity(2));

  auto sw = coinvariants(GroupAction(2, {2}, {swap2()}));
  CHECK(sw.dim() == 1);

  Matrix sgnswap = Q(-1) * swap2();
  auto ss = coinvariants(GroupAction(2, {2}, {sgnswap}));
  REQUIRE(ss.dim() == 1);
  // invariant representative proportional to (1,-1)
  Q a = ss.quotient_basis.at(0, 0), b = ss.quotient_basis.at(1, 0);
  CHECK(a == -b);
  CHECK(a != 0);
}

TEST_CASE("malformed actions are rejected") {
  Matrix bad = Matrix::from_dense({{1, 1}, {0, 1}});
  CHECK_THROWS_AS(GroupAction(2, {2}, {bad}), MalformedAction);
  GroupAction unchecked(2, {2}, {Matrix::from_dense({{1, 0}, {0, 0}})}, false);
  CHECK_THROWS_AS(coinvariants(unchecked), MalformedAction);
}

namespace {

// Permutation representation of S_k on k points, tensored with itself.
GroupAction perm_rep(int k, bool sign) {
  std::vector<Matrix> g;
  for (int j = 0; j + 1 < k; ++j) {
    Matrix m(k, k);
    for (int i = 0; i < k; ++i) {
      int t = i == j ? j + 1 : (i == j + 1 ? j : i);
      m.set(t, i, sign ? Q(-1) : Q(1));
    }
    g.push_back(m);
  }
  return GroupAction(k, {k}, g);
}

}  // namespace

TEST_CASE("Reynolds operator: idempotent, absorbs generators, matches element sum") {
  for (int k = 1; k <= 5; ++k)
    for (bool sg : {false, true}) {
      GroupAction g = perm_rep(k, sg);
      Matrix p = reynolds(g);
      CHECK(p * p == p);
      auto c = coinvariants(g);
      for (const auto& s : g.gens()) {
        CHECK(p * s == p);
        CHECK(c.projection * s == c.projection);
      }
      std::vector<Matrix> elems;
      for (const auto& pm : all_perms(k)) elems.push_back(g.element(0, pm));
      CHECK(coinvariants_of_elements(k, elems).dim() == c.dim());
      // perm (x) sgn contains the trivial rep only for k <= 2
      CHECK(c.dim() == (sg && k > 2 ? 0 : 1));
      Matrix h = invariant_form(g);
      for (const auto& s : g.gens()) CHECK(s.transpose() * h * s == h);
    }
}

TEST_CASE("product group coinvariants") {
  // S_2 x S_3 acting on C^2 (x) C^3 by place permutations
  GroupAction a = perm_rep(2, false), b = perm_rep(3, false);
  std::vector<Matrix> gens{kron(a.gen(0, 0), Matrix::identity(3)), kron(Matrix::identity(2), b.gen(0, 0)),
                           kron(Matrix::identity(2), b.gen(0, 1))};
  GroupAction g(6, {2, 3}, gens);
  CHECK(g.order() == 12);
  auto c = coinvariants(g);
  CHECK(c.dim() == 1);
  CHECK(reynolds(g) * reynolds(g) == reynolds(g));
}
