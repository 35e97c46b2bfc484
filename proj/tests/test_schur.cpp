#include "doctest.h"
#include "support.hpp"
#include "wbk/examples.hpp"
#include "wbk/ltfb.hpp"
#include "wbk/schur.hpp"

#include <random>

using namespace wbk;

namespace {

int cycles(const Perm& p) {
  std::vector<bool> seen(p.size());
  int c = 0;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (size_t j = i; !seen[j]; j = p[j]) seen[j] = true;
  }
  return c;
}

Q trace(const Matrix& a) {
  Q t = 0;
  for (int i = 0; i < a.rows(); ++i) t += a.at(i, i);
  return t;
}

Q power(int d, int e) {
  Q x = 1;
  for (int i = 0; i < e; ++i) x *= d;
  return x;
}

// dim (V^m (x) V*^n (x) M)_{S_m x S_n} = average of d^{cyc(s) + cyc(t)} chi(s, t).
int character_dim(const GroupAction& g, int m, int n, int d) {
  Q total = 0;
  for (const auto& s : all_perms(m))
    for (const auto& t : all_perms(n)) {
      Matrix e = g.element(0, s) * g.element(1, t);
      total += power(d, cycles(s) + cycles(t)) * trace(e);
    }
  total /= Q(static_cast<long>(factorial(m) * factorial(n)));
  REQUIRE(total.get_den() == 1);
  return static_cast<int>(total.get_num().get_si());
}

int total(const std::map<Bideg, int>& dims) {
  int t = 0;
  for (const auto& [b, x] : dims) t += x;
  return t;
}

// Matrices ad(x) of the derivation part.
std::vector<Matrix> adjoint(const TruncatedDgLie& l) {
  std::vector<Matrix> ad;
  for (int i = 0; i < l.ders(); ++i) {
    Matrix a(l.ders(), l.ders());
    for (int j = 0; j < l.ders(); ++j) a.col(j) = l.bracket_of(unit_vec(i), unit_vec(j));
    ad.push_back(a);
  }
  return ad;
}

}  // namespace

TEST_CASE("mixed tensors") {
  MixedTensors t(2);
  CHECK(t.dim(2, 1) == 8);
  for (int i = 0; i < t.dim(2, 1); ++i) CHECK(t.index(2, 1, t.word(2, 1, i)) == i);
  auto mt = mixed_tensor_module(2, 3, 3);
  CHECK(validate(mt).ok);
  CHECK_FALSE(mt.twisted);
  // c_{1,1} on x_0 (x) x_0^* is 1, on x_0 (x) x_1^* is 0
  Matrix c = t.contraction(1, 1, 1, 1);
  CHECK(c.at(0, t.index(1, 1, {0, 0})) == 1);
  CHECK(c.col(t.index(1, 1, {0, 1})).empty());
}

TEST_CASE("schur_apply examples") {
  CHECK(total(schur_apply(point_module(1, 1, 1, 1), 2)) == 4);
  CHECK(total(schur_apply(FbFbModule(3, 3), 2)) == 0);
  FbFbModule sgn(2, 2);
  sgn.set(2, 0, GroupAction(1, {2, 0}, {Q(-1) * Matrix::identity(1)}));
  CHECK(total(schur_apply(sgn, 2)) == 1);
  CHECK(total(schur_apply(sgn, 1)) == 0);
  auto w = by_weight(schur_apply(point_module(2, 1, 2, 2), 2));
  CHECK(w == std::map<int, int>{{1, 6}});
}

TEST_CASE("schur_apply against the character formula") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 8; ++trial) {
    FbFbModule f = testing::random_module(rng, 3, 2);
    for (int d = 0; d <= 3; ++d) {
      auto dims = schur_apply(f, d);
      for (const auto& [b, g] : f.spaces()) {
        auto it = dims.find(b);
        int got = it == dims.end() ? 0 : it->second;
        CHECK(got == character_dim(g, b.first, b.second, d));
      }
    }
  }
}

TEST_CASE("schur_apply is additive and the regular module gives all tensors") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    FbFbModule a = testing::random_module(rng, 2, 2), b = testing::random_module(rng, 2, 2);
    CHECK(total(schur_apply(direct_sum(a, b), 2)) == total(schur_apply(a, 2)) + total(schur_apply(b, 2)));
  }
  auto reg = schur_apply(regular_module(2, 2), 3);
  for (const auto& [b, x] : reg) CHECK(Q(x) == power(3, b.first + b.second));
}

TEST_CASE("schur_koszul degenerate cases") {
  WbModule m;
  m.underlying = regular_module(2, 2);
  m.twisted = true;
  for (const auto& [w, c] : schur_koszul(m, 2))
    for (const auto& [k, d] : c.d) CHECK(d.is_zero());
  WbModule l = build_ltfb(com_operad(3), 3, 3, 3);
  for (const auto& [w, c] : schur_koszul(l, 0))
    for (const auto& [k, x] : c.dim) {
      bool origin = w == 0 && k == 0;
      CHECK(x == (origin ? l.dim(0, 0) : 0));
    }
}

TEST_CASE("schur_koszul squares to zero") {
  for (const auto& o : {rational_operad(), com_operad(3), n3_operad()})
    for (int d = 1; d <= 2; ++d)
      for (const auto& [w, c] : schur_koszul(build_ltfb(o, 4, 2, 2), d)) check_d_squared(c, o.name);
}

TEST_CASE("DG Lie algebra of A = Q") {
  auto l1 = build_dglie(rational_operad(), 1, 3);
  REQUIRE(l1.ders() == 1);
  REQUIRE(l1.wheel_elems() == 1);
  CHECK(l1.bracket_of(unit_vec(0), unit_vec(0)).empty());
  CHECK(l1.div(unit_vec(0)) == unit_vec(0));
  CHECK(l1.act(unit_vec(0), unit_vec(0)).empty());

  // gl_2: a one-dimensional center spanned by a trace-nonzero element, the
  // derived algebra is the kernel of the divergence and has nondegenerate
  // Killing form (sl_2).
  auto l = build_dglie(rational_operad(), 2, 3);
  REQUIRE(l.ders() == 4);
  REQUIRE(l.wheel_elems() == 1);
  auto ad = adjoint(l);
  Matrix all_ad = hstack(ad, 4);
  CHECK(rank(all_ad) == 3);
  Matrix stacked(16, 4);  // x -> [e_i, x] for all i
  for (int j = 0; j < 4; ++j)
    for (int i = 0; i < 4; ++i)
      for (const auto& [r, v] : ad[i].col(j)) stacked.set(4 * i + r, j, v);
  Matrix center = kernel_basis(stacked);
  REQUIRE(center.cols() == 1);
  CHECK_FALSE(l.div(center.col(0)).empty());
  Matrix divm(1, 4);
  for (int i = 0; i < 4; ++i) divm.col(i) = l.div(unit_vec(i));
  auto image = rank_kernel_image(all_ad).image;
  for (int j = 0; j < image.cols(); ++j) CHECK(divm.apply(image.col(j)).empty());
  Matrix killing(3, 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      Matrix x(4, 4), y(4, 4);
      for (int i = 0; i < 4; ++i) {
        x.col(i) = l.bracket_of(image.col(a), unit_vec(i));
        y.col(i) = l.bracket_of(image.col(b), unit_vec(i));
      }
      killing.set(a, b, trace(x * y));
    }
  CHECK(rank(killing) == 3);
}

TEST_CASE("DG Lie algebra of the zero operad") {
  auto l = build_dglie(zero_operad(3), 2, 3);
  CHECK(l.ders() == 0);
  CHECK(l.wheel_elems() == 0);
}

TEST_CASE("DG Lie identities for shipped operads") {
  for (const auto& o : {rational_operad(), com_operad(3), ass_operad(3), n3_operad()})
    for (int d = 1; d <= 2; ++d) {
      auto l = build_dglie(o, d, 3);
      CHECK_MESSAGE(l.check_jacobi().ok, o.name << " d=" << d);
      CHECK_MESSAGE(l.check_module().ok, o.name << " d=" << d);
      CHECK_MESSAGE(l.check_cocycle().ok, o.name << " d=" << d);
    }
}

TEST_CASE("CE complex examples") {
  TruncatedDgLie zero;
  auto cz = ce_complex(zero, 3);
  REQUIRE(cz.count(0));
  CHECK(homology(cz.at(0)) == std::map<int, int>{{0, 1}});

  TruncatedDgLie ab;
  ab.der_weight = {0};
  auto ca = ce_complex(ab, 3, false);
  auto h = homology(ca.at(0));
  CHECK(h[0] == 1);
  CHECK(h[1] == 1);

  // A = Q, d = 1: L0 = Q D, L_{-1} = Q w, div D = w. With p + q <= 3 factors
  // the terms are w^q (degree 0, q <= 3) and D w^q (degree 1, q <= 2), and
  // D w^q -> +-w^{q+1} is injective.
  ChainComplex oracle;
  oracle.dim = {{0, 4}, {1, 3}};
  Matrix d1(4, 3);
  for (int q = 0; q < 3; ++q) d1.set(q + 1, q, Q(1));
  oracle.d[1] = d1;
  auto want = homology(oracle);
  auto l = build_dglie(rational_operad(), 1, 3);
  auto wheeled = ce_complex(l, 3);
  CHECK(wheeled.at(0).term(0) == 4);
  CHECK(wheeled.at(0).term(1) == 3);
  auto got = homology(wheeled.at(0));
  CHECK(got[0] == want[0]);
  CHECK(got[1] == want[1]);
  CHECK(got[0] == 1);
  CHECK(got[1] == 0);
  auto plain = homology(ce_complex(l, 3, false).at(0));
  CHECK(plain[0] == 1);
  CHECK(plain[1] == 1);
}

TEST_CASE("ce_compare") {
  CHECK(ce_compare(zero_operad(3), 2, 3, 3).ok);
  for (int d = 1; d <= 2; ++d) {
    auto rep = ce_compare(rational_operad(), d, 3, 3);
    CHECK_MESSAGE(rep.ok, (rep.failures.empty() ? "" : rep.failures[0]));
  }
  auto com = ce_compare(com_operad(3), 1, 3, 3);
  CHECK(com.ok);
  auto n3 = ce_compare(n3_operad(), 2, 2, 2);
  CHECK(n3.ok);
}
