#include "doctest.h"
#include "wbk/examples.hpp"
#include "wbk/ltfb.hpp"

using namespace wbk;

namespace {

std::vector<TruncatedOperad> shipped() {
  return {zero_operad(3), rational_operad(), n3_operad(), ass_operad(3), com_operad(3)};
}

// O at (k,1) and |delta11 O| at (k,0) as plain FB x FB modules.
FbFbModule operad_module(const TruncatedOperad& o, int mm, int nn) {
  FbFbModule f(mm, nn);
  for (int k = 0; k <= std::min(o.max_arity, mm); ++k)
    if (o.dim(k)) f.set(k, 1, GroupAction(o.dim(k), {k, 1}, o.arity[k].gens()));
  return f;
}

FbFbModule wheel_module(const WheeledComponent& w, int mm, int nn) {
  FbFbModule f(mm, nn);
  for (int k = 0; k <= std::min(w.max_arity, mm); ++k)
    if (w.dim(k)) f.set(k, 0, GroupAction(w.dim(k), {k, 0}, w.arity[k].gens()));
  return f;
}

}  // namespace

TEST_CASE("ltfb and stfb validate for the shipped operads") {
  for (const auto& o : shipped()) {
    CAPTURE(o.name);
    WbModule l = build_ltfb(o, 4, 4);
    Report r = validate(l);
    CHECK_MESSAGE(r.ok, r.message);
    WbModule s = build_stfb(o, 4, 4);
    r = validate(s);
    CHECK_MESSAGE(r.ok, r.message);
    r = validate(sign_twist_module(s));
    CHECK_MESSAGE(r.ok, r.message);
  }
}

TEST_CASE("ltfb dimensions agree with the generic Day-product construction") {
  for (const auto& o : shipped()) {
    CAPTURE(o.name);
    const int P = 4, Qn = 4, V = 4;
    FactorModel model(o, P, Qn, V);
    FbFbModule O = operad_module(o, P, Qn);
    FbFbModule W = wheel_module(model.wheels(), P, Qn);
    std::vector<std::vector<int>> expect(P + 1, std::vector<int>(Qn + 1, 0));
    for (int a = 0; a <= V; ++a)
      for (int b = 0; a + b <= V; ++b) {
        FbFbModule t = day_convolve(ext_power(O, a), sym_power(W, b));
        for (int m = 0; m <= P; ++m)
          for (int n = 0; n <= Qn; ++n) expect[m][n] += t.dim(m, n);
      }
    WbModule l = model.build(true);
    for (int m = 0; m <= P; ++m)
      for (int n = 0; n <= Qn; ++n) {
        CAPTURE(m);
        CAPTURE(n);
        CHECK(l.dim(m, n) == expect[m][n]);
        CHECK(static_cast<int>(model.basis(m, n).size()) == expect[m][n]);
      }
  }
}

TEST_CASE("Lambda signs intertwine ltfb with the twisted stfb") {
  for (const auto& o : shipped()) {
    CAPTURE(o.name);
    FactorModel model(o, 4, 4);
    WbModule l = model.build(true);
    WbModule t = sign_twist_module(model.build(false));
    for (int m = 0; m <= 4; ++m)
      for (int n = 0; n <= 4; ++n) {
        const auto& b = model.basis(m, n);
        if (b.empty()) continue;
        Matrix phi(static_cast<int>(b.size()), static_cast<int>(b.size()));
        for (size_t i = 0; i < b.size(); ++i) phi.set(static_cast<int>(i), static_cast<int>(i), lambda_sign(b[i]));
        const GroupAction* gl = l.underlying.at(m, n);
        const GroupAction* gt = t.underlying.at(m, n);
        for (size_t g = 0; g < gl->gens().size(); ++g) CHECK(phi * gl->gens()[g] == gt->gens()[g] * phi);
        if (!m || !n || model.basis(m - 1, n - 1).empty()) continue;
        const auto& lo = model.basis(m - 1, n - 1);
        Matrix phi1(static_cast<int>(lo.size()), static_cast<int>(lo.size()));
        for (size_t i = 0; i < lo.size(); ++i) phi1.set(static_cast<int>(i), static_cast<int>(i), lambda_sign(lo[i]));
        for (auto [x, y] : pair1(m, n)) CHECK(phi1 * l.map(m, n, x, y) == t.map(m, n, x, y) * phi);
      }
  }
}

TEST_CASE("A = Q at (2,2)") {
  FactorModel model(rational_operad(), 4, 4);
  WbModule l = model.build(true);
  int lambda2 = 0;
  for (const auto& mono : model.basis(2, 2)) lambda2 += mono.closed.empty() && mono.wheels.empty();
  CHECK(lambda2 == 2);
  Monomial ident{{Factor{{0}, 0}, Factor{{1}, 0}}, {}, {}};
  Monomial cross{{Factor{{1}, 0}, Factor{{0}, 0}}, {}, {}};
  Matrix c = l.map(2, 2, 2, 2);
  // pi-type: the second factor closes into a wheel
  Monomial pi{{Factor{{0}, 0}}, {}, {0}};
  SVec got = c.apply(unit_vec(model.index(2, 2, ident)));
  CHECK(got.size() == 1);
  CHECK(got[0].first == model.index(1, 1, pi));
  // mu-type: the product a.a
  Monomial mu{{Factor{{0}, 0}}, {}, {}};
  got = c.apply(unit_vec(model.index(2, 2, cross)));
  CHECK(got.size() == 1);
  CHECK(got[0].first == model.index(1, 1, mu));
}

TEST_CASE("stfb arity part and zero operad") {
  for (const auto& o : shipped()) {
    FactorModel model(o, 4, 4);
    for (int m = 0; m <= 3; ++m) {
      int single = 0;
      for (const auto& mono : model.basis(m, 1)) single += mono.closed.empty() && mono.wheels.empty();
      CHECK(single == o.dim(m));
    }
  }
  WbModule z = build_ltfb(zero_operad(3), 4, 4);
  CHECK(z.dim(0, 0) == 1);
  CHECK(z.underlying.spaces().size() == 1);
}
