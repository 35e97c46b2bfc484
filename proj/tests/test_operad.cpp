#include "doctest.h"
#include "wbk/examples.hpp"
#include "wbk/io.hpp"

#include <functional>
#include <numeric>
#include <string>

using namespace wbk;

namespace {

std::string fixture(const std::string& f) { return std::string(WBK_DATA_DIR) + "/" + f; }

std::vector<std::pair<std::string, TruncatedOperad>> shipped() {
  return {{"zero.opd", zero_operad(3)},
          {"assoc_Q.opd", rational_operad()},
          {"n3.opd", n3_operad()},
          {"ass_le3.opd", ass_operad(3)},
          {"com_le3.opd", com_operad(3)}};
}

}  // namespace

TEST_CASE("shipped fixtures parse, match the builders, and validate") {
  for (const auto& [file, built] : shipped()) {
    CAPTURE(file);
    TruncatedOperad o = load_operad(fixture(file));
    CHECK(o.max_arity == built.max_arity);
    for (int k = 0; k <= o.max_arity; ++k) {
      CHECK(o.dim(k) == built.dim(k));
      CHECK(o.arity[k].gens() == built.arity[k].gens());
    }
    CHECK(o.comp == built.comp);
    Report r = validate_operad(o);
    CHECK_MESSAGE(r.ok, r.message);
  }
}

TEST_CASE("perturbed operad fails with the violated triple") {
  TruncatedOperad o = ass_operad(3);
  Matrix a = o.comp.at({2, 1, 2});
  a.set(0, 1, a.at(0, 1) + 1);
  o.comp[{2, 1, 2}] = a;
  Report r = validate_operad(o);
  CHECK_FALSE(r.ok);
  CHECK(r.message.find("(2,1,2)") != std::string::npos);

  TruncatedOperad q = rational_operad();
  q.comp[{1, 1, 1}] = Matrix::from_dense({{Q(2)}});
  CHECK(validate_operad(q).ok);  // 2xy is still associative
  TruncatedOperad n = n3_operad();
  Matrix b = n.comp.at({1, 1, 1});
  b.set(0, 1 * 3 + 2, 1);  // e23 e13 = e12 breaks associativity
  n.comp[{1, 1, 1}] = b;
  r = validate_operad(n);
  CHECK_FALSE(r.ok);
  CHECK(r.message.find("sequential") != std::string::npos);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_operad("wbk-operad 2\n"), ParseError);
  CHECK_THROWS_AS(parse_operad("wbk-operad 1\nmax-arity 2\narity 2 dim 2\ngenerator 2 1\n0 1 0\n1 0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_operad("wbk-operad 1\nmax-arity 1\narity 1 dim 1\ncompose 1 1 1\nx\n"), ParseError);
  try {
    parse_operad("wbk-operad 1\nmax-arity 1\nbogus 3\n");
    FAIL("no throw");
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.column == 1);
  }
  // involution check on a supplied generator
  CHECK_THROWS(parse_operad("wbk-operad 1\nmax-arity 2\narity 2 dim 1\ngenerator 2 1\n2\n"));
}

TEST_CASE("operad text round trip") {
  for (const auto& [file, built] : shipped()) {
    std::string a = write_operad(built, true);
    CHECK(write_operad(parse_operad(a), true) == a);
  }
}

TEST_CASE("module text round trip") {
  WbModule d = representable(Direction::Down, 2, 3, true, 3, 3);
  std::string s = write_module(d);
  WbModule e = parse_module(s);
  CHECK(write_module(e) == s);
  CHECK(e.structure == d.structure);
  CHECK(validate(e).ok);
}

TEST_CASE("block permutation") {
  // sigma = (1 2) in S_2, inserting 2 inputs at slot 1: [a a b] -> [b a a]
  CHECK(block_perm({1, 0}, 1, 2) == Perm{1, 2, 0});
  CHECK(block_perm({1, 0}, 2, 2) == Perm{2, 0, 1});
  CHECK(block_perm({0, 1, 2}, 2, 3) == identity_perm(5));
  CHECK(block_perm({1, 0, 2}, 3, 0) == Perm{1, 0});
}

TEST_CASE("completion by equivariance reproduces block substitution") {
  TruncatedOperad full = ass_operad(3);
  TruncatedOperad part = full;
  for (auto it = part.comp.begin(); it != part.comp.end();)
    it = std::get<1>(it->first) != 1 ? part.comp.erase(it) : std::next(it);
  part.complete_by_equivariance();
  CHECK(part.comp == full.comp);
}

TEST_CASE("wheeled components") {
  WheeledComponent wq = wheeled_component(rational_operad());
  CHECK(wq.dim(0) == 1);
  WheeledComponent wn = wheeled_component(n3_operad());
  CHECK(wn.dim(0) == 2);
  // e13 = [e12, e23] dies, e12 and e23 survive
  CHECK(wn.projection(0).apply(unit_vec(2)).empty());
  WheeledComponent wz = wheeled_component(zero_operad(3));
  for (int k = 0; k <= 2; ++k) CHECK(wz.dim(k) == 0);
  WheeledComponent wc = wheeled_component(com_operad(3));
  for (int k = 0; k <= 2; ++k) CHECK(wc.dim(k) == 1);
  for (const auto& [file, o] : shipped()) {
    CAPTURE(file);
    Report r = validate_wheel_action(o, wheeled_component(o));
    CHECK_MESSAGE(r.ok, r.message);
  }
}

TEST_CASE("wheel quotient of Ass agrees with word classes") {
  // Independent oracle: a basis word of Ass(k+1) reads L * R around the marked
  // last input. Gluing a = u*v into b = p*q gives (up, qv); the other order gives
  // (pu, vq). Classes of the generated equivalence relation index the quotient.
  TruncatedOperad o = ass_operad(3);
  WheeledComponent w = wheeled_component(o);
  for (int k = 0; k <= 2; ++k) {
    auto words = all_perms(k + 1);
    std::sort(words.begin(), words.end());
    int nw = static_cast<int>(words.size());
    std::vector<int> parent(nw);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    auto index = [&](const Perm& x) { return static_cast<int>(std::lower_bound(words.begin(), words.end(), x) - words.begin()); };
    for (int a = 0; a < nw; ++a) {
      const Perm& x = words[a];
      int star = static_cast<int>(std::find(x.begin(), x.end(), k) - x.begin());
      Perm L(x.begin(), x.begin() + star), R(x.begin() + star + 1, x.end());
      for (size_t i = 0; i <= L.size(); ++i)
        for (size_t j = 0; j <= R.size(); ++j) {
          Perm u(L.begin(), L.begin() + i), pp(L.begin() + i, L.end());
          Perm qq(R.begin(), R.begin() + j), v(R.begin() + j, R.end());
          Perm y = pp;
          y.insert(y.end(), u.begin(), u.end());
          y.push_back(k);
          y.insert(y.end(), v.begin(), v.end());
          y.insert(y.end(), qq.begin(), qq.end());
          parent[find(a)] = find(index(y));
        }
    }
    int classes = 0;
    for (int a = 0; a < nw; ++a) classes += find(a) == a;
    CHECK(w.dim(k) == classes);
    for (int a = 0; a < nw; ++a)
      for (int b = 0; b < nw; ++b)
        CHECK((w.projection(k).apply(unit_vec(a)) == w.projection(k).apply(unit_vec(b))) == (find(a) == find(b)));
  }
}

TEST_CASE("unit image in the wheeled component is computed honestly") {
  TruncatedOperad o = load_operad(fixture("assoc_Q.opd"));
  o.unit = unit_vec(0);
  WheeledComponent w = wheeled_component(o);
  SVec img = unit_wheel_image(o, w, *o.unit);
  CHECK(img == unit_vec(0));  // pi_0(1) = 1 in |Q| = Q, not zero
}
