#include "doctest.h"
#include "wbk/examples.hpp"
#include "wbk/flowgraph.hpp"
#include "wbk/koszul.hpp"
#include "wbk/ltfb.hpp"

#include <set>

using namespace wbk;

namespace {

// Half-edge lists: in_vertex / out_vertex, legs first.
FlowGraph graph(int li, int lo, int nv, std::vector<int> in, std::vector<int> out) {
  FlowGraph g;
  g.legs_in = li, g.legs_out = lo, g.nv = nv;
  g.in_vertex = std::move(in);
  g.out_vertex = std::move(out);
  REQUIRE(validate_graph(g).ok);
  return g;
}

// The component of g containing vertex set vs, legs renumbered.
FlowGraph restrict_to(const FlowGraph& g, const std::vector<int>& vs) {
  std::vector<int> vmap(g.nv, -1);
  for (size_t i = 0; i < vs.size(); ++i) vmap[vs[i]] = static_cast<int>(i);
  FlowGraph h;
  h.nv = static_cast<int>(vs.size());
  for (int i = 0; i < g.legs_in; ++i)
    if (vmap[g.in_vertex[i]] >= 0) h.in_vertex.push_back(vmap[g.in_vertex[i]]), ++h.legs_in;
  for (int j = 0; j < g.legs_out; ++j)
    if (vmap[g.out_vertex[j]] >= 0) h.out_vertex.push_back(vmap[g.out_vertex[j]]), ++h.legs_out;
  for (int e = 0; e < g.edges(); ++e)
    if (vmap[g.head(e)] >= 0) {
      h.in_vertex.push_back(vmap[g.head(e)]);
      h.out_vertex.push_back(vmap[g.tail(e)]);
    }
  return h;
}

// Number of graphs with labeled edges and unlabeled sinks-only vertices:
// every X+ half edge goes to one of the output-owning vertices or to a
// wheel vertex, wheel vertices counted as a set partition block.
long long labeled_count(int li, int lo, int r, int max_v, bool allow_sources) {
  int n = lo + r, m = li + r;
  long long count = 0;
  std::vector<int> a(m);
  std::function<void(int)> rec = [&](int x) {
    if (x == m) {
      std::set<int> blocks;
      std::set<int> hit;
      for (int v : a) (v < n ? hit : blocks).insert(v);
      if (!allow_sources && static_cast<int>(hit.size()) != n) return;
      // wheel labels n..n+m-1 are unlabeled: count each partition once by
      // requiring first-appearance order
      int next = n;
      for (int v : a)
        if (v >= n) {
          if (v > next) return;
          if (v == next) ++next;
        }
      if (next > max_v) return;
      ++count;
      return;
    }
    for (int v = 0; v < n + m; ++v) {
      a[x] = v;
      rec(x + 1);
    }
  };
  if (n + 0 > max_v) return 0;
  rec(0);
  return count;
}

}  // namespace

TEST_CASE("connected components") {
  CHECK(connected_components(graph(1, 1, 1, {0}, {0})).size() == 1);
  CHECK(connected_components(graph(2, 2, 2, {0, 1}, {0, 1})).size() == 2);
  // v1 -> v0 along one edge
  CHECK(connected_components(graph(1, 1, 2, {1, 0}, {0, 1})).size() == 1);
}

TEST_CASE("trichotomy examples") {
  auto c1 = classify(graph(1, 1, 1, {0}, {0}));
  CHECK(c1.kind == FlowClass::TreeWithMinusLeg);
  CHECK(c1.root == 0);
  auto loop = classify(graph(0, 0, 1, {0}, {0}));
  CHECK(loop.kind == FlowClass::GenusOne);
  CHECK(loop.cycle == std::vector<int>{0});
  // path v0 -> v1, v0 has a + leg, no - leg anywhere: v1 has no output
  auto path = classify(graph(1, 0, 2, {0, 1}, {0}));
  CHECK(path.kind == FlowClass::TreeWithoutMinusLeg);
  CHECK(path.root == 1);
  CHECK_THROWS_AS(classify(graph(2, 2, 2, {0, 1}, {0, 1})), GraphError);
}

TEST_CASE("automorphism examples") {
  CHECK(automorphisms(graph(0, 0, 1, {0}, {0})).size() == 1);
  auto two = automorphisms(graph(0, 0, 2, {0, 1}, {0, 1}));
  CHECK(two.size() == 2);
  CHECK(two[1].vertices == std::vector<int>{1, 0});
  CHECK(two[1].plus() == Perm{1, 0});
  CHECK(automorphisms(graph(2, 1, 1, {0, 0}, {0})).size() == 1);
  // two parallel edges into a wheel vertex from two leaves with + legs
  FlowGraph cherry = graph(2, 0, 3, {0, 1, 2, 2}, {0, 1});
  CHECK(automorphisms(cherry).size() == 1);
  FlowGraph bare_cherry = graph(0, 0, 3, {2, 2}, {0, 1});
  CHECK(automorphisms(bare_cherry).size() == 2);
}

TEST_CASE("edge contraction examples") {
  // leaf v1 (one + leg) -> v0 (one - leg)
  FlowGraph path = graph(1, 1, 2, {1, 0}, {0, 1});
  FlowGraph c = contract_edge(path, 0);
  CHECK(c.nv == 1);
  CHECK(c.edges() == 0);
  CHECK(c.in_vertex == std::vector<int>{0});
  CHECK(c.out_vertex == std::vector<int>{0});
  // directed 2-cycle, each vertex also carries a + leg
  FlowGraph cyc = graph(2, 0, 2, {0, 1, 1, 0}, {0, 1});
  FlowGraph c2 = contract_edge(cyc, 0);
  CHECK(c2.edges() == 1);
  CHECK(c2.nv == 1);
  auto k = classify(c2);
  CHECK(k.kind == FlowClass::GenusOne);
  CHECK(k.cycle.size() == 1);
  // bare edge between two otherwise empty vertices
  FlowGraph bare = graph(0, 0, 2, {1}, {0});
  CHECK_THROWS_AS(contract_edge(bare, 0), GraphError);
}

TEST_CASE("enumeration examples") {
  CHECK(enumerate(1, 1, 2, 0).size() == 1);
  CHECK(enumerate(1, 1, 2, 0, true).size() == 2);
  auto wheel = enumerate(0, 0, 1, 1);
  REQUIRE(wheel.size() == 1);
  CHECK(wheel[0].graph.edges() == 1);
  CHECK(enumerate(0, 0, 3, 0).empty());
}

TEST_CASE("enumeration is complete: orbit counting against labeled graphs") {
  for (int li = 0; li <= 2; ++li)
    for (int lo = 0; lo <= 2; ++lo)
      for (int sources = 0; sources < 2; ++sources) {
        auto cls = enumerate(li, lo, 3, 3, sources);
        std::map<int, Q> weighted;
        for (const auto& c : cls) weighted[c.graph.edges()] += Q(static_cast<long>(factorial(c.graph.edges()))) / Q(static_cast<long>(c.automorphisms.size()));
        for (int r = 0; r <= 3; ++r) {
          long long want = labeled_count(li, lo, r, 3, sources);
          if (li == 0 && lo == 0 && r == 0) want -= 1;  // the empty graph
          CHECK_MESSAGE(weighted[r] == Q(static_cast<long>(want)), "legs " << li << "," << lo << " r " << r);
        }
      }
}

TEST_CASE("flow graph invariants over the enumeration") {
  for (int li = 0; li <= 2; ++li)
    for (int lo = 0; lo <= 2; ++lo)
      for (const auto& c : enumerate(li, lo, 4, 4, true)) {
        const FlowGraph& g = c.graph;
        REQUIRE(validate_graph(g).ok);
        for (const auto& comp : connected_components(g)) {
          FlowGraph h = restrict_to(g, comp);
          CHECK(h.legs_out <= 1);
          Classification k = classify(h);
          bool tree = h.edges() == h.nv - 1;
          CHECK(tree == (k.kind != FlowClass::GenusOne));
          if (k.kind == FlowClass::GenusOne) CHECK(!k.cycle.empty());
        }
        for (int e = 0; e < g.edges(); ++e) {
          int u = g.tail(e), v = g.head(e);
          auto fiber = [&](int w) { return static_cast<int>(g.inputs_of(w).size()) + (g.output_of(w) >= 0 ? 1 : 0); };
          int merged = u == v ? fiber(u) - 2 : fiber(u) + fiber(v) - 2;
          if (merged == 0) {
            CHECK_THROWS_AS(contract_edge(g, e), GraphError);
            continue;
          }
          FlowGraph h = contract_edge(g, e);
          CHECK(validate_graph(h).ok);
          CHECK(h.edges() == g.edges() - 1);
        }
        for (const auto& a : c.automorphisms) CHECK(relabel(g, a.edges) == g);
      }
}

TEST_CASE("graph serialization") {
  FlowGraph g = graph(2, 0, 2, {0, 1, 1, 0}, {0, 1});
  CHECK(parse_graph(serialize(g)) == g);
  CHECK(to_dot(g).find("v0 -> v1") != std::string::npos);
  CHECK_THROWS_AS(parse_graph("wbk-graph 1\nlegs 0 0\nvertices 1\nedges 1\nplus 0\nminus 1\n"), GraphError);
  WalledMorphism f = g.morphism();
  CHECK(f.valid());
  CHECK(from_morphism(f, g.nv, g.in_vertex, g.out_vertex) == g);
}

TEST_CASE("graph complex of the zero operad") {
  TruncatedOperad z = zero_operad(3);
  auto gc = graph_complex(z, 1, 1, 3, 3);
  for (const auto& [r, d] : gc.complex.dim) CHECK(d == 0);
  auto unit = graph_complex(z, 0, 0, 3, 3);
  CHECK(unit.complex.term(0) == 1);
  CHECK(compare(z, 0, 0, 3, 3).ok);
}

TEST_CASE("graph complex matches the Koszul complex for A = Q, legs (0,0)") {
  TruncatedOperad a = rational_operad();
  auto gc = graph_complex(a, 0, 0, 4, 4);
  check_d_squared(gc.complex, "graph");
  FactorModel fm(a, 4, 4, 4);
  ChainComplex kc = koszul_down(fm.build(true), 0, 0);
  for (int r = 0; r <= 4; ++r) CHECK(gc.complex.term(r) == kc.term(r));
  auto rep = compare(a, 0, 0, 4, 4);
  CHECK(rep.ok);
  CHECK(rep.intertwiner);
}

TEST_CASE("graph complex compare for shipped operads") {
  for (const auto& o : {rational_operad(), n3_operad(), ass_operad(3), com_operad(3)})
    for (int li = 0; li <= 2; ++li)
      for (int lo = 0; lo <= 2; ++lo) {
        auto rep = compare(o, li, lo, 3, 3);
        CHECK_MESSAGE(rep.ok, o.name << " legs " << li << "," << lo << ": "
                                     << (rep.failures.empty() ? "" : rep.failures[0]));
        CHECK(rep.intertwiner);
      }
}
