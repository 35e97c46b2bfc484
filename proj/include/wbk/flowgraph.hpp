#pragma once
// Edge-directed graphs with a flow, in a normal form for the half edges:
// X+ = legs 0..legs_in-1 then edge heads, X- = legs 0..legs_out-1 then edge
// tails; edge e pairs X+ label legs_in+e with X- label legs_out+e. Edges run
// from the owner of the tail (its output) to the owner of the head (an input).

#include "wbk/complex.hpp"
#include "wbk/operad.hpp"
#include "wbk/wbcat.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace wbk {

struct FlowGraph {
  int legs_in = 0, legs_out = 0;
  int nv = 0;
  std::vector<int> in_vertex;   // X+ -> V
  std::vector<int> out_vertex;  // X- -> V

  int edges() const { return static_cast<int>(in_vertex.size()) - legs_in; }
  int head(int e) const { return in_vertex[legs_in + e]; }
  int tail(int e) const { return out_vertex[legs_out + e]; }
  // The leg/edge structure as a morphism of uwb((legs_in,legs_out),(|X+|,|X-|)).
  WalledMorphism morphism() const;
  // Output half edge of v, or -1.
  int output_of(int v) const;
  std::vector<int> inputs_of(int v) const;  // increasing
  auto operator<=>(const FlowGraph&) const = default;
};

struct GraphError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Arbitrary (f, p) presentation, 1-based labels in f; p_plus/p_minus map X+/X- to 0..nv-1.
FlowGraph from_morphism(const WalledMorphism& f, int nv, const std::vector<int>& p_plus,
                        const std::vector<int>& p_minus);
Report validate_graph(const FlowGraph& g);

std::vector<std::vector<int>> connected_components(const FlowGraph& g);

enum class FlowClass { TreeWithMinusLeg, TreeWithoutMinusLeg, GenusOne };
struct Classification {
  FlowClass kind;
  int root = -1;            // trees
  std::vector<int> cycle;   // genus one: edges of the directed cycle, in flow order
};
Classification classify(const FlowGraph& g);

// Edge permutation (sigma[e] = image of e) with the induced vertex bijection.
struct GraphIso {
  Perm edges;
  std::vector<int> vertices;
  // The half-edge bijections (alpha+, alpha-) on X+ and X-, legs fixed.
  Perm plus() const;
  Perm minus() const;
  int legs_in = 0, legs_out = 0;
};

// Relabels the edges by sigma and the vertices canonically (outputs first in
// X- order, then the remaining vertices by first appearance along X+).
FlowGraph relabel(const FlowGraph& g, const Perm& sigma, std::vector<int>* vertex_map = nullptr);
FlowGraph canonical_form(const FlowGraph& g, Perm* sigma = nullptr);
bool is_canonical(const FlowGraph& g);
std::vector<GraphIso> automorphisms(const FlowGraph& g);

// Removes edge e and merges its endpoints. Throws GraphError if the merged
// vertex would have no half edges left.
FlowGraph contract_edge(const FlowGraph& g, int e, std::vector<int>* vertex_map = nullptr);

struct GraphClass {
  FlowGraph graph;  // canonical
  std::vector<GraphIso> automorphisms;
};
// All non-empty flow graphs with the given legs, up to isomorphism fixing the
// legs. Vertices with no input half edge are skipped unless allow_sources.
std::vector<GraphClass> enumerate(int legs_in, int legs_out, int max_vertices, int max_edges,
                                  bool allow_sources = false);

std::string serialize(const FlowGraph& g);
FlowGraph parse_graph(const std::string& text);
std::string to_dot(const FlowGraph& g);

// The wheeled hairy flow-graph complex with legs (legs_in, legs_out): vertices
// with an output carry O(inputs), the others |delta11 O|(inputs), and closed
// wheels carry |delta11 O|(0); vertices + closed wheels <= max_vertices.
// Orientation: the O-vertices in X- order. Graded by edge count.
struct GraphComplex {
  ChainComplex complex;
  // Per degree, the basis: graph index into classes[degree], the lifted
  // decoration (one basis element per vertex) and the closed-wheel multiset.
  struct Cell {
    int graph = -1;
    std::vector<int> decoration;
    std::vector<int> closed;
  };
  std::map<int, std::vector<GraphClass>> classes;
  std::map<int, std::vector<Cell>> basis;
};
GraphComplex graph_complex(const TruncatedOperad& o, int legs_in, int legs_out, int max_vertices, int max_edges);

struct GraphCompareRow {
  int edges = 0;
  int graph_dim = 0, koszul_dim = 0;
  int graph_homology = 0, koszul_homology = 0;
};
struct GraphCompareReport {
  bool ok = true;
  bool intertwiner = false;  // explicit chain isomorphism verified
  std::vector<GraphCompareRow> rows;
  std::vector<std::string> failures;
};
// Compares with koszul_down of build_ltfb(o) at output (legs_in, legs_out),
// using the factor bound max_vertices.
GraphCompareReport compare(const TruncatedOperad& o, int legs_in, int legs_out, int max_vertices, int max_edges);

}  // namespace wbk
