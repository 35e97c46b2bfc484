#include "wbk/flowgraph.hpp"

#include "wbk/koszul.hpp"
#include "wbk/ltfb.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace wbk {

WalledMorphism FlowGraph::morphism() const {
  WalledMorphism f;
  f.m = legs_in, f.n = legs_out;
  f.p = static_cast<int>(in_vertex.size()), f.q = static_cast<int>(out_vertex.size());
  for (int i = 1; i <= legs_in; ++i) f.left.push_back(i);
  for (int j = 1; j <= legs_out; ++j) f.right.push_back(j);
  for (int e = 0; e < edges(); ++e) f.pairing.emplace_back(legs_in + e + 1, legs_out + e + 1);
  return f;
}

int FlowGraph::output_of(int v) const {
  for (size_t y = 0; y < out_vertex.size(); ++y)
    if (out_vertex[y] == v) return static_cast<int>(y);
  return -1;
}

std::vector<int> FlowGraph::inputs_of(int v) const {
  std::vector<int> out;
  for (size_t x = 0; x < in_vertex.size(); ++x)
    if (in_vertex[x] == v) out.push_back(static_cast<int>(x));
  return out;
}

FlowGraph from_morphism(const WalledMorphism& f, int nv, const std::vector<int>& p_plus,
                        const std::vector<int>& p_minus) {
  if (!f.valid()) throw GraphError("invalid walled morphism " + f.str());
  if (static_cast<int>(p_plus.size()) != f.p || static_cast<int>(p_minus.size()) != f.q)
    throw GraphError("vertex maps do not match the half edges");
  FlowGraph g;
  g.legs_in = f.m, g.legs_out = f.n, g.nv = nv;
  for (int i = 0; i < f.m; ++i) g.in_vertex.push_back(p_plus[f.left[i] - 1]);
  for (int j = 0; j < f.n; ++j) g.out_vertex.push_back(p_minus[f.right[j] - 1]);
  for (auto [x, y] : f.pairing) {
    g.in_vertex.push_back(p_plus[x - 1]);
    g.out_vertex.push_back(p_minus[y - 1]);
  }
  return g;
}

Report validate_graph(const FlowGraph& g) {
  Report r;
  if (g.edges() < 0 || static_cast<int>(g.out_vertex.size()) - g.legs_out != g.edges()) {
    r.fail("half edge counts do not match the legs and edges");
    return r;
  }
  std::vector<int> seen(g.nv, 0), outs(g.nv, 0);
  for (int v : g.in_vertex) {
    if (v < 0 || v >= g.nv) return r.fail("vertex index out of range"), r;
    seen[v] = 1;
  }
  for (int v : g.out_vertex) {
    if (v < 0 || v >= g.nv) return r.fail("vertex index out of range"), r;
    seen[v] = 1;
    if (++outs[v] > 1) return r.fail("flow condition fails at vertex " + std::to_string(v)), r;
  }
  for (int v = 0; v < g.nv; ++v)
    if (!seen[v]) return r.fail("vertex " + std::to_string(v) + " has no half edges"), r;
  return r;
}

std::vector<std::vector<int>> connected_components(const FlowGraph& g) {
  std::vector<int> parent(g.nv);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (int e = 0; e < g.edges(); ++e) parent[find(g.head(e))] = find(g.tail(e));
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < g.nv; ++v) by_root[find(v)].push_back(v);
  std::vector<std::vector<int>> out;
  for (auto& [r, vs] : by_root) out.push_back(std::move(vs));
  std::sort(out.begin(), out.end());
  return out;
}

Classification classify(const FlowGraph& g) {
  if (g.nv == 0 || connected_components(g).size() != 1) throw GraphError("classify needs a connected graph");
  Report ok = validate_graph(g);
  if (!ok.ok) throw GraphError(ok.message);
  Classification c;
  // out_edge[v]: the edge leaving v, if its output is not a leg
  std::vector<int> out_edge(g.nv, -1);
  for (int e = 0; e < g.edges(); ++e) out_edge[g.tail(e)] = e;
  if (g.edges() == g.nv - 1) {
    for (int v = 0; v < g.nv; ++v)
      if (out_edge[v] < 0) c.root = v;
    c.kind = g.output_of(c.root) >= 0 ? FlowClass::TreeWithMinusLeg : FlowClass::TreeWithoutMinusLeg;
    return c;
  }
  c.kind = FlowClass::GenusOne;
  std::vector<int> visited(g.nv, -1);
  int v = 0;
  for (int step = 0; visited[v] < 0; ++step) {
    visited[v] = step;
    v = g.head(out_edge[v]);
  }
  int start = v;
  do {
    c.cycle.push_back(out_edge[v]);
    v = g.head(out_edge[v]);
  } while (v != start);
  return c;
}

Perm GraphIso::plus() const {
  Perm a(legs_in + edges.size());
  for (int i = 0; i < legs_in; ++i) a[i] = i;
  for (size_t e = 0; e < edges.size(); ++e) a[legs_in + e] = legs_in + edges[e];
  return a;
}

Perm GraphIso::minus() const {
  Perm a(legs_out + edges.size());
  for (int i = 0; i < legs_out; ++i) a[i] = i;
  for (size_t e = 0; e < edges.size(); ++e) a[legs_out + e] = legs_out + edges[e];
  return a;
}

FlowGraph relabel(const FlowGraph& g, const Perm& sigma, std::vector<int>* vertex_map) {
  int r = g.edges();
  FlowGraph h;
  h.legs_in = g.legs_in, h.legs_out = g.legs_out, h.nv = g.nv;
  std::vector<int> in(g.in_vertex.size()), out(g.out_vertex.size());
  for (int i = 0; i < g.legs_in; ++i) in[i] = g.in_vertex[i];
  for (int j = 0; j < g.legs_out; ++j) out[j] = g.out_vertex[j];
  for (int e = 0; e < r; ++e) {
    in[g.legs_in + sigma[e]] = g.in_vertex[g.legs_in + e];
    out[g.legs_out + sigma[e]] = g.out_vertex[g.legs_out + e];
  }
  std::vector<int> vmap(g.nv, -1);
  int next = 0;
  for (int v : out) vmap[v] = next++;
  for (int v : in)
    if (vmap[v] < 0) vmap[v] = next++;
  for (int v = 0; v < g.nv; ++v)
    if (vmap[v] < 0) vmap[v] = next++;
  for (int v : in) h.in_vertex.push_back(vmap[v]);
  for (int v : out) h.out_vertex.push_back(vmap[v]);
  if (vertex_map) *vertex_map = std::move(vmap);
  return h;
}

FlowGraph canonical_form(const FlowGraph& g, Perm* sigma) {
  Perm s = identity_perm(g.edges());
  FlowGraph best;
  Perm best_s;
  bool first = true;
  do {
    FlowGraph h = relabel(g, s);
    if (first || h < best) {
      best = std::move(h);
      best_s = s;
      first = false;
    }
  } while (std::next_permutation(s.begin(), s.end()));
  if (sigma) *sigma = best_s;
  return best;
}

bool is_canonical(const FlowGraph& g) { return canonical_form(g) == g; }

std::vector<GraphIso> automorphisms(const FlowGraph& g) {
  std::vector<int> base_map;
  FlowGraph base = relabel(g, identity_perm(g.edges()), &base_map);
  std::vector<int> base_inv(g.nv);
  for (int v = 0; v < g.nv; ++v) base_inv[base_map[v]] = v;
  std::vector<GraphIso> out;
  Perm s = identity_perm(g.edges());
  do {
    std::vector<int> vmap;
    if (relabel(g, s, &vmap) == base) {
      GraphIso a;
      a.edges = s;
      a.legs_in = g.legs_in, a.legs_out = g.legs_out;
      a.vertices.resize(g.nv);
      for (int v = 0; v < g.nv; ++v) a.vertices[v] = base_inv[vmap[v]];
      out.push_back(std::move(a));
    }
  } while (std::next_permutation(s.begin(), s.end()));
  return out;
}

namespace {

// Removes edge e; the tail merges into the head. A vertex left with no half
// edges is dropped (vertex_map entry -1) when allow_empty, else it throws.
FlowGraph remove_edge(const FlowGraph& g, int e, std::vector<int>& vmap, bool allow_empty) {
  if (e < 0 || e >= g.edges()) throw GraphError("no edge " + std::to_string(e));
  int u = g.tail(e), v = g.head(e);
  int x = g.legs_in + e, y = g.legs_out + e;
  std::vector<int> in, out;
  for (int i = 0; i < static_cast<int>(g.in_vertex.size()); ++i)
    if (i != x) in.push_back(g.in_vertex[i] == u ? v : g.in_vertex[i]);
  for (int j = 0; j < static_cast<int>(g.out_vertex.size()); ++j)
    if (j != y) out.push_back(g.out_vertex[j] == u ? v : g.out_vertex[j]);
  bool used = std::count(in.begin(), in.end(), v) || std::count(out.begin(), out.end(), v);
  if (!used && !allow_empty)
    throw GraphError("contracting edge " + std::to_string(e) + " leaves a vertex with no half edges");
  vmap.assign(g.nv, -1);
  int next = 0;
  for (int w = 0; w < g.nv; ++w) {
    if (w == u && u != v) continue;
    if (w == v && !used) continue;
    vmap[w] = next++;
  }
  if (u != v) vmap[u] = vmap[v];
  FlowGraph h;
  h.legs_in = g.legs_in, h.legs_out = g.legs_out, h.nv = next;
  for (int w : in) h.in_vertex.push_back(vmap[w]);
  for (int w : out) h.out_vertex.push_back(vmap[w]);
  return h;
}

}  // namespace

FlowGraph contract_edge(const FlowGraph& g, int e, std::vector<int>* vertex_map) {
  std::vector<int> vmap;
  FlowGraph h = remove_edge(g, e, vmap, false);
  if (vertex_map) *vertex_map = std::move(vmap);
  return h;
}

std::vector<GraphClass> enumerate(int legs_in, int legs_out, int max_vertices, int max_edges, bool allow_sources) {
  std::vector<GraphClass> out;
  for (int r = 0; r <= max_edges; ++r) {
    int n = legs_out + r, m = legs_in + r;
    if (n > max_vertices) break;
    FlowGraph g;
    g.legs_in = legs_in, g.legs_out = legs_out;
    g.out_vertex.resize(n);
    std::iota(g.out_vertex.begin(), g.out_vertex.end(), 0);
    g.in_vertex.assign(m, 0);
    std::function<void(int, int)> assign = [&](int x, int nv) {
      if (x == m) {
        g.nv = nv;
        if (nv == 0) return;
        if (!allow_sources)
          for (int v = 0; v < n; ++v)
            if (std::find(g.in_vertex.begin(), g.in_vertex.end(), v) == g.in_vertex.end()) return;
        if (!is_canonical(g)) return;
        out.push_back({g, automorphisms(g)});
        return;
      }
      for (int v = 0; v < nv + 1 && v < max_vertices; ++v) {
        g.in_vertex[x] = v;
        assign(x + 1, std::max(nv, v + 1));
      }
    };
    assign(0, n);
  }
  return out;
}

std::string serialize(const FlowGraph& g) {
  std::ostringstream os;
  os << "wbk-graph 1\n";
  os << "legs " << g.legs_in << " " << g.legs_out << "\n";
  os << "vertices " << g.nv << "\n";
  os << "edges " << g.edges() << "\n";
  os << "plus";
  for (int v : g.in_vertex) os << " " << v;
  os << "\nminus";
  for (int v : g.out_vertex) os << " " << v;
  os << "\n";
  return os.str();
}

FlowGraph parse_graph(const std::string& text) {
  std::istringstream is(text);
  std::string word;
  int version = 0, r = 0;
  FlowGraph g;
  if (!(is >> word >> version) || word != "wbk-graph" || version != 1) throw GraphError("missing wbk-graph 1 header");
  auto expect = [&](const char* kw) {
    if (!(is >> word) || word != kw) throw GraphError(std::string("expected '") + kw + "'");
  };
  expect("legs");
  is >> g.legs_in >> g.legs_out;
  expect("vertices");
  is >> g.nv;
  expect("edges");
  is >> r;
  expect("plus");
  g.in_vertex.resize(g.legs_in + r);
  for (int& v : g.in_vertex) is >> v;
  expect("minus");
  g.out_vertex.resize(g.legs_out + r);
  for (int& v : g.out_vertex) is >> v;
  if (!is) throw GraphError("truncated graph text");
  Report ok = validate_graph(g);
  if (!ok.ok) throw GraphError(ok.message);
  return g;
}

std::string to_dot(const FlowGraph& g) {
  std::ostringstream os;
  os << "digraph flow {\n";
  for (int v = 0; v < g.nv; ++v) os << "  v" << v << (g.output_of(v) >= 0 ? " [shape=circle];\n" : " [shape=box];\n");
  for (int i = 0; i < g.legs_in; ++i) os << "  in" << i << " [shape=point];\n  in" << i << " -> v" << g.in_vertex[i] << ";\n";
  for (int j = 0; j < g.legs_out; ++j)
    os << "  out" << j << " [shape=point];\n  v" << g.out_vertex[j] << " -> out" << j << ";\n";
  for (int e = 0; e < g.edges(); ++e) os << "  v" << g.tail(e) << " -> v" << g.head(e) << " [label=e" << e << "];\n";
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// Decorated graphs

namespace {

// A decorated graph before normalization: per-vertex decoration vectors, the
// orientation (O-vertices in wedge order) and closed wheels.
struct Term {
  FlowGraph g;
  std::vector<SVec> dec;
  std::vector<int> orient;
  std::vector<int> closed;
  Q coeff = 1;
};

int rearrange_sign(const std::vector<int>& from, const std::vector<int>& to) {
  Perm p(from.size());
  for (size_t i = 0; i < from.size(); ++i)
    p[i] = static_cast<int>(std::find(to.begin(), to.end(), from[i]) - to.begin());
  return perm_sign(p);
}

class Decorations {
 public:
  explicit Decorations(const TruncatedOperad& o) : o_(o), w_(wheeled_component(o)) {}

  const TruncatedOperad& operad() const { return o_; }
  const WheeledComponent& wheels() const { return w_; }

  const GroupAction* space(const FlowGraph& g, int v) const {
    int k = static_cast<int>(g.inputs_of(v).size());
    if (g.output_of(v) >= 0) return k <= o_.max_arity ? &o_.arity[k] : nullptr;
    return k <= w_.max_arity ? &w_.arity[k] : nullptr;
  }
  int vertex_dim(const FlowGraph& g, int v) const {
    const GroupAction* a = space(g, v);
    return a ? a->dim() : 0;
  }
  std::vector<int> dims(const FlowGraph& g) const {
    std::vector<int> d(g.nv);
    for (int v = 0; v < g.nv; ++v) d[v] = vertex_dim(g, v);
    return d;
  }
  static int total(const std::vector<int>& d) {
    int t = 1;
    for (int x : d) t *= x;
    return t;
  }
  static int encode(const std::vector<int>& d, const std::vector<int>& elems) {
    int idx = 0;
    for (size_t v = 0; v < d.size(); ++v) idx = idx * d[v] + elems[v];
    return idx;
  }
  static std::vector<int> decode(const std::vector<int>& d, int idx) {
    std::vector<int> e(d.size());
    for (int v = static_cast<int>(d.size()) - 1; v >= 0; --v) {
      e[v] = idx % d[v];
      idx /= d[v];
    }
    return e;
  }

  // Moves a decorated graph along sigma onto relabel(t.g, sigma); returns the
  // coordinates in the product basis of the relabeled graph.
  SVec transport(const Term& t, const Perm& sigma, FlowGraph& target) const {
    const FlowGraph& g = t.g;
    std::vector<int> vmap;
    target = relabel(g, sigma, &vmap);
    auto new_in = [&](int x) { return x < g.legs_in ? x : g.legs_in + sigma[x - g.legs_in]; };
    std::vector<SVec> dec(target.nv);
    for (int v = 0; v < g.nv; ++v) {
      std::vector<int> labels;
      for (int x : g.inputs_of(v)) labels.push_back(new_in(x));
      Perm rho = sorting_perm(labels);
      SVec vec = t.dec[v];
      if (!is_identity(rho)) vec = space(g, v)->apply(0, rho, std::move(vec));
      dec[vmap[v]] = std::move(vec);
    }
    std::vector<int> seq;
    for (int v : t.orient) seq.push_back(vmap[v]);
    int sign = perm_sign(sorting_perm(seq));
    std::vector<int> d = dims(target);
    // tensor expansion
    std::vector<std::pair<int, Q>> acc{{0, t.coeff * sign}};
    for (int v = 0; v < target.nv; ++v) {
      std::vector<std::pair<int, Q>> next;
      for (const auto& [i, c] : acc)
        for (const auto& [e, c2] : dec[v]) next.emplace_back(i * d[v] + e, c * c2);
      acc = std::move(next);
    }
    SVec out;
    for (const auto& [i, c] : acc) axpy(out, c, unit_vec(i));
    return out;
  }

  // All single-edge contractions of a decorated graph (orientation = O-vertices
  // in X- order, the canonical convention).
  std::vector<Term> contract(const FlowGraph& g, const std::vector<int>& elems, const std::vector<int>& closed,
                             int e) const {
    std::vector<int> orient;
    for (int v : g.out_vertex) orient.push_back(v);
    int u = g.tail(e), v = g.head(e), x = g.legs_in + e;
    int pos_u = static_cast<int>(std::find(orient.begin(), orient.end(), u) - orient.begin());
    std::vector<int> ins_u = g.inputs_of(u), ins_v = g.inputs_of(v);
    int kA = static_cast<int>(ins_u.size());
    int A = elems[u];
    std::vector<int> vmap;
    FlowGraph h = remove_edge(g, e, vmap, true);
    std::vector<Term> out;
    auto base = [&]() {
      Term t;
      t.g = h;
      t.dec.assign(h.nv, SVec{});
      for (int w = 0; w < g.nv; ++w)
        if (vmap[w] >= 0 && w != u && w != v) t.dec[vmap[w]] = unit_vec(elems[w]);
      t.closed = closed;
      return t;
    };
    auto orient_without = [&](std::vector<int> ord, std::vector<int> drop) {
      std::vector<int> res;
      for (int w : ord)
        if (std::find(drop.begin(), drop.end(), w) == drop.end()) res.push_back(vmap[w]);
      return res;
    };
    int slot = static_cast<int>(std::find(ins_v.begin(), ins_v.end(), x) - ins_v.begin());
    if (u == v) {
      // close the loop: the slot of x becomes the marked last input
      Perm rot(kA);
      for (int i = 0; i < kA; ++i) rot[i] = i < slot ? i : (i == slot ? kA - 1 : i - 1);
      SVec a = o_.arity[kA].apply(0, rot, unit_vec(A));
      SVec wv = w_.projection(kA - 1).apply(a);
      int sign = pos_u % 2 ? -1 : 1;
      if (wv.empty()) return out;
      Term t = base();
      t.orient = orient_without(orient, {u});
      t.coeff = sign;
      if (kA == 1) {
        for (const auto& [w, c] : wv) {
          Term s = t;
          s.closed.push_back(w);
          std::sort(s.closed.begin(), s.closed.end());
          s.coeff *= c;
          out.push_back(std::move(s));
        }
      } else {
        t.dec[vmap[u]] = wv;
        out.push_back(std::move(t));
      }
      return out;
    }
    int kB = static_cast<int>(ins_v.size());
    std::vector<int> labels(ins_v.begin(), ins_v.begin() + slot);
    labels.insert(labels.end(), ins_u.begin(), ins_u.end());
    labels.insert(labels.end(), ins_v.begin() + slot + 1, ins_v.end());
    Perm srt = sorting_perm(labels);
    if (g.output_of(v) >= 0) {
      // compose into another O-vertex: A moves to the front, B second, then B o A
      int kC = kB + kA - 1;
      if (kC > o_.max_arity) return out;
      SVec c = o_.compose(kB, slot + 1, kA, elems[v], A);
      if (c.empty()) return out;
      if (!is_identity(srt)) c = o_.arity[kC].apply(0, srt, std::move(c));
      std::vector<int> front{u, v};
      for (int w : orient)
        if (w != u && w != v) front.push_back(w);
      Term t = base();
      t.coeff = rearrange_sign(orient, front);
      t.orient = orient_without(front, {u});
      t.dec[vmap[v]] = std::move(c);
      out.push_back(std::move(t));
      return out;
    }
    // plug into a wheel
    int k = kB + kA;
    if (k > o_.max_arity) return out;
    SVec c = o_.compose_vec(kB + 1, slot + 1, kA, w_.lift(kB, elems[v]), unit_vec(A));
    srt.push_back(k - 1);
    if (!is_identity(srt)) c = o_.arity[k].apply(0, srt, std::move(c));
    SVec wv = w_.projection(k - 1).apply(c);
    if (wv.empty()) return out;
    Term t = base();
    t.coeff = pos_u % 2 ? -1 : 1;
    t.orient = orient_without(orient, {u});
    t.dec[vmap[v]] = std::move(wv);
    out.push_back(std::move(t));
    return out;
  }

 private:
  const TruncatedOperad& o_;
  WheeledComponent w_;
};

struct ClassData {
  std::vector<int> dims;
  Coinvariants coinv;
};

}  // namespace

GraphComplex graph_complex(const TruncatedOperad& o, int legs_in, int legs_out, int max_vertices, int max_edges) {
  Decorations decs(o);
  int w0 = decs.wheels().dim(0);
  GraphComplex gc;
  gc.complex.p = legs_in, gc.complex.q = legs_out;
  for (auto& c : enumerate(legs_in, legs_out, max_vertices, max_edges, o.has_arity_zero()))
    gc.classes[c.graph.edges()].push_back(std::move(c));
  if (legs_in == 0 && legs_out == 0 && max_edges >= 0) {
    GraphClass empty;
    empty.automorphisms.push_back(GraphIso{});
    gc.classes[0].insert(gc.classes[0].begin(), std::move(empty));
  }
  std::map<int, std::vector<ClassData>> data;
  std::map<int, std::map<FlowGraph, int>> class_index;
  using CellKey = std::tuple<int, int, std::vector<int>>;  // graph, coinvariant index, closed
  std::map<int, std::map<CellKey, int>> cell_index;

  for (int r = 0; r <= max_edges; ++r) {
    gc.complex.dim[r] = 0;
    gc.complex.complete[r] = true;
    auto& cls = gc.classes[r];
    auto& dat = data[r];
    auto& cells = gc.basis[r];
    for (size_t gi = 0; gi < cls.size(); ++gi) {
      const FlowGraph& g = cls[gi].graph;
      class_index[r][g] = static_cast<int>(gi);
      ClassData cd;
      cd.dims = decs.dims(g);
      int total = Decorations::total(cd.dims);
      if (total > 0) {
        std::vector<Matrix> elems;
        for (const auto& a : cls[gi].automorphisms) {
          Matrix m(total, total);
          for (int t = 0; t < total; ++t) {
            Term term;
            term.g = g;
            for (int e : Decorations::decode(cd.dims, t)) term.dec.push_back(unit_vec(e));
            term.orient = g.out_vertex;
            FlowGraph target;
            m.col(t) = decs.transport(term, a.edges, target);
          }
          elems.push_back(std::move(m));
        }
        cd.coinv = coinvariants_of_elements(total, elems);
        int free = max_vertices - g.nv;
        std::vector<int> closed;
        std::function<void(int)> multiset = [&](int lo) {
          for (int i = 0; i < cd.coinv.dim(); ++i) {
            cell_index[r][{static_cast<int>(gi), i, closed}] = static_cast<int>(cells.size());
            cells.push_back({static_cast<int>(gi), Decorations::decode(cd.dims, cd.coinv.lift_index[i]), closed});
          }
          if (static_cast<int>(closed.size()) >= free) return;
          for (int e = lo; e < w0; ++e) {
            closed.push_back(e);
            multiset(e);
            closed.pop_back();
          }
        };
        multiset(0);
      }
      dat.push_back(std::move(cd));
    }
    gc.complex.dim[r] = static_cast<int>(cells.size());
  }

  for (int r = 1; r <= max_edges; ++r) {
    const auto& cells = gc.basis[r];
    if (cells.empty() || gc.basis[r - 1].empty()) continue;
    Matrix d(static_cast<int>(gc.basis[r - 1].size()), static_cast<int>(cells.size()));
    for (size_t ci = 0; ci < cells.size(); ++ci) {
      const auto& cell = cells[ci];
      const FlowGraph& g = gc.classes[r][cell.graph].graph;
      SVec col;
      for (int e = 0; e < r; ++e) {
        for (const Term& t : decs.contract(g, cell.decoration, cell.closed, e)) {
          Perm sigma;
          canonical_form(t.g, &sigma);
          FlowGraph target;
          SVec v = decs.transport(t, sigma, target);
          if (v.empty()) continue;
          if (target.nv == 0 && legs_in == 0 && legs_out == 0) target = FlowGraph{};
          auto it = class_index[r - 1].find(target);
          if (it == class_index[r - 1].end())
            throw std::logic_error("graph_complex: contraction leaves the enumerated classes");
          const ClassData& cd = data[r - 1][it->second];
          SVec proj = cd.coinv.projection.apply(v);
          for (const auto& [i, c] : proj) {
            auto jt = cell_index[r - 1].find({it->second, i, t.closed});
            if (jt == cell_index[r - 1].end())
              throw TruncationError("graph_complex: contraction exceeds the vertex bound");
            axpy(col, c, unit_vec(jt->second));
          }
        }
      }
      d.col(static_cast<int>(ci)) = std::move(col);
    }
    gc.complex.d[r] = std::move(d);
  }
  return gc;
}

GraphCompareReport compare(const TruncatedOperad& o, int legs_in, int legs_out, int max_vertices, int max_edges) {
  GraphCompareReport rep;
  GraphComplex gc = graph_complex(o, legs_in, legs_out, max_vertices, max_edges);
  FactorModel fm(o, legs_in + max_edges, legs_out + max_edges, max_vertices);
  WbModule mod = fm.build(true);
  ChainComplex kc = koszul_down(mod, legs_in, legs_out);
  auto hg = homology(gc.complex, "graph_complex");
  auto hk = homology(kc, "koszul_down");
  for (int r = 0; r <= max_edges; ++r) {
    GraphCompareRow row;
    row.edges = r;
    row.graph_dim = gc.complex.term(r);
    row.koszul_dim = kc.term(legs_out + r);
    row.graph_homology = hg.count(r) ? hg.at(r) : 0;
    row.koszul_homology = hk.count(legs_out + r) ? hk.at(legs_out + r) : 0;
    if (row.graph_dim != row.koszul_dim || row.graph_homology != row.koszul_homology) {
      rep.ok = false;
      std::ostringstream os;
      os << "legs (" << legs_in << "," << legs_out << ") edges " << r << ": graph dim " << row.graph_dim
         << " H " << row.graph_homology << ", koszul dim " << row.koszul_dim << " H " << row.koszul_homology;
      rep.failures.push_back(os.str());
    }
    rep.rows.push_back(row);
  }
  if (!rep.ok) return rep;

  // Explicit map: a decorated graph in normal form is a monomial of
  // M(legs_in + r, legs_out + r) up to the wedge reordering.
  std::map<int, Matrix> phi;
  for (int r = 0; r <= max_edges; ++r) {
    int m = legs_in + r, n = legs_out + r;
    const auto& cells = gc.basis[r];
    if (cells.empty()) continue;
    Coinvariants t = down_term(mod, legs_in, legs_out, r);
    Matrix f(t.dim(), static_cast<int>(cells.size()));
    for (size_t ci = 0; ci < cells.size(); ++ci) {
      const auto& cell = cells[ci];
      const FlowGraph& g = gc.classes[r][cell.graph].graph;
      Monomial mono;
      mono.outs.resize(n);
      for (int v = 0; v < g.nv; ++v) {
        Factor fac{g.inputs_of(v), cell.decoration[v]};
        int y = g.output_of(v);
        if (y >= 0) mono.outs[y] = fac;
        else mono.wheels.push_back(fac);
      }
      std::sort(mono.wheels.begin(), mono.wheels.end());
      mono.closed = cell.closed;
      int k = fm.index(m, n, mono);
      if (k < 0) throw std::logic_error("compare: graph has no monomial");
      f.col(static_cast<int>(ci)) = t.projection.apply(scaled(unit_vec(k), Q(lambda_sign(mono))));
    }
    phi[r] = std::move(f);
  }
  bool ok = true;
  for (auto& [r, f] : phi)
    if (f.rows() != f.cols() || rank(f) != f.cols()) ok = false;
  for (int r = 1; ok && r <= max_edges; ++r) {
    if (!phi.count(r) || !phi.count(r - 1)) continue;
    Matrix lhs = kc.diff(legs_out + r) * phi.at(r);
    Matrix rhs = phi.at(r - 1) * gc.complex.diff(r);
    if (!(lhs == rhs)) ok = false;
  }
  rep.intertwiner = ok;
  if (!ok) {
    rep.ok = false;
    rep.failures.push_back("explicit graph-to-monomial map is not a chain isomorphism");
  }
  return rep;
}

}  // namespace wbk
