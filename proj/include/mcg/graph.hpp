#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mcg/bitset.hpp"

namespace mcg {

// Undirected edge, stored with first < second.
using Edge = std::pair<int, int>;
// Directed arc, tail -> head.
using Arc = std::pair<int, int>;

inline Edge make_edge(int u, int v) { return u < v ? Edge{u, v} : Edge{v, u}; }

// Immutable simple graph over dense vertex ids 0..n-1 with an optional name
// table.  Edge list is kept sorted and duplicate-free.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edges, std::vector<std::string> names = {});

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  const std::vector<int>& neighbors(int v) const;
  const VertexSet& neighbor_mask(int v) const;
  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  const std::vector<std::string>& names() const { return names_; }
  std::string vertex_label(int v) const;
  VertexSet all_vertices() const { return VertexSet::full(n_); }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<VertexSet> adj_mask_;
  std::vector<std::string> names_;
};

// Structural equality on (n, edge set); names are annotations only.
bool operator==(const Graph& a, const Graph& b);

// Immutable simple digraph: no loops, at most one arc per ordered pair.
class Digraph {
 public:
  Digraph() = default;
  Digraph(int n, std::vector<Arc> arcs, std::vector<std::string> names = {});

  int vertex_count() const { return n_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  bool has_arc(int u, int v) const;
  const std::vector<int>& out_neighbors(int v) const;
  const std::vector<int>& in_neighbors(int v) const;
  const VertexSet& out_mask(int v) const;
  const VertexSet& in_mask(int v) const;
  const std::vector<std::string>& names() const { return names_; }
  std::string vertex_label(int v) const;

 private:
  int n_ = 0;
  std::vector<Arc> arcs_;
  std::vector<std::vector<int>> out_, in_;
  std::vector<VertexSet> out_mask_, in_mask_;
  std::vector<std::string> names_;
};

bool operator==(const Digraph& a, const Digraph& b);

// Validating constructors: reject loops and out-of-range ids, drop duplicate
// edges/arcs.
Graph build_graph(int n, std::vector<Edge> edges, std::vector<std::string> names = {});
Digraph build_digraph(int n, std::vector<Arc> arcs, std::vector<std::string> names = {});

// Edge cut induced by a vertex set, with the shore normalized to the
// lexicographically smaller of X and its complement (the side containing
// vertex 0).
struct Cut {
  std::vector<Edge> edges;
  VertexSet shore;

  bool operator==(const Cut& o) const { return shore == o.shore; }
  bool operator<(const Cut& o) const { return shore < o.shore; }
};

std::vector<Edge> boundary_edges(const Graph& g, const VertexSet& x);
Cut cut_of(const Graph& g, const VertexSet& x);

// Colour classes (V0, V1) with vertex-minimum of each component in V0, or
// absent when some component has an odd cycle.
std::optional<std::pair<VertexSet, VertexSet>> bipartition_of(const Graph& g);

bool is_connected(const Graph& g);
std::vector<VertexSet> components(const Graph& g);

// True when the subgraph induced by x is connected; the empty set counts as
// connected.
bool induces_connected(const Graph& g, const VertexSet& x);

// Connected 2-regular graph on >= 3 vertices.
bool is_cycle_graph(const Graph& g);

// Isomorphism-invariant encoding by exhaustive minimal-labeling search; two
// (di)graphs are isomorphic iff their encodings are equal.  Exponential in
// the worst case, hence the size bound.
std::string canonical_form(const Graph& g, int max_n = 16);
std::string canonical_form(const Digraph& d, int max_n = 16);

}  // namespace mcg
