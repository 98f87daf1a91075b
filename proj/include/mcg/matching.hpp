#pragma once

#include <utility>
#include <vector>

#include "mcg/graph.hpp"

namespace mcg {

// Perfect matching as a sorted edge list of the host graph.
using Matching = std::vector<Edge>;

struct EnumerationBounds {
  int max_vertices = 16;
  long max_matchings = 10000;
};

// All perfect matchings, ordered lexicographically by their sorted edge
// lists (backtracking over the lowest unmatched vertex).
std::vector<Matching> enumerate_perfect_matchings(const Graph& g,
                                                  const EnumerationBounds& bounds = {});

bool is_perfect_matching(const Graph& g, const Matching& m);

// Connected and every edge lies in some perfect matching.
bool is_matching_covered(const Graph& g, const EnumerationBounds& bounds = {});

// Vertex split of a digraph: v becomes white 2v (takes the in-arcs) and
// black 2v+1 (takes the out-arcs), joined by a matching edge; an arc u->v
// becomes the edge {2u+1, 2v}.
struct MatchingGraphResult {
  Graph graph;
  Matching matching;
  std::vector<std::pair<int, int>> split_map;  // original vertex -> (white, black)
};

MatchingGraphResult matching_graph(const Digraph& d);

// Contraction of the matching edges of a bipartite graph, all non-matching
// edges directed from the black class V1 to the white class V0.  Digraph
// vertex i corresponds to the i-th matching edge in sorted order.
struct MDirectionResult {
  Digraph digraph;
  std::vector<Edge> contracted_edge;
};

MDirectionResult m_direction(const Graph& g, const Matching& m);

// Vertex-disjoint alternating cycles of the symmetric difference of two
// perfect matchings.  Each cycle is listed from its smallest vertex, first
// step along the edge of m1.
std::vector<std::vector<int>> symmetric_difference_cycles(const Graph& g, const Matching& m1,
                                                          const Matching& m2);

}  // namespace mcg
