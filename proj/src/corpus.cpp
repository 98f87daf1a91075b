#include "mcg/corpus.hpp"

#include "mcg/error.hpp"

namespace mcg {

namespace {

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) {
    edges.push_back(make_edge(i, (i + 1) % n));
    names.push_back("v" + std::to_string(i));
  }
  return build_graph(n, std::move(edges), std::move(names));
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return build_graph(n, std::move(edges));
}

Graph complete_bipartite_33() {
  std::vector<Edge> edges;
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 6; ++j) edges.push_back({i, j});
  return build_graph(6, std::move(edges));
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back(make_edge(i, (i + 1) % 5));       // outer cycle
    edges.push_back({i, i + 5});                      // spokes
    edges.push_back(make_edge(i + 5, (i + 2) % 5 + 5));  // inner pentagram
  }
  return build_graph(10, std::move(edges));
}

// Brick skeleton with one nonempty torsoid edge: K4 on {u,v,w,x} with the
// u-v edge replaced by the path u-p1-p2-v.
Graph k4_ladder_graph() {
  // u=0 v=1 w=2 x=3 p1=4 p2=5
  std::vector<Edge> edges = {{0, 4}, {4, 5}, {1, 5}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return build_graph(6, std::move(edges), {"u", "v", "w", "x", "p1", "p2"});
}

Digraph directed_cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({i, (i + 1) % n});
  return build_digraph(n, std::move(arcs));
}

Digraph doubled_directed_cycle(int n) {
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) {
    arcs.push_back({i, (i + 1) % n});
    arcs.push_back({(i + 1) % n, i});
  }
  return build_digraph(n, std::move(arcs));
}

}  // namespace

const std::vector<std::string>& corpus_graph_names() {
  static const std::vector<std::string> names = {"C4", "C6",  "C8",       "C10",
                                                 "K4", "K33", "PETERSEN", "K4_LADDER"};
  return names;
}

const std::vector<std::string>& corpus_digraph_names() {
  static const std::vector<std::string> names = {"DC3", "DC5", "DDC5"};
  return names;
}

bool is_corpus_graph(const std::string& name) {
  for (const auto& n : corpus_graph_names())
    if (n == name) return true;
  return false;
}

bool is_corpus_digraph(const std::string& name) {
  for (const auto& n : corpus_digraph_names())
    if (n == name) return true;
  return false;
}

Graph corpus_graph(const std::string& name) {
  if (name == "C4") return cycle_graph(4);
  if (name == "C6") return cycle_graph(6);
  if (name == "C8") return cycle_graph(8);
  if (name == "C10") return cycle_graph(10);
  if (name == "K4") return complete_graph(4);
  if (name == "K33") return complete_bipartite_33();
  if (name == "PETERSEN") return petersen_graph();
  if (name == "K4_LADDER") return k4_ladder_graph();
  throw InputError("unknown corpus graph: " + name);
}

Digraph corpus_digraph(const std::string& name) {
  if (name == "DC3") return directed_cycle(3);
  if (name == "DC5") return directed_cycle(5);
  if (name == "DDC5") return doubled_directed_cycle(5);
  throw InputError("unknown corpus digraph: " + name);
}

const std::vector<std::string>& hex_partition_names() {
  static const std::vector<std::string> names = {"HEX_LEFT", "HEX_MIDDLE", "HEX_RIGHT"};
  return names;
}

std::vector<VertexSet> hex_partition_classes(const std::string& name) {
  auto single = [](int v) { return VertexSet::of(6, {v}); };
  if (name == "HEX_LEFT")
    return {single(0), single(4), single(5), VertexSet::of(6, {1, 2, 3})};
  if (name == "HEX_MIDDLE")
    return {single(0), single(1), single(5), VertexSet::of(6, {2, 3, 4})};
  if (name == "HEX_RIGHT")
    return {single(0), single(1), single(2), VertexSet::of(6, {3, 4, 5})};
  throw InputError("unknown hexagon partition: " + name);
}

}  // namespace mcg
