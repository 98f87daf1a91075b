#include "mcg/graph.hpp"

#include <algorithm>
#include <queue>

#include "mcg/error.hpp"

namespace mcg {

namespace {

void check_names(int n, const std::vector<std::string>& names) {
  if (!names.empty() && static_cast<int>(names.size()) != n)
    throw InputError("name table size must match vertex count");
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> names)
    : n_(n), names_(std::move(names)) {
  if (n < 0 || n > kMaxVertices) throw InputError("vertex count out of range");
  check_names(n, names_);
  for (auto& [u, v] : edges) {
    if (u == v) throw InputError("loop edge " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  adj_.assign(n_, {});
  adj_mask_.assign(n_, VertexSet(n_));
  for (auto [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
    adj_mask_[u].set(v);
    adj_mask_[v].set(u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
  return u >= 0 && u < n_ && adj_mask_[u].test(v);
}

const std::vector<int>& Graph::neighbors(int v) const {
  if (v < 0 || v >= n_) throw InputError("vertex id out of range");
  return adj_[v];
}

const VertexSet& Graph::neighbor_mask(int v) const {
  if (v < 0 || v >= n_) throw InputError("vertex id out of range");
  return adj_mask_[v];
}

std::string Graph::vertex_label(int v) const {
  if (!names_.empty() && v >= 0 && v < n_ && !names_[v].empty()) return names_[v];
  return std::to_string(v);
}

bool operator==(const Graph& a, const Graph& b) {
  return a.vertex_count() == b.vertex_count() && a.edges() == b.edges();
}

Digraph::Digraph(int n, std::vector<Arc> arcs, std::vector<std::string> names)
    : n_(n), names_(std::move(names)) {
  if (n < 0 || n > kMaxVertices) throw InputError("vertex count out of range");
  check_names(n, names_);
  for (auto [u, v] : arcs) {
    if (u == v) throw InputError("loop arc " + std::to_string(u));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw InputError("arc endpoint out of range");
  }
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  arcs_ = std::move(arcs);
  out_.assign(n_, {});
  in_.assign(n_, {});
  out_mask_.assign(n_, VertexSet(n_));
  in_mask_.assign(n_, VertexSet(n_));
  for (auto [u, v] : arcs_) {
    out_[u].push_back(v);
    in_[v].push_back(u);
    out_mask_[u].set(v);
    in_mask_[v].set(u);
  }
  for (auto& a : out_) std::sort(a.begin(), a.end());
  for (auto& a : in_) std::sort(a.begin(), a.end());
}

bool Digraph::has_arc(int u, int v) const {
  return u >= 0 && u < n_ && out_mask_[u].test(v);
}

const std::vector<int>& Digraph::out_neighbors(int v) const {
  if (v < 0 || v >= n_) throw InputError("vertex id out of range");
  return out_[v];
}

const std::vector<int>& Digraph::in_neighbors(int v) const {
  if (v < 0 || v >= n_) throw InputError("vertex id out of range");
  return in_[v];
}

const VertexSet& Digraph::out_mask(int v) const {
  if (v < 0 || v >= n_) throw InputError("vertex id out of range");
  return out_mask_[v];
}

const VertexSet& Digraph::in_mask(int v) const {
  if (v < 0 || v >= n_) throw InputError("vertex id out of range");
  return in_mask_[v];
}

std::string Digraph::vertex_label(int v) const {
  if (!names_.empty() && v >= 0 && v < n_ && !names_[v].empty()) return names_[v];
  return std::to_string(v);
}

bool operator==(const Digraph& a, const Digraph& b) {
  return a.vertex_count() == b.vertex_count() && a.arcs() == b.arcs();
}

Graph build_graph(int n, std::vector<Edge> edges, std::vector<std::string> names) {
  return Graph(n, std::move(edges), std::move(names));
}

Digraph build_digraph(int n, std::vector<Arc> arcs, std::vector<std::string> names) {
  return Digraph(n, std::move(arcs), std::move(names));
}

std::vector<Edge> boundary_edges(const Graph& g, const VertexSet& x) {
  std::vector<Edge> out;
  for (auto [u, v] : g.edges())
    if (x.test(u) != x.test(v)) out.push_back({u, v});
  return out;
}

Cut cut_of(const Graph& g, const VertexSet& x) {
  if (x.universe_size() != g.vertex_count())
    throw InputError("vertex set universe does not match graph");
  Cut c;
  c.edges = boundary_edges(g, x);
  VertexSet comp = x.complement();
  c.shore = x < comp ? x : comp;
  return c;
}

std::optional<std::pair<VertexSet, VertexSet>> bipartition_of(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> colour(n, -1);
  VertexSet v0(n), v1(n);
  for (int s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int w : g.neighbors(u)) {
        if (colour[w] == -1) {
          colour[w] = colour[u] ^ 1;
          q.push(w);
        } else if (colour[w] == colour[u]) {
          return std::nullopt;
        }
      }
    }
  }
  for (int v = 0; v < n; ++v) (colour[v] == 0 ? v0 : v1).set(v);
  return std::make_pair(v0, v1);
}

std::vector<VertexSet> components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    VertexSet comp(n);
    std::queue<int> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.set(u);
      for (int w : g.neighbors(u)) {
        if (!seen[w]) {
          seen[w] = true;
          q.push(w);
        }
      }
    }
    comps.push_back(comp);
  }
  return comps;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return components(g).size() == 1;
}

bool induces_connected(const Graph& g, const VertexSet& x) {
  int start = x.lowest();
  if (start < 0) return true;
  VertexSet frontier(g.vertex_count());
  frontier.set(start);
  VertexSet reached = frontier;
  while (!frontier.empty()) {
    VertexSet next(g.vertex_count());
    for (int v : frontier.to_vector()) next = next | (g.neighbor_mask(v) & x);
    frontier = next.minus(reached);
    reached = reached | frontier;
  }
  return x.subset_of(reached);
}

bool is_cycle_graph(const Graph& g) {
  int n = g.vertex_count();
  if (n < 3 || g.edge_count() != n) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  return is_connected(g);
}

}  // namespace mcg
