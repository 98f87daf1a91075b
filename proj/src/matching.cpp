#include "mcg/matching.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mcg/error.hpp"

namespace mcg {

namespace {

void enumerate_rec(const Graph& g, VertexSet& matched, Matching& cur,
                   std::vector<Matching>& out, long max_matchings) {
  int u = matched.complement().lowest();
  if (u < 0) {
    out.push_back(cur);
    if (static_cast<long>(out.size()) > max_matchings)
      throw BoundError("perfect matching enumeration bound exceeded");
    return;
  }
  matched.set(u);
  for (int v : g.neighbors(u)) {
    if (matched.test(v)) continue;
    matched.set(v);
    cur.push_back({u, v});
    enumerate_rec(g, matched, cur, out, max_matchings);
    cur.pop_back();
    matched.reset(v);
  }
  matched.reset(u);
}

}  // namespace

std::vector<Matching> enumerate_perfect_matchings(const Graph& g,
                                                  const EnumerationBounds& bounds) {
  int n = g.vertex_count();
  if (n > bounds.max_vertices)
    throw BoundError("graph exceeds enumeration vertex bound of " +
                     std::to_string(bounds.max_vertices));
  if (n % 2 != 0) return {};
  std::vector<Matching> out;
  VertexSet matched(n);
  Matching cur;
  enumerate_rec(g, matched, cur, out, bounds.max_matchings);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_perfect_matching(const Graph& g, const Matching& m) {
  VertexSet covered(g.vertex_count());
  for (auto [u, v] : m) {
    if (!g.has_edge(u, v)) return false;
    if (covered.test(u) || covered.test(v)) return false;
    covered.set(u);
    covered.set(v);
  }
  return covered == g.all_vertices();
}

bool is_matching_covered(const Graph& g, const EnumerationBounds& bounds) {
  int n = g.vertex_count();
  if (n == 0 || n % 2 != 0 || !is_connected(g)) return false;
  auto matchings = enumerate_perfect_matchings(g, bounds);
  if (matchings.empty()) return false;
  std::set<Edge> covered;
  for (const auto& m : matchings) covered.insert(m.begin(), m.end());
  return covered.size() == static_cast<size_t>(g.edge_count());
}

MatchingGraphResult matching_graph(const Digraph& d) {
  int n = d.vertex_count();
  MatchingGraphResult r;
  std::vector<Edge> edges;
  r.split_map.reserve(n);
  for (int v = 0; v < n; ++v) {
    edges.push_back({2 * v, 2 * v + 1});
    r.matching.push_back({2 * v, 2 * v + 1});
    r.split_map.push_back({2 * v, 2 * v + 1});
  }
  for (auto [u, v] : d.arcs()) edges.push_back(make_edge(2 * u + 1, 2 * v));
  r.graph = build_graph(2 * n, std::move(edges));
  return r;
}

MDirectionResult m_direction(const Graph& g, const Matching& m_in) {
  Matching m = m_in;
  std::sort(m.begin(), m.end());
  if (!is_perfect_matching(g, m)) throw InputError("matching is not a perfect matching of the graph");
  auto bip = bipartition_of(g);
  if (!bip) throw InputError("graph is not bipartite");
  if (m.empty()) throw InputError("graph has no vertices");

  // The colour class containing the lower endpoint of the lexicographically
  // first matching edge is the black class V1; arcs run V1 -> V0.
  VertexSet black = bip->first.test(m[0].first) ? bip->first : bip->second;

  int n = g.vertex_count();
  std::vector<int> vertex_of(n, -1);
  for (size_t i = 0; i < m.size(); ++i) {
    vertex_of[m[i].first] = static_cast<int>(i);
    vertex_of[m[i].second] = static_cast<int>(i);
  }
  std::set<Edge> matching_set(m.begin(), m.end());
  std::vector<Arc> arcs;
  for (auto e : g.edges()) {
    if (matching_set.count(e)) continue;
    int b = black.test(e.first) ? e.first : e.second;
    int w = b == e.first ? e.second : e.first;
    arcs.push_back({vertex_of[b], vertex_of[w]});
  }
  MDirectionResult r;
  r.digraph = build_digraph(static_cast<int>(m.size()), std::move(arcs));
  r.contracted_edge = m;
  return r;
}

std::vector<std::vector<int>> symmetric_difference_cycles(const Graph& g, const Matching& m1,
                                                          const Matching& m2) {
  if (!is_perfect_matching(g, m1) || !is_perfect_matching(g, m2))
    throw InputError("both arguments must be perfect matchings");
  int n = g.vertex_count();
  std::set<Edge> s1(m1.begin(), m1.end()), s2(m2.begin(), m2.end());
  // partner[v] per matching, only for vertices whose two partners differ
  std::vector<int> p1(n, -1), p2(n, -1);
  for (auto [u, v] : m1) {
    p1[u] = v;
    p1[v] = u;
  }
  for (auto [u, v] : m2) {
    p2[u] = v;
    p2[v] = u;
  }
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> cycles;
  for (int s = 0; s < n; ++s) {
    if (seen[s] || p1[s] == p2[s]) continue;
    std::vector<int> cyc;
    int v = s;
    bool use_m1 = true;
    do {
      cyc.push_back(v);
      seen[v] = true;
      v = use_m1 ? p1[v] : p2[v];
      use_m1 = !use_m1;
    } while (v != s);
    cycles.push_back(std::move(cyc));
  }
  return cycles;
}

}  // namespace mcg
