#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "mcg/corpus.hpp"
#include "mcg/graph.hpp"
#include "mcg/rng.hpp"

using namespace mcg;

namespace {

Graph cycle(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.push_back(make_edge(i, (i + 1) % n));
  return build_graph(n, e);
}

// Test-side isomorphism oracle: plain backtracking over vertex maps.
bool brute_force_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  int n = a.vertex_count();
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  std::function<bool(int)> rec = [&](int v) {
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || a.degree(v) != b.degree(w)) continue;
      bool ok = true;
      for (int u = 0; u < v; ++u)
        if (a.has_edge(u, v) != b.has_edge(map[u], w)) ok = false;
      if (!ok) continue;
      used[w] = true;
      map[v] = w;
      if (rec(v + 1)) return true;
      used[w] = false;
    }
    return false;
  };
  return rec(0);
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.push_back(make_edge(perm[u], perm[v]));
  return build_graph(g.vertex_count(), edges);
}

}  // namespace

TEST_CASE("build_graph constructs canonical cycles and deduplicates") {
  Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK(c4.vertex_count() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(c4.edges() == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});

  Graph c6 = cycle(6);
  CHECK(c6.edge_count() == 6);
  for (int v = 0; v < 6; ++v) CHECK(c6.degree(v) == 2);

  Graph dup = build_graph(4, {{0, 1}, {0, 1}});
  CHECK(dup.edge_count() == 1);

  CHECK_THROWS_AS(build_graph(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(build_graph(3, {{0, 5}}), InputError);
}

TEST_CASE("cut_of lists exactly the crossing edges with a normalized shore") {
  Graph c6 = cycle(6);
  Cut single = cut_of(c6, VertexSet::of(6, {0}));
  CHECK(single.edges == std::vector<Edge>{{0, 1}, {0, 5}});
  CHECK(single.shore == VertexSet::of(6, {0}));

  Cut interval = cut_of(c6, VertexSet::of(6, {0, 1, 2}));
  CHECK(interval.edges == std::vector<Edge>{{0, 5}, {2, 3}});
  CHECK(interval.shore == VertexSet::of(6, {0, 1, 2}));

  Graph k4 = corpus_graph("K4");
  CHECK(cut_of(k4, VertexSet::of(4, {1, 2})).edges.size() == 4);

  // a cut equals the cut of the complementary shore
  Cut comp = cut_of(c6, VertexSet::of(6, {3, 4, 5}));
  CHECK(comp.edges == interval.edges);
  CHECK(comp.shore == interval.shore);
}

TEST_CASE("bipartition_of finds colour classes or rejects odd cycles") {
  auto bip = bipartition_of(cycle(6));
  REQUIRE(bip.has_value());
  CHECK(bip->first == VertexSet::of(6, {0, 2, 4}));
  CHECK(bip->second == VertexSet::of(6, {1, 3, 5}));

  CHECK_FALSE(bipartition_of(corpus_graph("K4")).has_value());

  auto k33 = bipartition_of(corpus_graph("K33"));
  REQUIRE(k33.has_value());
  CHECK(k33->first == VertexSet::of(6, {0, 1, 2}));
  CHECK(k33->second == VertexSet::of(6, {3, 4, 5}));
}

TEST_CASE("connectivity and components") {
  CHECK(is_connected(cycle(6)));
  CHECK(is_connected(corpus_graph("K4")));

  Graph two_edges = build_graph(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(is_connected(two_edges));
  auto comps = components(two_edges);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == VertexSet::of(4, {0, 1}));
  CHECK(comps[1] == VertexSet::of(4, {2, 3}));

  CHECK(induces_connected(cycle(6), VertexSet::of(6, {0, 1, 2})));
  CHECK_FALSE(induces_connected(cycle(6), VertexSet::of(6, {0, 2})));
}

TEST_CASE("canonical_form is an isomorphism invariant") {
  Graph c6 = cycle(6);
  Graph c6_shifted = permuted(c6, {2, 3, 4, 5, 0, 1});
  CHECK(canonical_form(c6) == canonical_form(c6_shifted));
  CHECK(canonical_form(c6) != canonical_form(corpus_graph("K33")));

  Graph pet = corpus_graph("PETERSEN");
  DetRng rng(99);
  std::vector<int> perm(10);
  std::iota(perm.begin(), perm.end(), 0);
  for (int trial = 0; trial < 3; ++trial) {
    rng.shuffle(perm);
    Graph shuffled = permuted(pet, perm);
    CHECK(brute_force_isomorphic(pet, shuffled));
    CHECK(canonical_form(pet) == canonical_form(shuffled));
  }

  // canonical equality agrees with the brute-force oracle on non-isomorphic
  // pairs of the same size and edge count
  Graph c8 = cycle(8);
  Graph two_c4 = build_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  CHECK_FALSE(brute_force_isomorphic(c8, two_c4));
  CHECK(canonical_form(c8) != canonical_form(two_c4));

  CHECK_THROWS_AS(canonical_form(cycle(6), 4), BoundError);
}

TEST_CASE("digraph canonical_form distinguishes orientation structure") {
  Digraph dc3 = corpus_digraph("DC3");
  Digraph relabeled = build_digraph(3, {{1, 2}, {2, 0}, {0, 1}});
  CHECK(canonical_form(dc3) == canonical_form(relabeled));

  Digraph two_cycle = build_digraph(2, {{0, 1}, {1, 0}});
  Digraph one_arc = build_digraph(2, {{0, 1}});
  CHECK(canonical_form(two_cycle) != canonical_form(one_arc));
}

TEST_CASE("vertex set ordering is lexicographic on sorted member lists") {
  CHECK(VertexSet::of(6, {0, 4, 5}) < VertexSet::of(6, {1, 2, 3}));
  CHECK(VertexSet::of(6, {1}) < VertexSet::of(6, {1, 2}));
  CHECK(VertexSet::of(6, {1, 2}) < VertexSet::of(6, {1, 3}));
  CHECK_FALSE(VertexSet::of(6, {1, 3}) < VertexSet::of(6, {1, 2}));
  CHECK(VertexSet(6) < VertexSet::of(6, {0}));
}
