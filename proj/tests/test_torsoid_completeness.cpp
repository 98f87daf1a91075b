#include <doctest.h>

#include <algorithm>
#include <functional>

#include "mcg/corpus.hpp"
#include "mcg/torsoid.hpp"

using namespace mcg;

namespace {

// Definition-literal torsoid search: every collection of >= 4 disjoint tight
// sets, every skeleton over it, every placement of the leftover vertices on
// skeleton edges, filtered through the axiom validator.  Exponential, but an
// oracle fully independent of the torso/kappa construction.
std::vector<Torsoid> brute_force_torsoids(const TightOracle& o) {
  const Graph& g = o.graph();
  int n = g.vertex_count();
  const auto& tights = o.all_tight_sets();
  std::vector<Torsoid> found;

  auto record = [&](const Torsoid& t) {
    for (const auto& u : found)
      if (u == t) return;
    found.push_back(t);
  };

  auto try_collection = [&](const std::vector<VertexSet>& sets) {
    int k = static_cast<int>(sets.size());
    VertexSet covered(n);
    for (const auto& s : sets) covered = covered | s;
    std::vector<int> leftovers = covered.complement().to_vector();

    // edges joined by a host edge are forced; other pairs may only appear
    // with a nonempty eps set
    std::vector<Edge> forced, optional;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        bool host_edge = false;
        for (auto [u, v] : g.edges())
          if ((sets[i].test(u) && sets[j].test(v)) || (sets[j].test(u) && sets[i].test(v)))
            host_edge = true;
        (host_edge ? forced : optional).push_back({i, j});
      }

    size_t extra_cap = std::min(leftovers.size(), optional.size());
    std::vector<int> chosen;
    std::function<void(size_t)> pick_extras = [&](size_t from) {
      std::vector<Edge> skel_edges = forced;
      for (int idx : chosen) skel_edges.push_back(optional[idx]);
      std::sort(skel_edges.begin(), skel_edges.end());
      // place every leftover vertex on some skeleton edge
      std::vector<int> slot(leftovers.size(), 0);
      std::function<void(size_t)> place = [&](size_t li) {
        if (li == leftovers.size()) {
          Torsoid t;
          t.host_n = n;
          t.vertex_sets = sets;
          t.skeleton = build_graph(k, skel_edges);
          t.cyclic = is_cycle_graph(t.skeleton);
          for (auto e : skel_edges) t.eps[e] = VertexSet(n);
          for (size_t i = 0; i < leftovers.size(); ++i)
            t.eps[skel_edges[slot[i]]].set(leftovers[i]);
          if (validate_torsoid(o, t).ok) record(t);
          return;
        }
        for (size_t e = 0; e < skel_edges.size(); ++e) {
          slot[li] = static_cast<int>(e);
          place(li + 1);
        }
      };
      if (!skel_edges.empty() || leftovers.empty()) place(0);
      for (size_t i = from; i < optional.size() && chosen.size() < extra_cap; ++i) {
        chosen.push_back(static_cast<int>(i));
        pick_extras(i + 1);
        chosen.pop_back();
      }
    };
    pick_extras(0);
  };

  // disjoint collections in ascending set order; the torsoid sorts its
  // vertex sets, so each candidate collection is generated once
  std::vector<VertexSet> current;
  std::function<void(size_t, VertexSet)> collect = [&](size_t from, VertexSet used) {
    if (current.size() >= 4) try_collection(current);
    for (size_t i = from; i < tights.size(); ++i) {
      if (tights[i].intersects(used)) continue;
      current.push_back(tights[i]);
      collect(i + 1, used | tights[i]);
      current.pop_back();
    }
  };
  collect(0, VertexSet(n));

  std::sort(found.begin(), found.end(), torsoid_less);
  return found;
}

}  // namespace

TEST_CASE("kappa enumeration finds every torsoid the axioms admit") {
  for (const char* name : {"C4", "C6", "C8", "K4", "K33", "K4_LADDER"}) {
    CAPTURE(name);
    TightOracle o(corpus_graph(name));
    auto by_axioms = brute_force_torsoids(o);
    auto by_kappa = enumerate_torsoids(o);
    REQUIRE(by_axioms.size() == by_kappa.size());
    for (size_t i = 0; i < by_axioms.size(); ++i) CHECK(by_axioms[i] == by_kappa[i]);
  }
}
