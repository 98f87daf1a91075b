#include "mcg/verify.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "mcg/corpus.hpp"
#include "mcg/digraph_bridge.hpp"
#include "mcg/error.hpp"
#include "mcg/io.hpp"
#include "mcg/partition.hpp"
#include "mcg/passable.hpp"
#include "mcg/rng.hpp"
#include "mcg/torso.hpp"
#include "mcg/torsoid.hpp"

namespace mcg::verify {

namespace {

class Checker {
 public:
  Checker(std::string instance, std::vector<CheckResult>& out)
      : instance_(std::move(instance)), out_(out) {}

  // Collects one result per named check; the first failure wins the detail.
  void begin(const std::string& name) {
    flush();
    name_ = name;
    pass_ = true;
    detail_.clear();
  }

  void expect(bool ok, const std::string& detail) {
    if (!ok && pass_) {
      pass_ = false;
      detail_ = detail;
    }
  }

  void flush() {
    if (!name_.empty()) out_.push_back({name_, instance_, pass_, detail_});
    name_.clear();
  }

  ~Checker() { flush(); }

 private:
  std::string instance_;
  std::vector<CheckResult>& out_;
  std::string name_;
  bool pass_ = true;
  std::string detail_;
};

VertexSet set_from_mask(int n, uint64_t mask) {
  VertexSet s(n);
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1) s.set(i);
  return s;
}

Graph permute_graph(const Graph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.push_back(make_edge(perm[u], perm[v]));
  return build_graph(g.vertex_count(), std::move(edges));
}

bool parity_is_odd(const Matching& m, const VertexSet& x) {
  return matching_boundary_count(m, x) % 2 == 1;
}

// ---------------------------------------------------------------------------
// graph-core

void graph_core_suite(Checker& ck, const Graph& g, const std::string&) {
  int n = g.vertex_count();

  ck.begin("graph/cut-complement-identity");
  if (n <= 10) {
    for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
      VertexSet x = set_from_mask(n, mask);
      Cut a = cut_of(g, x), b = cut_of(g, x.complement());
      ck.expect(a.edges == b.edges && a.shore == b.shore,
                "cut differs from complement cut at " + x.to_string());
      // degree-sum recount: |cut(X)| = sum deg(v) - 2 |E(G[X])|
      int internal = 0;
      for (auto [u, v] : g.edges())
        if (x.test(u) && x.test(v)) ++internal;
      int deg_sum = 0;
      for (int v : x.to_vector()) deg_sum += g.degree(v);
      ck.expect(static_cast<int>(a.edges.size()) == deg_sum - 2 * internal,
                "cut size mismatch at " + x.to_string());
    }
  }

  ck.begin("graph/canonical-invariance");
  std::string base = canonical_form(g);
  DetRng rng(0xc0ffee);
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  for (int trial = 0; trial < 5; ++trial) {
    rng.shuffle(perm);
    ck.expect(canonical_form(permute_graph(g, perm)) == base,
              "canonical form changed under relabeling");
  }
}

// ---------------------------------------------------------------------------
// matching

void matching_suite(Checker& ck, const TightOracle& o) {
  const Graph& g = o.graph();
  const auto& matchings = o.matchings();

  ck.begin("matching/coverage");
  std::set<Edge> covered;
  for (const auto& m : matchings) covered.insert(m.begin(), m.end());
  ck.expect(covered.size() == static_cast<size_t>(g.edge_count()),
            "an edge lies in no perfect matching");
  for (int v = 0; v < g.vertex_count(); ++v)
    ck.expect(g.degree(v) >= 1, "isolated vertex");

  ck.begin("matching/symmetric-difference-cycles");
  size_t pair_cap = 40;
  size_t done = 0;
  for (size_t i = 0; i < matchings.size() && done < pair_cap; ++i)
    for (size_t j = i; j < matchings.size() && done < pair_cap; ++j, ++done) {
      auto cycles = symmetric_difference_cycles(g, matchings[i], matchings[j]);
      if (i == j) {
        ck.expect(cycles.empty(), "symmetric difference with itself not empty");
        continue;
      }
      std::set<int> seen;
      for (const auto& cyc : cycles) {
        ck.expect(cyc.size() >= 4 && cyc.size() % 2 == 0, "cycle not even");
        for (size_t t = 0; t < cyc.size(); ++t) {
          ck.expect(seen.insert(cyc[t]).second, "cycles not vertex-disjoint");
          Edge e = make_edge(cyc[t], cyc[(t + 1) % cyc.size()]);
          bool in1 = std::binary_search(matchings[i].begin(), matchings[i].end(), e);
          bool in2 = std::binary_search(matchings[j].begin(), matchings[j].end(), e);
          ck.expect(in1 != in2, "cycle edge not alternating");
          bool expect_first = t % 2 == 0;
          ck.expect(in1 == expect_first, "cycle does not alternate strictly");
        }
      }
    }

  if (bipartition_of(g)) {
    ck.begin("matching/direction-round-trip");
    size_t cap = std::min<size_t>(matchings.size(), 5);
    for (size_t i = 0; i < cap; ++i) {
      auto dir = m_direction(g, matchings[i]);
      auto back = matching_graph(dir.digraph);
      ck.expect(canonical_form(back.graph) == canonical_form(g),
                "splitting the contraction changed the graph");
      auto dir2 = m_direction(back.graph, back.matching);
      std::string d1 = canonical_form(dir.digraph);
      std::string d2 = canonical_form(dir2.digraph);
      // the colour convention may flip the orientation; both encode the pair
      std::vector<Arc> rev;
      for (auto [u, v] : dir.digraph.arcs()) rev.push_back({v, u});
      std::string d1r =
          canonical_form(build_digraph(dir.digraph.vertex_count(), std::move(rev)));
      ck.expect(d2 == d1 || d2 == d1r, "matching pair not reproduced up to isomorphism");
    }
  }
}

void digraph_matching_suite(Checker& ck, const Digraph& d) {
  ck.begin("matching/digraph-round-trip");
  auto mg = matching_graph(d);
  ck.expect(bipartition_of(mg.graph).has_value(), "matching graph not bipartite");
  ck.expect(is_perfect_matching(mg.graph, mg.matching), "canonical matching not perfect");
  auto dir = m_direction(mg.graph, mg.matching);
  ck.expect(canonical_form(dir.digraph) == canonical_form(d),
            "direction of the matching graph is not isomorphic to the digraph");
}

// ---------------------------------------------------------------------------
// tight sets

void tight_suite(Checker& ck, const TightOracle& o) {
  const Graph& g = o.graph();
  int n = g.vertex_count();

  ck.begin("tight/oracle-equivalence");
  if (n <= 12) {
    for (uint64_t mask = 1; mask + 1 < (uint64_t{1} << n); ++mask) {
      VertexSet x = set_from_mask(n, mask);
      ck.expect(o.is_tight(x) == is_tight_literal(o.matchings(), x),
                "optimized tightness disagrees with the enumeration oracle at " + x.to_string());
    }
  }

  ck.begin("tight/shores-connected");
  for (const auto& x : o.all_tight_sets())
    ck.expect(induces_connected(g, x) && induces_connected(g, x.complement()),
              "tight set with a disconnected shore: " + x.to_string());

  ck.begin("tight/parity-laws");
  const auto& m0 = o.matchings()[0];
  auto parity_pair_law = [&](const VertexSet& x, const VertexSet& y) {
    bool px = parity_is_odd(m0, x), py = parity_is_odd(m0, y);
    bool pu = parity_is_odd(m0, x | y);
    ck.expect(pu == (px != py), "disjoint union parity law failed");
  };
  if (n <= 8) {
    for (uint64_t mx = 0; mx < (uint64_t{1} << n); ++mx) {
      VertexSet x = set_from_mask(n, mx);
      uint64_t rest = ~mx & ((uint64_t{1} << n) - 1);
      for (uint64_t my = rest;; my = (my - 1) & rest) {
        parity_pair_law(x, set_from_mask(n, my));
        if (my == 0) break;
      }
    }
  } else {
    DetRng rng(0x757172);
    for (int t = 0; t < 4000; ++t) {
      uint64_t mx = rng.next() & ((uint64_t{1} << n) - 1);
      uint64_t my = rng.next() & ~mx & ((uint64_t{1} << n) - 1);
      parity_pair_law(set_from_mask(n, mx), set_from_mask(n, my));
    }
  }

  ck.begin("tight/parity-matching-independent");
  DetRng rng(0x706172);
  for (int t = 0; t < 500; ++t) {
    VertexSet x = set_from_mask(n, rng.next() & ((uint64_t{1} << n) - 1));
    bool p0 = parity_is_odd(m0, x);
    for (const auto& m : o.matchings())
      ck.expect(parity_is_odd(m, x) == p0, "parity depends on the matching at " + x.to_string());
  }

  if (is_cycle_graph(g)) {
    ck.begin("tight/cycle-odd-intervals");
    for (uint64_t mask = 1; mask + 1 < (uint64_t{1} << n); ++mask) {
      VertexSet x = set_from_mask(n, mask);
      bool interval = induces_connected(g, x);
      bool expected = interval && x.count() % 2 == 1;
      ck.expect(o.is_tight(x) == expected,
                "cycle tight sets must be exactly the odd intervals: " + x.to_string());
    }
  }

  if (n >= 6) {
    ck.begin("tight/cyclic-order-of-tight-triples-forces-cycle");
    // search cyclic orders whose consecutive triples are all tight
    std::vector<int> order{0};
    std::vector<bool> used(n, false);
    used[0] = true;
    std::function<void(void)> rec = [&]() {
      size_t k = order.size();
      if (k == static_cast<size_t>(n)) {
        VertexSet t1 = VertexSet::of(n, {order[n - 2], order[n - 1], order[0]});
        VertexSet t2 = VertexSet::of(n, {order[n - 1], order[0], order[1]});
        if (!o.is_tight(t1) || !o.is_tight(t2)) return;
        if (order[1] > order[n - 1]) return;  // one orientation only
        std::vector<Edge> cyc_edges;
        for (int i = 0; i < n; ++i) cyc_edges.push_back(make_edge(order[i], order[(i + 1) % n]));
        std::sort(cyc_edges.begin(), cyc_edges.end());
        ck.expect(cyc_edges == g.edges(), "tight cyclic order found in a non-cycle");
        return;
      }
      for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        if (k >= 2) {
          VertexSet triple = VertexSet::of(n, {order[k - 2], order[k - 1], v});
          if (!o.is_tight(triple)) continue;
        }
        used[v] = true;
        order.push_back(v);
        rec();
        order.pop_back();
        used[v] = false;
      }
    };
    rec();
  }
}

// ---------------------------------------------------------------------------
// crossing lemmas over tight sets

void crossing_lemma_suite(Checker& ck, const TightOracle& o) {
  const Graph& g = o.graph();
  int n = g.vertex_count();
  if (n > 10) return;
  const auto& tights = o.all_tight_sets();
  VertexSet all = g.all_vertices();

  ck.begin("lemmas/odd-crossing-pair");
  for (const auto& x : tights)
    for (const auto& y : tights) {
      if ((x & y).count() % 2 != 1) continue;
      ck.expect(o.is_tight(x & y), "odd intersection of tight sets not tight");
      ck.expect(o.is_tight(x | y), "union of oddly-crossing tight sets not tight");
      VertexSet xo = x.minus(y), yo = y.minus(x);
      bool cross_edge = false, bridge_edge = false;
      for (auto [u, v] : g.edges()) {
        if ((xo.test(u) && yo.test(v)) || (yo.test(u) && xo.test(v))) cross_edge = true;
        VertexSet mid = x & y;
        if ((mid.test(u) && xo.test(v)) || (xo.test(u) && mid.test(v))) bridge_edge = true;
      }
      ck.expect(!cross_edge, "edge between the two private sides of an odd crossing");
      if (!xo.empty()) ck.expect(bridge_edge, "no edge from the odd intersection into x's side");
    }

  ck.begin("lemmas/even-disjoint-traces-no-edge");
  for (const auto& x : tights)
    for (const auto& y : tights)
      for (const auto& z : tights) {
        VertexSet a = x & y, b = x & z;
        if (a.count() % 2 != 0 || b.count() % 2 != 0 || a.intersects(b)) continue;
        for (auto [u, v] : g.edges())
          ck.expect(!((a.test(u) && b.test(v)) || (b.test(u) && a.test(v))),
                    "edge between even disjoint traces");
      }

  ck.begin("lemmas/three-equal-even-intersections-empty");
  for (const auto& x : tights)
    for (const auto& y : tights)
      for (const auto& z : tights) {
        VertexSet a = x & y;
        if ((x & z) != a || (y & z) != a) continue;
        if (a.count() % 2 != 0) continue;
        ck.expect(a.empty(), "equal even pairwise intersection not empty");
      }

  ck.begin("lemmas/pairwise-union-family");
  for (const auto& x : tights)
    for (const auto& y : tights)
      for (const auto& z : tights) {
        if (o.is_tight(x | y) && o.is_tight(x | z) && o.is_tight(y | z)) {
          VertexSet u = x | y | z;
          ck.expect(u == all || o.is_tight(u), "union of a pairwise-union-tight family not tight");
        }
        // dually, pairwise odd intersections force a tight or empty meet
        if ((x & y).count() % 2 == 1 && (x & z).count() % 2 == 1 && (y & z).count() % 2 == 1) {
          VertexSet m = x & y & z;
          ck.expect(m.empty() || o.is_tight(m),
                    "intersection of pairwise-oddly-meeting family not tight");
        }
      }

  ck.begin("lemmas/delete-even-disjoint-family");
  for (const auto& x : tights) {
    for (const auto& y : tights) {
      VertexSet a = x & y;
      if (a.count() % 2 != 0) continue;
      ck.expect(o.is_tight(x.minus(y)), "deleting one even-trace set broke tightness");
      for (const auto& z : tights) {
        VertexSet b = x & z;
        if (b.count() % 2 != 0 || a.intersects(b)) continue;
        ck.expect(o.is_tight(x.minus(y).minus(z)), "deleting two even-trace sets broke tightness");
      }
    }
  }

  ck.begin("lemmas/passable-pairs");
  for (size_t i = 0; i < tights.size(); ++i)
    for (size_t j = i + 1; j < tights.size(); ++j) {
      const VertexSet& p = tights[i];
      const VertexSet& q = tights[j];
      if (p.intersects(q) || (p | q) == all) continue;
      auto passables = all_passable_between(o, p, q);
      VertexSet biggest = largest_passable_between(o, p, q);
      VertexSet biggest_scan = largest_passable_between(o, p, q, PassableStrategy::kFullScan);
      ck.expect(biggest == biggest_scan, "incremental and full-scan largest passable differ");
      VertexSet acc(n);
      for (const auto& s : passables) {
        ck.expect(s.count() % 2 == 0, "odd passable set");
        acc = acc | s;
        ck.expect(s.subset_of(biggest), "a passable set escapes the largest one");
      }
      ck.expect(acc == biggest, "largest passable set is not the union of all");
      for (const auto& s : passables)
        for (const auto& s2 : passables) {
          ck.expect((p & s & s2).count() % 2 == 0, "odd three-way trace of passable sets");
          ck.expect(is_passable_between(o, s | s2, p, q), "union of passable sets not passable");
        }
    }
}

// ---------------------------------------------------------------------------
// partitions

struct PartitionCache {
  std::vector<TightSetPartition> partitions;
  std::vector<CollapseClass> classes;
  std::vector<int> torsoid_inducing;  // indices
};

PartitionCache build_partition_cache(const TightOracle& o) {
  PartitionCache pc;
  pc.partitions = enumerate_tight_set_partitions(o);
  pc.classes.reserve(pc.partitions.size());
  for (size_t i = 0; i < pc.partitions.size(); ++i) {
    pc.classes.push_back(classify_collapse(o, pc.partitions[i]));
    if (pc.classes.back().torsoid_inducing) pc.torsoid_inducing.push_back(static_cast<int>(i));
  }
  return pc;
}

void partition_suite(Checker& ck, const TightOracle& o, const PartitionCache& pc) {
  const Graph& g = o.graph();
  int n = g.vertex_count();
  const auto& tights = o.all_tight_sets();

  ck.begin("partition/collapse-tightness-transfer");
  for (const auto& p : pc.partitions) {
    auto col = collapse(o, p);
    TightOracle col_oracle(col.graph, o.bounds());
    size_t k = p.classes.size();
    if (k > 16) continue;
    for (uint64_t mask = 1; mask + 1 < (uint64_t{1} << k); ++mask) {
      VertexSet cls(static_cast<int>(k));
      VertexSet uni(n);
      for (size_t i = 0; i < k; ++i)
        if ((mask >> i) & 1) {
          cls.set(static_cast<int>(i));
          uni = uni | p.classes[i];
        }
      ck.expect(col_oracle.is_tight(cls) == o.is_tight(uni),
                "tightness does not transfer through the collapse");
    }
  }

  ck.begin("partition/matching-projection");
  for (const auto& p : pc.partitions) {
    size_t cap = std::min<size_t>(o.matchings().size(), 3);
    for (size_t i = 0; i < cap; ++i) project_matching(o, p, o.matchings()[i]);
  }

  ck.begin("partition/odd-intersections-tight");
  for (const auto& p : pc.partitions)
    for (const auto& x : tights) odd_intersection_classes(o, p, x);

  ck.begin("partition/bob-collapse-odd-classes-near-singleton");
  for (size_t pi = 0; pi < pc.partitions.size(); ++pi) {
    if (pc.classes[pi].kind != CollapseKind::kBrick && pc.classes[pi].kind != CollapseKind::kBrace)
      continue;
    const auto& p = pc.partitions[pi];
    for (const auto& x : tights) {
      auto odd = odd_intersection_classes(o, p, x);
      ck.expect(odd.size() == 1 || odd.size() + 1 == p.classes.size(),
                "odd classes against a brick/brace collapse not singleton or co-singleton");
    }
  }

  ck.begin("partition/cyclic-collapse-odd-classes-interval");
  for (size_t pi = 0; pi < pc.partitions.size(); ++pi) {
    if (!pc.classes[pi].cyclic) continue;
    const auto& p = pc.partitions[pi];
    auto col = collapse(o, p);
    size_t k = p.classes.size();
    for (const auto& x : tights) {
      auto odd = odd_intersection_classes(o, p, x);
      VertexSet odd_set(static_cast<int>(k));
      for (int i : odd) odd_set.set(i);
      ck.expect(induces_connected(col.graph, odd_set),
                "odd classes against a cyclic collapse not an interval");
      // interior classes of the interval lie inside x, interior classes of
      // the complementary interval avoid x
      for (size_t i = 0; i < k; ++i) {
        bool touches_odd = odd_set.test(static_cast<int>(i));
        for (int w : col.graph.neighbors(static_cast<int>(i)))
          if (odd_set.test(w)) touches_odd = true;
        if (!touches_odd)
          ck.expect(!p.classes[i].intersects(x),
                    "exterior-interior class meets the tight set");
      }
      size_t m = odd.size();
      if (m >= 2) {
        // walk the cycle to order the interval
        std::vector<int> interval;
        int start = -1;
        for (int i : odd) {
          int inside_nbrs = 0;
          for (int w : col.graph.neighbors(i))
            if (odd_set.test(w)) ++inside_nbrs;
          if (inside_nbrs == 1) start = i;
        }
        if (start < 0) continue;  // the interval spans the whole cycle
        interval.push_back(start);
        VertexSet seen(static_cast<int>(k));
        seen.set(start);
        while (interval.size() < m) {
          int cur = interval.back();
          for (int w : col.graph.neighbors(cur))
            if (odd_set.test(w) && !seen.test(w)) {
              interval.push_back(w);
              seen.set(w);
              break;
            }
        }
        for (size_t t = 1; t + 1 < interval.size(); ++t)
          ck.expect(p.classes[interval[t]].subset_of(x),
                    "interior class of the interval escapes the tight set");
        if (3 <= m && m + 3 <= k) {
          // the four boundary sets are passable between the end classes and
          // their outside neighbours
          auto outside_neighbor = [&](int cls) {
            for (int w : col.graph.neighbors(cls))
              if (!odd_set.test(w)) return w;
            return -1;
          };
          int p1 = interval.front(), pm = interval.back();
          int p0 = outside_neighbor(p1), pm1 = outside_neighbor(pm);
          ck.expect(p0 >= 0 && pm1 >= 0, "interval ends lack outside neighbours");
          if (p0 >= 0 && pm1 >= 0) {
            ck.expect(is_passable_between(o, p.classes[p1].minus(x), p.classes[p1], p.classes[p0]),
                      "end class remainder not passable");
            ck.expect(is_passable_between(o, p.classes[p0] & x, p.classes[p1], p.classes[p0]),
                      "outside trace not passable");
            ck.expect(
                is_passable_between(o, p.classes[pm].minus(x), p.classes[pm], p.classes[pm1]),
                "end class remainder not passable (far end)");
            ck.expect(is_passable_between(o, p.classes[pm1] & x, p.classes[pm], p.classes[pm1]),
                      "outside trace not passable (far end)");
          }
        }
      }
    }
  }

  ck.begin("partition/correspondence-is-isomorphism");
  size_t total = pc.partitions.size();
  auto check_pair = [&](size_t i, size_t j) {
    auto corr = find_correspondence(o, pc.partitions[i], pc.partitions[j]);
    if (!corr) return;
    auto ca = collapse(o, pc.partitions[i]);
    auto cb = collapse(o, pc.partitions[j]);
    for (int u = 0; u < ca.graph.vertex_count(); ++u)
      for (int v = u + 1; v < ca.graph.vertex_count(); ++v)
        ck.expect(ca.graph.has_edge(u, v) == cb.graph.has_edge(corr->map[u], corr->map[v]),
                  "correspondence is not a collapse isomorphism");
    // the maximal cyclic property transfers across correspondences
    if (pc.classes[i].maximal_cyclic)
      ck.expect(pc.classes[j].maximal_cyclic, "maximal cyclicity not preserved");
  };
  if (total * total <= 20000) {
    for (size_t i = 0; i < total; ++i)
      for (size_t j = 0; j < total; ++j) check_pair(i, j);
  } else {
    DetRng rng(0x636f7272);
    for (int t = 0; t < 20000; ++t)
      check_pair(rng.next_below(static_cast<uint32_t>(total)),
                 rng.next_below(static_cast<uint32_t>(total)));
  }

  ck.begin("partition/refinement-reaches-maximal-cyclic");
  for (size_t pi = 0; pi < pc.partitions.size(); ++pi) {
    if (!pc.classes[pi].cyclic) continue;
    auto refined = refine_to_maximal_cyclic(o, pc.partitions[pi]);
    auto cls = classify_collapse(o, refined);
    ck.expect(cls.maximal_cyclic, "refinement did not reach a maximal cyclic partition");
    if (pc.classes[pi].maximal_cyclic)
      ck.expect(refined == pc.partitions[pi], "maximal cyclic partition changed by refinement");
  }
}

// ---------------------------------------------------------------------------
// passable extras

void passable_suite(Checker& ck, const TightOracle& o, const PartitionCache& pc) {
  const Graph& g = o.graph();
  int n = g.vertex_count();

  ck.begin("passable/disjoint-toward-different-classes");
  for (int pi : pc.torsoid_inducing) {
    const auto& p = pc.partitions[pi];
    size_t k = p.classes.size();
    for (size_t a = 0; a < k; ++a)
      for (size_t b = 0; b < k; ++b)
        for (size_t c = b + 1; c < k; ++c) {
          if (a == b || a == c) continue;
          if ((p.classes[a] | p.classes[b]) == g.all_vertices()) continue;
          if ((p.classes[a] | p.classes[c]) == g.all_vertices()) continue;
          auto s1 = all_passable_between(o, p.classes[a], p.classes[b]);
          auto s2 = all_passable_between(o, p.classes[a], p.classes[c]);
          for (const auto& x : s1)
            for (const auto& y : s2)
              ck.expect(!x.intersects(y), "passable sets toward different classes intersect");
        }
  }

  if (n <= 8) {
    ck.begin("passable/modification-keeps-passability");
    const auto& tights = o.all_tight_sets();
    for (const auto& p : tights) {
      // collect passable sets for p
      std::vector<VertexSet> passables;
      for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
        VertexSet s = set_from_mask(n, mask);
        if (s.count() % 2 != 0) continue;
        if (is_passable_for(o, s, p)) passables.push_back(s);
      }
      for (const auto& s : passables)
        for (const auto& s1 : passables) {
          if (s.intersects(s1)) continue;
          if ((p | s | s1) == g.all_vertices()) continue;
          if (!o.is_tight((p | s).minus(s1)) || !o.is_tight((p | s1).minus(s))) continue;
          ck.expect(is_passable_for(o, s, p | s1),
                    "passability lost after extending the base set");
          ck.expect(is_passable_for(o, s, p.minus(s1)),
                    "passability lost after shrinking the base set");
        }
    }
  }
}

// ---------------------------------------------------------------------------
// torsoids

void torsoid_suite(Checker& ck, const TightOracle& o, const PartitionCache& pc) {
  const Graph& g = o.graph();
  auto torsoids = enumerate_torsoids(o);

  ck.begin("torsoid/enumerated-torsoids-validate");
  for (const auto& t : torsoids) {
    auto rep = validate_torsoid(o, t);
    std::string why = rep.violations.empty() ? "" : rep.violations[0].axiom + ": " +
                                                        rep.violations[0].detail;
    ck.expect(rep.ok, "enumerated torsoid failed validation (" + why + ")");
  }

  ck.begin("torsoid/induced-torsoids-validate");
  for (int pi : pc.torsoid_inducing) {
    auto t = induced_torsoid(o, pc.partitions[pi]);
    ck.expect(validate_torsoid(o, t).ok, "induced torsoid failed validation");
  }

  ck.begin("torsoid/correspondence-iff-equal-torsoids");
  for (int i : pc.torsoid_inducing)
    for (int j : pc.torsoid_inducing) {
      bool corr = find_correspondence(o, pc.partitions[i], pc.partitions[j]).has_value();
      bool same =
          induced_torsoid(o, pc.partitions[i]) == induced_torsoid(o, pc.partitions[j]);
      ck.expect(corr == same, "correspondence does not match torsoid equality");
    }

  ck.begin("torsoid/unique-correspondence");
  for (int pi : pc.torsoid_inducing) {
    auto induced = induced_torsoid(o, pc.partitions[pi]);
    int hits = 0;
    for (const auto& t : torsoids) {
      auto corr = find_torsoid_correspondence(o, t, pc.partitions[pi]);
      if (!corr) continue;
      ++hits;
      ck.expect(t == induced, "a partition corresponds to a torsoid other than its induced one");
    }
    ck.expect(hits == 1, "expected exactly one corresponding torsoid, got " +
                             std::to_string(hits));
  }

  ck.begin("torsoid/correspondence-is-skeleton-isomorphism");
  for (const auto& t : torsoids)
    for (const auto& p : pc.partitions) {
      auto corr = find_torsoid_correspondence(o, t, p);
      if (!corr) continue;
      auto col = collapse(o, p);
      int k = t.skeleton.vertex_count();
      for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v)
          ck.expect(t.skeleton.has_edge(u, v) ==
                        col.graph.has_edge(corr->sigma[u], corr->sigma[v]),
                    "correspondence is not a skeleton isomorphism");
    }

  ck.begin("torsoid/choice-functions-give-strong-partitions");
  for (const auto& t : torsoids) {
    // choices on empty eps sets cannot change the partition
    std::vector<Edge> live;
    for (auto e : t.skeleton.edges())
      if (!t.eps.at(e).empty()) live.push_back(e);
    std::vector<ChoiceFunction> choices{ChoiceFunction{}};
    for (auto e : t.skeleton.edges())
      if (t.eps.at(e).empty())
        for (auto& cf : choices) cf.pick[e] = e.first;
    for (auto e : live) {
      std::vector<ChoiceFunction> next;
      for (const auto& cf : choices)
        for (int endpoint : {e.first, e.second}) {
          ChoiceFunction ext = cf;
          ext.pick[e] = endpoint;
          next.push_back(std::move(ext));
        }
      choices = std::move(next);
    }
    std::set<TightSetPartition> arising;
    for (const auto& kf : choices) {
      auto p = partition_from_choice(o, t, kf);
      arising.insert(p);
      auto corr = find_torsoid_correspondence(o, t, p);
      ck.expect(corr.has_value() && corr->strong,
                "choice partition not in strong correspondence");
    }
    for (const auto& p : pc.partitions) {
      auto corr = find_torsoid_correspondence(o, t, p);
      if (corr && corr->strong)
        ck.expect(arising.count(p) == 1,
                  "a strong-correspondence partition does not arise from a choice function");
    }
  }

  ck.begin("torsoid/eps-edges-stay-local");
  for (const auto& t : torsoids)
    for (auto e : t.skeleton.edges()) {
      VertexSet zone = t.vertex_sets[e.first] | t.eps.at(e) | t.vertex_sets[e.second];
      for (auto ge : g.edges())
        if (t.eps.at(e).test(ge.first) || t.eps.at(e).test(ge.second))
          ck.expect(zone.test(ge.first) && zone.test(ge.second),
                    "edge touching an eps set leaves its zone");
    }

  ck.begin("torsoid/eps-equals-largest-passable");
  for (const auto& t : torsoids)
    for (int pi : pc.torsoid_inducing) {
      auto corr = find_torsoid_correspondence(o, t, pc.partitions[pi]);
      if (!corr) continue;
      for (auto e : t.skeleton.edges()) {
        VertexSet want = largest_passable_between(o, pc.partitions[pi].classes[corr->sigma[e.first]],
                                                  pc.partitions[pi].classes[corr->sigma[e.second]]);
        ck.expect(t.eps.at(e) == want, "eps differs from the largest passable set");
      }
    }

  ck.begin("torsoid/residence-trichotomy");
  const auto& tights = o.all_tight_sets();
  for (const auto& t : torsoids) {
    int k = t.skeleton.vertex_count();
    for (const auto& x : tights) {
      Residence r = classify_residence(o, t, x);
      ck.expect(r.theta == 0 || r.theta % 2 == 1, "theta not zero or odd");
      ck.expect(2 * r.theta <= k, "theta above half the skeleton size");
      if (!t.cyclic) ck.expect(r.theta <= 1, "noncyclic torsoid with theta above 1");
      switch (r.kind) {
        case ResidenceKind::kEdge:
          ck.expect(r.theta == 0, "edge residence with nonzero theta");
          break;
        case ResidenceKind::kVertex:
          ck.expect(r.theta == 1, "vertex residence with theta != 1");
          break;
        case ResidenceKind::kInterval:
          ck.expect(r.theta >= 3 && t.cyclic, "interval residence out of place");
          break;
      }
      // odd trace on an eps set forces the edge residence at that edge
      for (auto e : t.skeleton.edges())
        if ((x & t.eps.at(e)).count() % 2 == 1)
          ck.expect(r.kind == ResidenceKind::kEdge && r.edge == e,
                    "odd eps trace without edge residence");
    }
  }
}

// ---------------------------------------------------------------------------
// torsos

void torso_suite(Checker& ck, const TightOracle& o, const PartitionCache& pc) {
  (void)pc;
  const Graph& g = o.graph();
  auto torsoids = enumerate_torsoids(o);

  ck.begin("torso/preimage-counts-across-seeds");
  for (uint32_t seed = 0; seed < 5; ++seed) {
    auto family = extend_to_maximal_nested_family(o, {}, seed);
    auto rep = verify_preimage_counts(o, family);
    ck.expect(rep.ok, "preimage counts failed at seed " + std::to_string(seed) +
                          (rep.detail.empty() ? "" : ": " + rep.detail));
  }

  auto family = extend_to_maximal_nested_family(o, {}, 0);
  auto torsos = torsos_of(o, family);

  ck.begin("torso/cleaves-unique-torsoid");
  for (const auto& torso : torsos) {
    int count = 0;
    for (const auto& t : torsoids)
      if (cleaves(torso, t)) ++count;
    ck.expect(count == 1, "torso cleaves " + std::to_string(count) + " torsoids");
  }

  ck.begin("torso/c4-iff-cyclic-torsoid");
  for (const auto& torso : torsos) {
    Torsoid t = kappa_of_torso(o, torso);
    ck.expect(torso.c4 == t.cyclic, "C4 torso must pair with a cyclic torsoid");
  }

  ck.begin("torso/signature-projection-isomorphic");
  for (const auto& torso : torsos) {
    Torsoid t = kappa_of_torso(o, torso);
    int k = t.skeleton.vertex_count();
    // quotient of the skeleton by the odd-signature partition of the star
    std::vector<int> cls_of(k, -1);
    for (size_t ci = 0; ci < torso.star.partition.classes.size(); ++ci)
      for (int v = 0; v < k; ++v)
        if ((t.vertex_sets[v] & torso.star.partition.classes[ci]).count() % 2 == 1)
          cls_of[v] = static_cast<int>(ci);
    bool total = true;
    for (int v = 0; v < k; ++v)
      if (cls_of[v] < 0) total = false;
    ck.expect(total, "a skeleton vertex meets no star class oddly");
    if (!total) continue;
    std::vector<Edge> qedges;
    for (auto e : t.skeleton.edges())
      if (cls_of[e.first] != cls_of[e.second])
        qedges.push_back(make_edge(cls_of[e.first], cls_of[e.second]));
    Graph projected =
        build_graph(static_cast<int>(torso.star.partition.classes.size()), std::move(qedges));
    ck.expect(canonical_form(projected) == canonical_form(torso.graph.graph),
              "torso is not isomorphic to its signature projection");
  }

  ck.begin("torso/star-classes-are-proper-or-interval-residents");
  for (const auto& torso : torsos) {
    Torsoid t = kappa_of_torso(o, torso);
    for (const auto& cls : torso.star.partition.classes) {
      Residence r = classify_residence(o, t, cls);
      // the shore of an interval residence is an interval resident on both
      // sides, so interval kind alone suffices there
      bool ok = (r.kind == ResidenceKind::kVertex && r.proper && r.witness == cls) ||
                r.kind == ResidenceKind::kInterval;
      ck.expect(ok, "star class is neither a proper vertex resident nor an interval resident");
    }
  }

  ck.begin("torso/refining-partition-exists");
  for (const auto& torso : torsos) {
    Torsoid t = kappa_of_torso(o, torso);
    // split every eps set between its two endpoints in all ways
    std::vector<Edge> eps_edges;
    for (auto e : t.skeleton.edges())
      if (!t.eps.at(e).empty()) eps_edges.push_back(e);
    bool found = false;
    std::function<void(size_t, std::vector<VertexSet>&)> rec = [&](size_t idx,
                                                                   std::vector<VertexSet>& acc) {
      if (found) return;
      if (idx == eps_edges.size()) {
        std::vector<VertexSet> classes = acc;
        try {
          auto p = validate_partition(o, std::move(classes));
          auto corr = find_torsoid_correspondence(o, t, p);
          if (!corr) return;
          bool refines = true;
          for (const auto& c : p.classes) {
            bool inside = false;
            for (const auto& star_cls : torso.star.partition.classes)
              if (c.subset_of(star_cls)) inside = true;
            if (!inside) refines = false;
          }
          if (refines) found = true;
        } catch (const InputError&) {
        }
        return;
      }
      Edge e = eps_edges[idx];
      auto members = t.eps.at(e).to_vector();
      for (uint64_t mask = 0; mask < (uint64_t{1} << members.size()); ++mask) {
        std::vector<VertexSet> next = acc;
        for (size_t i = 0; i < members.size(); ++i)
          next[(mask >> i) & 1 ? e.second : e.first].set(members[i]);
        rec(idx + 1, next);
      }
    };
    std::vector<VertexSet> base = t.vertex_sets;
    rec(0, base);
    ck.expect(found, "no correspondence partition refines the torso star");
  }

  ck.begin("torso/resident-family-projects-maximal");
  for (const auto& t : torsoids) residents_family(o, family, t);

  ck.begin("torso/maximal-vertex-residents");
  for (const auto& t : torsoids) {
    for (int v = 0; v < t.skeleton.vertex_count(); ++v) {
      VertexSet r = maximal_resident(o, family, t, {v});
      ck.expect(t.vertex_sets[v].subset_of(r), "maximal vertex resident misses its vertex");
      Residence res = classify_residence(o, t, r);
      ck.expect(res.kind == ResidenceKind::kVertex && res.proper && res.vertex == v,
                "maximal vertex resident is not a proper vertex resident");
    }
  }

  ck.begin("torso/maximal-interval-residents");
  for (const auto& t : torsoids) {
    if (!t.cyclic) continue;
    std::set<std::vector<int>> interval_signatures;
    for (const auto& y : family_tight_sets(o, family)) {
      Residence r = classify_residence(o, t, y);
      if (r.kind == ResidenceKind::kInterval && r.witness == y)
        interval_signatures.insert(r.interval);
    }
    for (const auto& sig : interval_signatures) {
      VertexSet r = maximal_resident(o, family, t, sig);
      Residence res = classify_residence(o, t, r);
      ck.expect(res.kind == ResidenceKind::kInterval && res.interval == sig,
                "maximal interval resident has the wrong signature");
    }
  }

  // brick / brace / cycle baselines
  auto cls_g = classify_collapse(o, singleton_partition(o));
  if (cls_g.kind == CollapseKind::kBrick || cls_g.kind == CollapseKind::kBrace) {
    ck.begin("torso/bob-has-one-torso");
    ck.expect(torsos.size() == 1, "brick/brace should have exactly one torso");
    if (torsos.size() == 1)
      ck.expect(canonical_form(torsos[0].graph.graph) == canonical_form(g),
                "the unique torso is not the graph itself");
  }
  if (is_cycle_graph(g)) {
    ck.begin("torso/cycle-torso-count");
    ck.expect(static_cast<int>(torsos.size()) == g.vertex_count() / 2 - 1,
              "cycle must have n/2 - 1 torsos");
    for (const auto& torso : torsos) ck.expect(torso.c4, "cycle torso is not a C4");
  }
}

// ---------------------------------------------------------------------------
// digraphs

void digraph_suite(Checker& ck, const Digraph& d) {
  ck.begin("digraph/separations-match-tight-sets");
  auto rep = separation_tight_bijection(d);
  ck.expect(rep.bijective, "separation records and tight sets do not biject");
  ck.expect(rep.tight_count == rep.separation_count, "counts differ");

  ck.begin("digraph/two-connectivity-routes-agree");
  bool proper_free = true;
  for (const auto& s : enumerate_one_separations(d))
    if (!s.a.minus(s.b).empty() && !s.b.minus(s.a).empty()) proper_free = false;
  ck.expect(is_strongly_2connected(d) == (is_strongly_connected(d) && proper_free &&
                                          d.vertex_count() >= 2),
            "deletion route and separation route disagree");

  ck.begin("digraph/decomposition-order-invariance");
  auto base = lovasz_decompose(d, 1);
  for (uint32_t seed = 2; seed <= 4; ++seed)
    ck.expect(lovasz_decompose(d, seed) == base, "decomposition depends on the order");

  ck.begin("digraph/decomposition-pieces-2connected");
  for (const auto& piece : lovasz_decompose_pieces(d, 7))
    ck.expect(is_strongly_2connected(piece), "decomposition piece not strongly 2-connected");
}

}  // namespace

bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

std::vector<CheckResult> run_instance(const std::string& name) {
  std::vector<CheckResult> out;
  Checker ck(name, out);
  if (is_corpus_digraph(name)) {
    Digraph d = corpus_digraph(name);
    digraph_matching_suite(ck, d);
    digraph_suite(ck, d);
    ck.flush();
    return out;
  }
  Graph g = corpus_graph(name);
  graph_core_suite(ck, g, name);
  TightOracle oracle(g);
  matching_suite(ck, oracle);
  tight_suite(ck, oracle);
  crossing_lemma_suite(ck, oracle);
  auto pc = build_partition_cache(oracle);
  partition_suite(ck, oracle, pc);
  passable_suite(ck, oracle, pc);
  torsoid_suite(ck, oracle, pc);
  torso_suite(ck, oracle, pc);
  ck.flush();
  return out;
}

std::vector<CheckResult> run_all() {
  std::vector<CheckResult> out;
  for (const auto& name : corpus_graph_names()) {
    auto part = run_instance(name);
    out.insert(out.end(), part.begin(), part.end());
  }
  for (const auto& name : corpus_digraph_names()) {
    auto part = run_instance(name);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Graph random_matching_covered_graph(uint32_t seed, int max_n, const EnumerationBounds& bounds) {
  DetRng rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    int n = 4 + 2 * rng.next_below(static_cast<uint32_t>((max_n - 4) / 2 + 1));
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    rng.shuffle(order);
    std::vector<Edge> edges;
    for (int i = 0; i < n; i += 2) edges.push_back(make_edge(order[i], order[i + 1]));
    double p = 0.2 + 0.05 * rng.next_below(7);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (rng.next_bool(p)) edges.push_back({u, v});
    try {
      Graph g = build_graph(n, std::move(edges));
      if (is_matching_covered(g, bounds)) return g;
    } catch (const BoundError&) {
    }
  }
  throw InternalError("failed to generate a matching covered graph");
}

Digraph random_strongly_connected_digraph(uint32_t seed, int max_n) {
  DetRng rng(seed);
  int n = 2 + rng.next_below(static_cast<uint32_t>(max_n - 1));
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  rng.shuffle(order);
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) arcs.push_back({order[i], order[(i + 1) % n]});
  double p = 0.1 + 0.05 * rng.next_below(7);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && rng.next_bool(p)) arcs.push_back({u, v});
  return build_digraph(n, std::move(arcs));
}

}  // namespace mcg::verify
