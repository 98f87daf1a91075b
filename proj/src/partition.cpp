#include "mcg/partition.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>

#include "mcg/error.hpp"

namespace mcg {

namespace {

// Set partitions of `items` into exactly three nonempty blocks, canonical
// block numbering (block of items[0] is 0, blocks appear in first-seen
// order).
void for_each_three_split(const std::vector<int>& items,
                          const std::function<bool(const std::array<std::vector<int>, 3>&)>& fn) {
  size_t k = items.size();
  if (k < 3) return;
  std::vector<int> assign(k, 0);
  std::function<bool(size_t, int)> rec = [&](size_t i, int used) -> bool {
    if (i == k) {
      if (used != 3) return false;
      std::array<std::vector<int>, 3> blocks;
      for (size_t j = 0; j < k; ++j) blocks[assign[j]].push_back(items[j]);
      return fn(blocks);
    }
    int lim = std::min(used + 1, 3);
    for (int b = 0; b < lim; ++b) {
      assign[i] = b;
      if (rec(i + 1, std::max(used, b + 1))) return true;
    }
    return false;
  };
  assign[0] = 0;
  rec(1, 1);
}

Graph quotient_graph(const Graph& g, const std::vector<VertexSet>& classes) {
  int k = static_cast<int>(classes.size());
  std::vector<int> cls(g.vertex_count(), -1);
  for (int i = 0; i < k; ++i)
    for (int v : classes[i].to_vector()) cls[v] = i;
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges())
    if (cls[u] != cls[v]) edges.push_back(make_edge(cls[u], cls[v]));
  return build_graph(k, std::move(edges));
}

}  // namespace

TightSetPartition validate_partition(const TightOracle& o, std::vector<VertexSet> classes) {
  const Graph& g = o.graph();
  VertexSet covered(g.vertex_count());
  for (const auto& c : classes) {
    if (c.universe_size() != g.vertex_count())
      throw InputError("partition class universe does not match graph");
    if (c.empty()) throw InputError("partition has an empty class");
    if (covered.intersects(c))
      throw InputError("partition classes overlap at " + (covered & c).to_string());
    covered = covered | c;
  }
  if (covered != g.all_vertices())
    throw InputError("partition misses vertices " + covered.complement().to_string());
  for (const auto& c : classes) {
    if (!o.is_tight(c)) {
      for (const auto& m : o.matchings()) {
        int cnt = matching_boundary_count(m, c);
        if (cnt != 1)
          throw InputError("class " + c.to_string() + " is not tight: a perfect matching meets its cut " +
                           std::to_string(cnt) + " times");
      }
      throw InputError("class " + c.to_string() + " is not tight");
    }
  }
  std::sort(classes.begin(), classes.end());
  return TightSetPartition{std::move(classes)};
}

TightSetPartition singleton_partition(const TightOracle& o) {
  int n = o.graph().vertex_count();
  std::vector<VertexSet> classes;
  for (int v = 0; v < n; ++v) classes.push_back(VertexSet::of(n, {v}));
  return validate_partition(o, std::move(classes));
}

CollapseResult collapse(const TightOracle& o, const TightSetPartition& p) {
  CollapseResult r;
  r.graph = quotient_graph(o.graph(), p.classes);
  r.class_of = p.classes;
  if (!is_matching_covered(r.graph, o.bounds()))
    throw InternalError("collapse of a tight set partition must be matching covered");
  return r;
}

Matching project_matching(const TightOracle& o, const TightSetPartition& p, const Matching& m) {
  if (!is_perfect_matching(o.graph(), m)) throw InputError("matching is not perfect on the host");
  std::vector<int> cls(o.graph().vertex_count(), -1);
  for (size_t i = 0; i < p.classes.size(); ++i)
    for (int v : p.classes[i].to_vector()) cls[v] = static_cast<int>(i);
  Matching out;
  for (auto [u, v] : m)
    if (cls[u] != cls[v]) out.push_back(make_edge(cls[u], cls[v]));
  std::sort(out.begin(), out.end());
  VertexSet covered(static_cast<int>(p.classes.size()));
  for (auto [u, v] : out) {
    if (covered.test(u) || covered.test(v))
      throw InternalError("projected matching is not a matching");
    covered.set(u);
    covered.set(v);
  }
  if (covered.count() != static_cast<int>(p.classes.size()))
    throw InternalError("projected matching is not perfect");
  return out;
}

std::vector<int> odd_intersection_classes(const TightOracle& o, const TightSetPartition& p,
                                          const VertexSet& x) {
  if (!o.is_tight(x)) throw InputError("set is not tight: " + x.to_string());
  std::vector<int> out;
  VertexSet uni(o.graph().vertex_count());
  for (size_t i = 0; i < p.classes.size(); ++i) {
    if ((p.classes[i] & x).count() % 2 == 1) {
      out.push_back(static_cast<int>(i));
      uni = uni | p.classes[i];
    }
  }
  if (out.empty() || out.size() == p.classes.size())
    throw InternalError("odd-intersection classes must be a proper nonempty subset");
  if (!o.is_tight(uni))
    throw InternalError("union of odd-intersection classes must be tight");
  return out;
}

std::optional<Correspondence> find_correspondence(const TightOracle& o,
                                                  const TightSetPartition& p,
                                                  const TightSetPartition& q) {
  int n = o.graph().vertex_count();
  for (const auto& cls : p.classes)
    if (cls.universe_size() != n) throw InputError("partition does not belong to this graph");
  for (const auto& cls : q.classes)
    if (cls.universe_size() != n) throw InputError("partition does not belong to this graph");
  if (p.classes.size() != q.classes.size()) return std::nullopt;
  size_t k = p.classes.size();
  std::vector<int> map(k, -1);
  std::vector<bool> hit(k, false);
  for (size_t i = 0; i < k; ++i) {
    int found = -1;
    for (size_t j = 0; j < k; ++j) {
      if ((p.classes[i] & q.classes[j]).count() % 2 == 1) {
        if (found != -1) return std::nullopt;  // two odd partners
        found = static_cast<int>(j);
      }
    }
    if (found == -1) return std::nullopt;
    if (hit[found]) return std::nullopt;  // not injective
    hit[found] = true;
    map[i] = found;
  }
  return Correspondence{std::move(map)};
}

bool collapse_is_bob(const TightOracle& o, const TightSetPartition& p) {
  size_t k = p.classes.size();
  if (k < 4 || k > 30) return false;
  // A class subset is tight in the collapse iff its union is tight in the
  // host, so nontrivial tight cuts of the collapse can be found without
  // building it.
  uint64_t limit = uint64_t{1} << (k - 1);
  for (uint64_t mask = 1; mask < limit; ++mask) {
    int size = std::popcount(mask) + 1;
    if (size < 2 || size > static_cast<int>(k) - 2) continue;
    VertexSet uni = p.classes[0];
    for (size_t i = 0; i + 1 < k; ++i)
      if ((mask >> i) & 1) uni = uni | p.classes[i + 1];
    if (o.is_tight(uni)) return false;
  }
  return true;
}

namespace {

// Searches class splits into three tight parts that keep the collapse a
// cycle.  When `collect` is null, stops at the first hit; otherwise gathers
// every valid split of the given class.
bool find_cyclic_three_splits(const TightOracle& o, const TightSetPartition& p, size_t class_idx,
                              std::vector<std::array<VertexSet, 3>>* collect) {
  const VertexSet& cls = p.classes[class_idx];
  if (cls.count() < 3) return false;
  int n = o.graph().vertex_count();
  bool found = false;
  for_each_three_split(cls.to_vector(), [&](const std::array<std::vector<int>, 3>& blocks) {
    std::array<VertexSet, 3> parts;
    for (int b = 0; b < 3; ++b) {
      parts[b] = VertexSet::from_vertices(n, blocks[b]);
      if (parts[b].count() % 2 == 0 || !o.is_tight(parts[b])) return false;
    }
    std::vector<VertexSet> refined;
    for (size_t i = 0; i < p.classes.size(); ++i)
      if (i != class_idx) refined.push_back(p.classes[i]);
    refined.insert(refined.end(), parts.begin(), parts.end());
    if (!is_cycle_graph(quotient_graph(o.graph(), refined))) return false;
    found = true;
    if (!collect) return true;  // stop early
    collect->push_back(parts);
    return false;
  });
  return found;
}

}  // namespace

CollapseClass classify_collapse(const TightOracle& o, const TightSetPartition& p) {
  CollapseClass out;
  auto col = collapse(o, p);
  int k = col.graph.vertex_count();
  out.cyclic = is_cycle_graph(col.graph);
  bool bob = collapse_is_bob(o, p);
  bool bip = bipartition_of(col.graph).has_value();
  if (bob)
    out.kind = bip ? CollapseKind::kBrace : CollapseKind::kBrick;
  else if (out.cyclic)
    out.kind = CollapseKind::kCycle;
  else
    out.kind = CollapseKind::kOther;
  if (out.cyclic) {
    out.maximal_cyclic = true;
    for (size_t i = 0; i < p.classes.size() && out.maximal_cyclic; ++i)
      if (find_cyclic_three_splits(o, p, i, nullptr)) out.maximal_cyclic = false;
  }
  bool is_c4 = k == 4 && out.cyclic;
  out.torsoid_inducing =
      out.maximal_cyclic ||
      ((out.kind == CollapseKind::kBrick || out.kind == CollapseKind::kBrace) && !is_c4);
  return out;
}

TightSetPartition refine_to_maximal_cyclic(const TightOracle& o, const TightSetPartition& p) {
  if (!is_cycle_graph(collapse(o, p).graph))
    throw InputError("partition is not cyclic");
  TightSetPartition cur = p;
  for (;;) {
    bool split_done = false;
    for (size_t i = 0; i < cur.classes.size() && !split_done; ++i) {
      std::vector<std::array<VertexSet, 3>> splits;
      find_cyclic_three_splits(o, cur, i, &splits);
      if (splits.empty()) continue;
      // lexicographically least split, parts compared as a sorted triple
      for (auto& s : splits) std::sort(s.begin(), s.end());
      auto best = *std::min_element(splits.begin(), splits.end());
      std::vector<VertexSet> next;
      for (size_t j = 0; j < cur.classes.size(); ++j)
        if (j != i) next.push_back(cur.classes[j]);
      next.insert(next.end(), best.begin(), best.end());
      cur = validate_partition(o, std::move(next));
      split_done = true;
    }
    if (!split_done) return cur;
  }
}

namespace {

void partitions_rec(const TightOracle& o, const std::vector<VertexSet>& tights, VertexSet covered,
                    std::vector<VertexSet>& cur, std::vector<TightSetPartition>& out) {
  int v = covered.complement().lowest();
  if (v < 0) {
    auto classes = cur;
    std::sort(classes.begin(), classes.end());
    out.push_back(TightSetPartition{std::move(classes)});
    return;
  }
  for (const auto& t : tights) {
    if (!t.test(v) || t.intersects(covered)) continue;
    cur.push_back(t);
    partitions_rec(o, tights, covered | t, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<TightSetPartition> enumerate_tight_set_partitions(const TightOracle& o) {
  std::vector<VertexSet> cur;
  std::vector<TightSetPartition> out;
  partitions_rec(o, o.all_tight_sets(), VertexSet(o.graph().vertex_count()), cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mcg
