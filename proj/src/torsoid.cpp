#include "mcg/torsoid.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>

#include "mcg/error.hpp"

namespace mcg {

bool operator==(const Torsoid& a, const Torsoid& b) {
  return a.host_n == b.host_n && a.cyclic == b.cyclic && a.vertex_sets == b.vertex_sets &&
         a.skeleton == b.skeleton && a.eps == b.eps;
}

bool operator!=(const Torsoid& a, const Torsoid& b) { return !(a == b); }

bool torsoid_less(const Torsoid& a, const Torsoid& b) {
  if (a.cyclic != b.cyclic) return a.cyclic < b.cyclic;
  if (a.vertex_sets != b.vertex_sets) return a.vertex_sets < b.vertex_sets;
  if (!(a.skeleton == b.skeleton)) return a.skeleton.edges() < b.skeleton.edges();
  return a.eps < b.eps;
}

namespace {

VertexSet incident_eps_union(const Torsoid& t, int v) {
  VertexSet out(t.host_n);
  for (int w : t.skeleton.neighbors(v)) {
    auto it = t.eps.find(make_edge(v, w));
    if (it != t.eps.end()) out = out | it->second;
  }
  return out;
}

// Skeleton vertices whose carried sets meet x oddly.
std::vector<int> odd_skeleton_vertices(const Torsoid& t, const VertexSet& x) {
  std::vector<int> out;
  for (size_t i = 0; i < t.vertex_sets.size(); ++i)
    if ((t.vertex_sets[i] & x).count() % 2 == 1) out.push_back(static_cast<int>(i));
  return out;
}

bool is_interval_of_cycle(const Graph& h, const std::vector<int>& ids) {
  if (ids.empty() || ids.size() >= static_cast<size_t>(h.vertex_count())) return false;
  VertexSet s = VertexSet::from_vertices(h.vertex_count(), ids);
  return induces_connected(h, s);
}

}  // namespace

TorsoidValidation validate_torsoid(const TightOracle& o, const Torsoid& t) {
  TorsoidValidation rep;
  auto fail = [&](const std::string& axiom, const std::string& detail) {
    rep.ok = false;
    rep.violations.push_back({axiom, detail});
  };
  const Graph& g = o.graph();
  int k = t.skeleton.vertex_count();
  if (t.host_n != g.vertex_count()) {
    fail("T1", "host size mismatch");
    return rep;
  }
  if (static_cast<int>(t.vertex_sets.size()) != k) {
    fail("T1", "vertex set list does not match the skeleton order");
    return rep;
  }

  // T1: skeleton matching covered on >= 4 vertices, a brick, brace or cycle.
  bool skel_mc = k >= 2 && is_matching_covered(t.skeleton, o.bounds());
  bool skel_cycle = is_cycle_graph(t.skeleton);
  bool skel_bob = false;
  if (skel_mc && k >= 4) {
    TightOracle skel_oracle(t.skeleton, o.bounds());
    skel_bob = skel_oracle.tight_cuts(true).empty();
  }
  if (k < 4) fail("T1", "skeleton has fewer than 4 vertices");
  if (!skel_mc) fail("T1", "skeleton is not matching covered");
  if (skel_mc && k >= 4 && !skel_bob && !skel_cycle)
    fail("T1", "skeleton is neither a brick, a brace nor a cycle");
  if (t.cyclic != skel_cycle) fail("T1", "cyclic flag does not match the skeleton");

  // T2: carried sets are tight.
  for (int v = 0; v < k; ++v)
    if (!o.is_tight(t.vertex_sets[v]))
      fail("T2", "vertex set " + t.vertex_sets[v].to_string() + " is not tight");

  // T3: eps defined exactly on the skeleton edges.
  for (const auto& [e, s] : t.eps)
    if (!t.skeleton.has_edge(e.first, e.second))
      fail("T3", "eps defined on a non-edge");
  for (auto e : t.skeleton.edges())
    if (!t.eps.count(e)) fail("T3", "eps missing on a skeleton edge");

  // T4: the vertex sets and eps values form a near partition of V(G).
  {
    VertexSet covered(t.host_n);
    bool disjoint = true;
    auto absorb = [&](const VertexSet& s) {
      if (covered.intersects(s)) disjoint = false;
      covered = covered | s;
    };
    for (const auto& s : t.vertex_sets) {
      if (s.empty()) fail("T4", "a skeleton vertex carries an empty set");
      absorb(s);
    }
    for (const auto& [e, s] : t.eps) absorb(s);
    if (!disjoint) fail("T4", "vertex sets and eps values are not pairwise disjoint");
    if (covered != g.all_vertices())
      fail("T4", "union misses " + covered.complement().to_string());
  }
  if (!rep.ok) return rep;

  // T5: each eps(vw) is passable for both endpoints and largest among the
  // passable-for-both subsets of v + eps(vw) + w, and an edge leaves
  // v + eps(vw) toward w.
  for (auto e : t.skeleton.edges()) {
    const VertexSet& ev = t.vertex_sets[e.first];
    const VertexSet& ew = t.vertex_sets[e.second];
    const VertexSet& s = t.eps.at(e);
    if (!is_passable_for(o, s, ev) || !is_passable_for(o, s, ew)) {
      fail("T5", "eps" + s.to_string() + " is not passable for both endpoints");
      continue;
    }
    VertexSet zone = ev | s | ew;
    std::vector<int> members = zone.to_vector();
    if (members.size() <= 24) {
      for (uint64_t mask = 0; mask < (uint64_t{1} << members.size()); ++mask) {
        if (std::popcount(mask) % 2 != 0) continue;
        VertexSet cand(t.host_n);
        for (size_t i = 0; i < members.size(); ++i)
          if ((mask >> i) & 1) cand.set(members[i]);
        if (cand.subset_of(s)) continue;
        if (is_passable_for(o, cand, ev) && is_passable_for(o, cand, ew)) {
          fail("T5", "eps is not maximal: " + cand.to_string() + " is passable for both");
          break;
        }
      }
    }
    bool has_edge = false;
    VertexSet side = ev | s;
    for (auto ge : g.edges())
      if (side.test(ge.first) != side.test(ge.second) &&
          (ew.test(ge.first) || ew.test(ge.second)))
        has_edge = true;
    if (!has_edge) fail("T5", "no edge from v + eps(vw) to w");
  }

  // T6: no host edge joins non-adjacent skeleton vertices.
  for (int u = 0; u < k; ++u)
    for (int w = u + 1; w < k; ++w) {
      if (t.skeleton.has_edge(u, w)) continue;
      for (auto ge : g.edges())
        if ((t.vertex_sets[u].test(ge.first) && t.vertex_sets[w].test(ge.second)) ||
            (t.vertex_sets[w].test(ge.first) && t.vertex_sets[u].test(ge.second)))
          fail("T6", "edge between non-adjacent skeleton vertices " + std::to_string(u) + "," +
                         std::to_string(w));
    }

  // T7: in a cycle, eps(uv) + v + eps(vw) admits no 3-partition into tight
  // sets P1, P2, P3 with u+P1+P2 and P2+P3+w tight.
  if (skel_cycle) {
    for (int v = 0; v < k; ++v) {
      auto nbrs = t.skeleton.neighbors(v);
      int u = nbrs[0], w = nbrs[1];
      VertexSet zone = t.eps.at(make_edge(u, v)) | t.vertex_sets[v] | t.eps.at(make_edge(v, w));
      std::vector<int> members = zone.to_vector();
      size_t m = members.size();
      if (m < 3) continue;
      bool violated = false;
      std::vector<int> assign(m, 0);
      std::function<void(size_t)> rec = [&](size_t i) {
        if (violated) return;
        if (i == m) {
          std::array<VertexSet, 3> parts{VertexSet(t.host_n), VertexSet(t.host_n),
                                         VertexSet(t.host_n)};
          for (size_t j = 0; j < m; ++j) parts[assign[j]].set(members[j]);
          for (const auto& part : parts)
            if (part.empty()) return;
          for (const auto& part : parts)
            if (!o.is_tight(part)) return;
          if (o.is_tight(t.vertex_sets[u] | parts[0] | parts[1]) &&
              o.is_tight(parts[1] | parts[2] | t.vertex_sets[w]))
            violated = true;
          return;
        }
        for (int b = 0; b < 3; ++b) {
          assign[i] = b;
          rec(i + 1);
        }
      };
      rec(0);
      if (violated)
        fail("T7", "splittable cycle segment at skeleton vertex " + std::to_string(v));
    }
  }

  return rep;
}

Torsoid induced_torsoid(const TightOracle& o, const TightSetPartition& p) {
  auto cls = classify_collapse(o, p);
  if (!cls.torsoid_inducing) throw InputError("partition is not torsoid inducing");
  auto col = collapse(o, p);
  size_t k = p.classes.size();

  std::map<Edge, VertexSet> delta;
  for (auto e : col.graph.edges())
    delta[e] = largest_passable_between(o, p.classes[e.first], p.classes[e.second]);

  std::vector<VertexSet> tau(k);
  for (size_t i = 0; i < k; ++i) {
    tau[i] = p.classes[i];
    for (int j : col.graph.neighbors(static_cast<int>(i)))
      tau[i] = tau[i].minus(delta.at(make_edge(static_cast<int>(i), j)));
    if (tau[i].empty() || !o.is_tight(tau[i]))
      throw InternalError("class residue must be a nonempty tight set");
  }

  // renumber so that the carried sets are sorted
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return tau[a] < tau[b]; });
  std::vector<int> new_id(k);
  for (size_t i = 0; i < k; ++i) new_id[order[i]] = static_cast<int>(i);

  Torsoid t;
  t.host_n = o.graph().vertex_count();
  t.cyclic = cls.cyclic;
  t.vertex_sets.resize(k);
  for (size_t i = 0; i < k; ++i) t.vertex_sets[new_id[i]] = tau[i];
  std::vector<Edge> skel_edges;
  for (auto e : col.graph.edges()) {
    Edge ne = make_edge(new_id[e.first], new_id[e.second]);
    skel_edges.push_back(ne);
    t.eps[ne] = delta.at(e);
  }
  t.skeleton = build_graph(static_cast<int>(k), std::move(skel_edges));
  return t;
}

std::vector<ChoiceFunction> all_choice_functions(const Torsoid& t) {
  std::vector<ChoiceFunction> out{ChoiceFunction{}};
  for (auto e : t.skeleton.edges()) {
    std::vector<ChoiceFunction> next;
    for (const auto& cf : out)
      for (int endpoint : {e.first, e.second}) {
        ChoiceFunction ext = cf;
        ext.pick[e] = endpoint;
        next.push_back(std::move(ext));
      }
    out = std::move(next);
  }
  return out;
}

TightSetPartition partition_from_choice(const TightOracle& o, const Torsoid& t,
                                        const ChoiceFunction& k) {
  std::vector<VertexSet> classes(t.vertex_sets);
  for (auto e : t.skeleton.edges()) {
    auto it = k.pick.find(e);
    if (it == k.pick.end() || (it->second != e.first && it->second != e.second))
      throw InputError("choice function must pick an endpoint of every skeleton edge");
    classes[it->second] = classes[it->second] | t.eps.at(e);
  }
  return validate_partition(o, std::move(classes));
}

std::optional<TorsoidCorrespondence> find_torsoid_correspondence(const TightOracle& o,
                                                                 const Torsoid& t,
                                                                 const TightSetPartition& p) {
  if (t.host_n != o.graph().vertex_count())
    throw InputError("torsoid does not belong to this graph");
  int k = t.skeleton.vertex_count();
  if (static_cast<int>(p.classes.size()) != k) return std::nullopt;
  TorsoidCorrespondence corr;
  corr.sigma.assign(k, -1);
  std::vector<bool> used(k, false);
  for (int v = 0; v < k; ++v) {
    // forced: the class containing all of v
    int home = -1;
    for (int j = 0; j < k; ++j)
      if (t.vertex_sets[v].subset_of(p.classes[j])) home = j;
    if (home == -1 || used[home]) return std::nullopt;
    VertexSet bound = t.vertex_sets[v] | incident_eps_union(t, v);
    if (!p.classes[home].subset_of(bound)) return std::nullopt;
    used[home] = true;
    corr.sigma[v] = home;
  }
  corr.strong = true;
  for (int v = 0; v < k && corr.strong; ++v) {
    const VertexSet& cls = p.classes[corr.sigma[v]];
    for (int w : t.skeleton.neighbors(v)) {
      VertexSet part = cls & t.eps.at(make_edge(v, w));
      if (!part.empty() && part != t.eps.at(make_edge(v, w))) corr.strong = false;
    }
  }
  return corr;
}

int theta(const Torsoid& t, const VertexSet& x) {
  int c = static_cast<int>(odd_skeleton_vertices(t, x).size());
  int k = t.skeleton.vertex_count();
  return std::min(c, k - c);
}

int theta(const Torsoid& t, const TightCutRecord& c) { return theta(t, c.cut.shore); }

Residence classify_residence(const TightOracle& o, const Torsoid& t, const VertexSet& x) {
  if (!o.is_tight(x)) throw InputError("set is not tight: " + x.to_string());
  int k = t.skeleton.vertex_count();
  auto sig_x = odd_skeleton_vertices(t, x);
  int c = static_cast<int>(sig_x.size());
  int th = std::min(c, k - c);
  if (th != 0 && th % 2 == 0)
    throw InternalError("theta must be 0 or odd, got " + std::to_string(th));

  Residence r;
  r.theta = th;
  VertexSet comp = x.complement();

  if (th == 0) {
    r.kind = ResidenceKind::kEdge;
    // the shore meeting every skeleton vertex evenly lies inside one eps set
    r.witness = c == 0 ? x : comp;
    for (auto e : t.skeleton.edges())
      if (r.witness.subset_of(t.eps.at(e))) {
        r.edge = e;
        return r;
      }
    throw InternalError("edge-residing shore not contained in any eps set");
  }

  if (th == 1) {
    r.kind = ResidenceKind::kVertex;
    r.witness = c == 1 ? x : comp;
    int v = odd_skeleton_vertices(t, r.witness)[0];
    VertexSet bound = t.vertex_sets[v] | incident_eps_union(t, v);
    if (!r.witness.subset_of(bound))
      throw InternalError("vertex-residing shore escapes v and its incident eps sets");
    for (int w : t.skeleton.neighbors(v))
      if ((r.witness & t.eps.at(make_edge(v, w))).count() % 2 != 0)
        throw InternalError("vertex-residing shore meets an incident eps set oddly");
    r.vertex = v;
    r.proper = t.vertex_sets[v].subset_of(r.witness);
    return r;
  }

  if (!t.cyclic)
    throw InternalError("noncyclic torsoid with theta " + std::to_string(th));
  r.kind = ResidenceKind::kInterval;
  if (c < k - c)
    r.witness = x;
  else if (c > k - c)
    r.witness = comp;
  else
    r.witness = x < comp ? x : comp;
  auto ids = odd_skeleton_vertices(t, r.witness);
  if (!is_interval_of_cycle(t.skeleton, ids))
    throw InternalError("interval-residing signature is not an interval of the cycle");
  // sandwich: contains I and the eps sets internal to I, stays inside I and
  // the eps sets incident to I
  VertexSet lower(t.host_n), upper(t.host_n);
  VertexSet in_i = VertexSet::from_vertices(k, ids);
  for (int v : ids) lower = lower | t.vertex_sets[v];
  upper = lower;
  for (auto e : t.skeleton.edges()) {
    bool a = in_i.test(e.first), b = in_i.test(e.second);
    if (a && b) lower = lower | t.eps.at(e);
    if (a || b) upper = upper | t.eps.at(e);
  }
  if (!lower.subset_of(r.witness) || !r.witness.subset_of(upper))
    throw InternalError("interval-residing shore violates the containment sandwich");
  r.interval = ids;
  return r;
}

}  // namespace mcg
