#include "mcg/torso.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mcg/error.hpp"

namespace mcg {

namespace {

// Covers the vertex set with disjoint members of the family's tight sets,
// assembling every partition once (the class of the lowest uncovered vertex
// is canonical within a partition).
void assemble_partitions(const std::vector<VertexSet>& candidates, const VertexSet& covered,
                         std::vector<VertexSet>& cur, std::vector<std::vector<VertexSet>>& out) {
  int v = covered.complement().lowest();
  if (v < 0) {
    out.push_back(cur);
    return;
  }
  for (const auto& s : candidates) {
    if (!s.test(v) || s.intersects(covered)) continue;
    cur.push_back(s);
    assemble_partitions(candidates, covered | s, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<MaximalStar> maximal_stars(const TightOracle& o, const NestedCutFamily& c) {
  if (!c.maximal) throw InputError("family must be maximal");
  auto candidates = family_tight_sets(o, c);
  std::vector<std::vector<VertexSet>> raw;
  std::vector<VertexSet> cur;
  assemble_partitions(candidates, VertexSet(o.graph().vertex_count()), cur, raw);
  std::vector<MaximalStar> out;
  for (auto& classes : raw) {
    if (classes.size() < 4) continue;
    std::sort(classes.begin(), classes.end());
    TightSetPartition p{classes};
    if (!collapse_is_bob(o, p)) continue;
    out.push_back(MaximalStar{std::move(p)});
  }
  std::sort(out.begin(), out.end(),
            [](const MaximalStar& a, const MaximalStar& b) { return a.partition < b.partition; });
  return out;
}

Torso make_torso(const TightOracle& o, const MaximalStar& s) {
  Torso t;
  t.star = s;
  t.graph = collapse(o, s.partition);
  t.c4 = t.graph.graph.vertex_count() == 4 && is_cycle_graph(t.graph.graph);
  return t;
}

std::vector<Torso> torsos_of(const TightOracle& o, const NestedCutFamily& c) {
  std::vector<Torso> out;
  for (const auto& s : maximal_stars(o, c)) out.push_back(make_torso(o, s));
  return out;
}

bool cleaves(const Torso& s, const Torsoid& t) {
  if (s.star.partition.classes.empty() ||
      s.star.partition.classes[0].universe_size() != t.host_n)
    return false;
  for (const auto& cls : s.star.partition.classes) {
    bool contains_one = false;
    for (const auto& vs : t.vertex_sets)
      if (vs.subset_of(cls)) {
        contains_one = true;
        break;
      }
    if (!contains_one) return false;
  }
  return true;
}

Torsoid kappa_of_torso(const TightOracle& o, const Torso& s) {
  TightSetPartition base = s.star.partition;
  if (s.c4) base = refine_to_maximal_cyclic(o, base);
  Torsoid t = induced_torsoid(o, base);
  if (!cleaves(s, t)) throw InternalError("torso does not cleave its own torsoid");
  return t;
}

std::vector<Torsoid> enumerate_torsoids(const TightOracle& o) {
  auto family = extend_to_maximal_nested_family(o, {}, 0);
  std::vector<Torsoid> out;
  for (const auto& torso : torsos_of(o, family)) {
    Torsoid t = kappa_of_torso(o, torso);
    bool seen = false;
    for (const auto& u : out)
      if (u == t) seen = true;
    if (seen) continue;
    auto rep = validate_torsoid(o, t);
    if (!rep.ok)
      throw InternalError("enumerated torsoid violates axiom " + rep.violations[0].axiom + ": " +
                          rep.violations[0].detail);
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(), torsoid_less);
  return out;
}

NestedCutFamily residents_family(const TightOracle& o, const NestedCutFamily& c,
                                 const Torsoid& t) {
  if (!c.maximal) throw InputError("family must be maximal");
  std::set<VertexSet> shores;
  std::vector<TightCutRecord> records;
  int k = t.skeleton.vertex_count();
  for (const auto& rec : c.cuts) {
    Residence r = classify_residence(o, t, rec.cut.shore);
    std::vector<int> hset;
    if (r.kind == ResidenceKind::kVertex && r.proper)
      hset = {r.vertex};
    else if (r.kind == ResidenceKind::kInterval)
      hset = r.interval;
    else
      continue;
    Cut hcut = cut_of(t.skeleton, VertexSet::from_vertices(k, hset));
    if (!shores.insert(hcut.shore).second) continue;
    int cnt = hcut.shore.count();
    records.push_back({hcut, cnt == 1 || cnt == k - 1});
  }
  std::sort(records.begin(), records.end());
  for (size_t i = 0; i < records.size(); ++i)
    for (size_t j = i + 1; j < records.size(); ++j)
      if (!are_nested(records[i], records[j]))
        throw InternalError("projected resident cuts must be nested");

  // The projected family must be maximal among nested tight cut families of
  // the skeleton.
  TightOracle skel(t.skeleton, o.bounds());
  for (const auto& rec : skel.tight_cuts()) {
    if (shores.count(rec.cut.shore)) continue;
    bool nested_with_all = true;
    for (const auto& f : records)
      if (!are_nested(rec, f)) {
        nested_with_all = false;
        break;
      }
    if (nested_with_all)
      throw InternalError("projected family is not maximal in the skeleton");
  }
  return NestedCutFamily{std::move(records), true};
}

VertexSet maximal_resident(const TightOracle& o, const NestedCutFamily& c, const Torsoid& t,
                           const std::vector<int>& target) {
  if (target.empty()) throw InputError("target must be a vertex or an interval");
  std::set<int> want(target.begin(), target.end());
  VertexSet uni(o.graph().vertex_count());
  int found = 0;
  for (const auto& y : family_tight_sets(o, c)) {
    std::vector<int> sig;
    for (size_t i = 0; i < t.vertex_sets.size(); ++i)
      if ((t.vertex_sets[i] & y).count() % 2 == 1) sig.push_back(static_cast<int>(i));
    if (std::set<int>(sig.begin(), sig.end()) != want) continue;
    uni = uni | y;
    ++found;
  }
  if (found == 0) throw InputError("no family resident with the requested signature");
  if (!o.is_tight(uni)) throw InternalError("union of same-signature residents must be tight");
  Cut cut = cut_of(o.graph(), uni);
  bool in_family = false;
  for (const auto& rec : c.cuts)
    if (rec.cut.shore == cut.shore) in_family = true;
  if (!in_family)
    throw InternalError("maximal resident must belong to the family");
  return uni;
}

PreimageReport verify_preimage_counts(const TightOracle& o, const NestedCutFamily& c) {
  PreimageReport rep;
  auto reference = enumerate_torsoids(o);
  std::vector<int> non_c4(reference.size(), 0), c4(reference.size(), 0);
  for (const auto& torso : torsos_of(o, c)) {
    Torsoid t = kappa_of_torso(o, torso);
    int idx = -1;
    for (size_t i = 0; i < reference.size(); ++i)
      if (reference[i] == t) idx = static_cast<int>(i);
    if (idx < 0) {
      rep.ok = false;
      rep.detail = "a torso maps to a torsoid outside the enumerated list";
      return rep;
    }
    (torso.c4 ? c4 : non_c4)[idx]++;
  }
  rep.ok = true;
  for (size_t i = 0; i < reference.size(); ++i) {
    PreimageEntry e;
    e.torsoid = reference[i];
    e.non_c4_torsos = non_c4[i];
    e.c4_torsos = c4[i];
    if (reference[i].cyclic) {
      e.expected_non_c4 = 0;
      e.expected_c4 = reference[i].skeleton.vertex_count() / 2 - 1;
    } else {
      e.expected_non_c4 = 1;
      e.expected_c4 = 0;
    }
    e.ok = e.non_c4_torsos == e.expected_non_c4 && e.c4_torsos == e.expected_c4;
    if (!e.ok) rep.ok = false;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace mcg
