#include <doctest.h>

#include "mcg/corpus.hpp"
#include "mcg/torsoid.hpp"

using namespace mcg;

namespace {

// Skeleton K4 on the singletons u,v,w,x with eps(uv) = {p1,p2}.
Torsoid ladder_torsoid() {
  Torsoid t;
  t.host_n = 6;
  t.cyclic = false;
  for (int v = 0; v < 4; ++v) t.vertex_sets.push_back(VertexSet::of(6, {v}));
  t.skeleton = build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  for (auto e : t.skeleton.edges()) t.eps[e] = VertexSet(6);
  t.eps[{0, 1}] = VertexSet::of(6, {4, 5});
  return t;
}

Torsoid cycle_torsoid(int n) {
  Torsoid t;
  t.host_n = n;
  t.cyclic = true;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    t.vertex_sets.push_back(VertexSet::of(n, {v}));
    edges.push_back(make_edge(v, (v + 1) % n));
  }
  t.skeleton = build_graph(n, edges);
  for (auto e : t.skeleton.edges()) t.eps[e] = VertexSet(n);
  return t;
}

TightSetPartition ladder_star(const TightOracle& o) {
  return validate_partition(o, {VertexSet::of(6, {0, 4, 5}), VertexSet::of(6, {1}),
                                VertexSet::of(6, {2}), VertexSet::of(6, {3})});
}

bool has_violation(const TorsoidValidation& rep, const std::string& axiom) {
  for (const auto& v : rep.violations)
    if (v.axiom == axiom) return true;
  return false;
}

}  // namespace

TEST_CASE("validate_torsoid accepts the reference torsoids") {
  TightOracle kl(corpus_graph("K4_LADDER"));
  CHECK(validate_torsoid(kl, ladder_torsoid()).ok);

  TightOracle c6(corpus_graph("C6"));
  CHECK(validate_torsoid(c6, cycle_torsoid(6)).ok);
}

TEST_CASE("validate_torsoid reports the violated axiom") {
  TightOracle kl(corpus_graph("K4_LADDER"));

  // dropping p1, p2 from every set breaks the near partition
  Torsoid missing = ladder_torsoid();
  missing.eps[{0, 1}] = VertexSet(6);
  auto rep_missing = validate_torsoid(kl, missing);
  CHECK_FALSE(rep_missing.ok);
  CHECK(has_violation(rep_missing, "T4"));

  // attaching p1, p2 to the vertex set of u leaves an eps set that is not
  // maximal among the passable sets
  Torsoid attached = ladder_torsoid();
  attached.vertex_sets[0] = VertexSet::of(6, {0, 4, 5});
  attached.eps[{0, 1}] = VertexSet(6);
  auto rep_attached = validate_torsoid(kl, attached);
  CHECK_FALSE(rep_attached.ok);
  CHECK(has_violation(rep_attached, "T5"));

  // an even vertex set cannot be tight
  Torsoid untight = ladder_torsoid();
  untight.vertex_sets[0] = VertexSet::of(6, {0, 4});
  untight.eps[{0, 1}] = VertexSet::of(6, {5});
  auto rep_untight = validate_torsoid(kl, untight);
  CHECK_FALSE(rep_untight.ok);
  CHECK(has_violation(rep_untight, "T2"));
}

TEST_CASE("induced torsoid of the reference partitions") {
  TightOracle c6(corpus_graph("C6"));
  CHECK(induced_torsoid(c6, singleton_partition(c6)) == cycle_torsoid(6));

  TightOracle kl(corpus_graph("K4_LADDER"));
  CHECK(induced_torsoid(kl, ladder_star(kl)) == ladder_torsoid());

  auto middle = validate_partition(c6, hex_partition_classes("HEX_MIDDLE"));
  CHECK_THROWS_AS(induced_torsoid(c6, middle), InputError);
}

TEST_CASE("choice functions generate the strong-correspondence partitions") {
  TightOracle kl(corpus_graph("K4_LADDER"));
  Torsoid t = ladder_torsoid();

  ChoiceFunction pick_u;
  for (auto e : t.skeleton.edges()) pick_u.pick[e] = e.first;
  auto pu = partition_from_choice(kl, t, pick_u);
  CHECK(pu == ladder_star(kl));

  ChoiceFunction pick_v = pick_u;
  pick_v.pick[{0, 1}] = 1;
  auto pv = partition_from_choice(kl, t, pick_v);
  auto expected = validate_partition(kl, {VertexSet::of(6, {0}), VertexSet::of(6, {1, 4, 5}),
                                          VertexSet::of(6, {2}), VertexSet::of(6, {3})});
  CHECK(pv == expected);

  TightOracle c6(corpus_graph("C6"));
  Torsoid tc = cycle_torsoid(6);
  ChoiceFunction any;
  for (auto e : tc.skeleton.edges()) any.pick[e] = e.second;
  CHECK(partition_from_choice(c6, tc, any) == singleton_partition(c6));

  CHECK(all_choice_functions(t).size() == 64);  // 2^6 skeleton edges
}

TEST_CASE("torsoid correspondence with partitions") {
  TightOracle kl(corpus_graph("K4_LADDER"));
  Torsoid t = ladder_torsoid();

  auto corr = find_torsoid_correspondence(kl, t, ladder_star(kl));
  REQUIRE(corr.has_value());
  CHECK(corr->strong);
  CHECK(corr->sigma[0] == 0);  // {u} inside {u,p1,p2}, the first sorted class

  TightOracle c6(corpus_graph("C6"));
  auto id = find_torsoid_correspondence(c6, cycle_torsoid(6), singleton_partition(c6));
  REQUIRE(id.has_value());
  CHECK(id->strong);
  for (int v = 0; v < 6; ++v) CHECK(id->sigma[v] == v);

  // three skeleton vertices land in one class: no bijection
  auto folded = validate_partition(kl, {VertexSet::of(6, {1, 2, 3}), VertexSet::of(6, {0}),
                                        VertexSet::of(6, {4}), VertexSet::of(6, {5})});
  CHECK_FALSE(find_torsoid_correspondence(kl, t, folded).has_value());
}

TEST_CASE("theta counts oddly met skeleton vertices on the smaller side") {
  Torsoid tc6 = cycle_torsoid(6);
  CHECK(theta(tc6, VertexSet::of(6, {0})) == 1);
  CHECK(theta(tc6, VertexSet::of(6, {0, 1, 2})) == 3);

  Torsoid tl = ladder_torsoid();
  CHECK(theta(tl, VertexSet::of(6, {4})) == 0);
  CHECK(theta(tl, VertexSet::of(6, {0, 4, 5})) == 1);

  // the cut overload uses either shore; both give the same value
  TightOracle kl(corpus_graph("K4_LADDER"));
  for (const auto& rec : kl.tight_cuts()) {
    CHECK(theta(tl, rec) == theta(tl, rec.cut.shore));
    CHECK(theta(tl, rec) == theta(tl, rec.cut.shore.complement()));
  }
}

TEST_CASE("residence classification") {
  TightOracle kl(corpus_graph("K4_LADDER"));
  Torsoid tl = ladder_torsoid();

  Residence edge = classify_residence(kl, tl, VertexSet::of(6, {4}));
  CHECK(edge.kind == ResidenceKind::kEdge);
  CHECK(edge.edge == Edge{0, 1});
  CHECK(edge.witness == VertexSet::of(6, {4}));
  CHECK(edge.theta == 0);

  Residence vertex = classify_residence(kl, tl, VertexSet::of(6, {0, 4, 5}));
  CHECK(vertex.kind == ResidenceKind::kVertex);
  CHECK(vertex.vertex == 0);
  CHECK(vertex.proper);
  CHECK(vertex.theta == 1);

  Residence improper = classify_residence(kl, tl, VertexSet::of(6, {4, 5, 0}).complement());
  CHECK(improper.kind == ResidenceKind::kVertex);
  CHECK(improper.witness == VertexSet::of(6, {0, 4, 5}));

  TightOracle c6(corpus_graph("C6"));
  Residence interval = classify_residence(c6, cycle_torsoid(6), VertexSet::of(6, {0, 1, 2}));
  CHECK(interval.kind == ResidenceKind::kInterval);
  CHECK(interval.interval == std::vector<int>{0, 1, 2});
  CHECK(interval.theta == 3);
  CHECK(interval.witness == VertexSet::of(6, {0, 1, 2}));

  CHECK_THROWS_AS(classify_residence(c6, cycle_torsoid(6), VertexSet::of(6, {0, 1})), InputError);
}

TEST_CASE("torsoid enumeration on the corpus") {
  TightOracle c6(corpus_graph("C6"));
  auto tc6 = enumerate_torsoids(c6);
  REQUIRE(tc6.size() == 1);
  CHECK(tc6[0] == cycle_torsoid(6));

  TightOracle k4(corpus_graph("K4"));
  auto tk4 = enumerate_torsoids(k4);
  REQUIRE(tk4.size() == 1);
  CHECK_FALSE(tk4[0].cyclic);
  CHECK(tk4[0].skeleton == corpus_graph("K4"));
  for (auto e : tk4[0].skeleton.edges()) CHECK(tk4[0].eps.at(e).empty());

  // the ladder carries two torsoids: the K4 skeleton with eps(uv) = {p1,p2}
  // and a C4 skeleton u-p1-p2-v with eps(uv) = {w,x}
  TightOracle kl(corpus_graph("K4_LADDER"));
  auto tkl = enumerate_torsoids(kl);
  REQUIRE(tkl.size() == 2);
  CHECK(tkl[0] == ladder_torsoid());
  CHECK(tkl[1].cyclic);
  CHECK(tkl[1].vertex_sets == std::vector<VertexSet>{VertexSet::of(6, {0}), VertexSet::of(6, {1}),
                                                     VertexSet::of(6, {4}), VertexSet::of(6, {5})});
  CHECK(tkl[1].eps.at({0, 1}) == VertexSet::of(6, {2, 3}));
}
