#include <doctest.h>

#include "mcg/corpus.hpp"
#include "mcg/torso.hpp"

using namespace mcg;

namespace {

NestedCutFamily family_with(const TightOracle& o, std::initializer_list<int> shore) {
  return extend_to_maximal_nested_family(
      o, {cut_of(o.graph(), VertexSet::of(o.graph().vertex_count(), shore))});
}

}  // namespace

TEST_CASE("maximal stars of hexagon families") {
  TightOracle o(corpus_graph("C6"));
  auto fam = family_with(o, {0, 1, 2});
  auto stars = maximal_stars(o, fam);
  REQUIRE(stars.size() == 2);
  CHECK(stars[0].partition ==
        TightSetPartition{{VertexSet::of(6, {0}), VertexSet::of(6, {1}), VertexSet::of(6, {2}),
                           VertexSet::of(6, {3, 4, 5})}});
  CHECK(stars[1].partition ==
        TightSetPartition{{VertexSet::of(6, {0, 1, 2}), VertexSet::of(6, {3}),
                           VertexSet::of(6, {4}), VertexSet::of(6, {5})}});
}

TEST_CASE("maximal stars of the brick and the ladder") {
  TightOracle k4(corpus_graph("K4"));
  auto stars = maximal_stars(k4, extend_to_maximal_nested_family(k4, {}));
  REQUIRE(stars.size() == 1);
  CHECK(stars[0].partition == singleton_partition(k4));

  // the ladder family around the u side has a K4 star and a C4 star
  TightOracle kl(corpus_graph("K4_LADDER"));
  auto fam = family_with(kl, {0, 4, 5});
  auto kstars = maximal_stars(kl, fam);
  REQUIRE(kstars.size() == 2);
  CHECK(kstars[0].partition ==
        TightSetPartition{{VertexSet::of(6, {0}), VertexSet::of(6, {1, 2, 3}),
                           VertexSet::of(6, {4}), VertexSet::of(6, {5})}});
  CHECK(kstars[1].partition ==
        TightSetPartition{{VertexSet::of(6, {0, 4, 5}), VertexSet::of(6, {1}),
                           VertexSet::of(6, {2}), VertexSet::of(6, {3})}});

  auto torsos = torsos_of(kl, fam);
  int c4_count = 0, k4_count = 0;
  for (const auto& t : torsos) {
    if (t.c4)
      ++c4_count;
    else if (canonical_form(t.graph.graph) == canonical_form(corpus_graph("K4")))
      ++k4_count;
  }
  CHECK(c4_count == 1);
  CHECK(k4_count == 1);
}

TEST_CASE("cleave relation") {
  TightOracle o(corpus_graph("C6"));
  auto fam = family_with(o, {0, 1, 2});
  auto torsos = torsos_of(o, fam);
  auto torsoids = enumerate_torsoids(o);
  REQUIRE(torsoids.size() == 1);
  for (const auto& torso : torsos) CHECK(cleaves(torso, torsoids[0]));

  // host mismatch is a clean false
  TightOracle k4(corpus_graph("K4"));
  auto k4_torsos = torsos_of(k4, extend_to_maximal_nested_family(k4, {}));
  CHECK_FALSE(cleaves(k4_torsos[0], torsoids[0]));
}

TEST_CASE("kappa maps every torso of every family to the same torsoids") {
  TightOracle o(corpus_graph("C6"));
  auto torsoids = enumerate_torsoids(o);
  REQUIRE(torsoids.size() == 1);
  for (auto shore : {std::initializer_list<int>{0, 1, 2}, {1, 2, 3}, {2, 3, 4}}) {
    auto fam = family_with(o, shore);
    for (const auto& torso : torsos_of(o, fam))
      CHECK(kappa_of_torso(o, torso) == torsoids[0]);
  }

  TightOracle kl(corpus_graph("K4_LADDER"));
  auto f1 = family_with(kl, {0, 4, 5});
  auto f2 = family_with(kl, {1, 4, 5});
  std::vector<Torsoid> k4_images;
  for (const auto& fam : {f1, f2})
    for (const auto& torso : torsos_of(kl, fam))
      if (!torso.c4) k4_images.push_back(kappa_of_torso(kl, torso));
  REQUIRE(k4_images.size() == 2);
  CHECK(k4_images[0] == k4_images[1]);
  CHECK(k4_images[0].eps.at({0, 1}) == VertexSet::of(6, {4, 5}));
}

TEST_CASE("residents project onto a maximal family of the skeleton") {
  TightOracle kl(corpus_graph("K4_LADDER"));
  auto fam = family_with(kl, {0, 4, 5});
  auto torsoids = enumerate_torsoids(kl);
  const Torsoid& noncyclic = torsoids[0];
  REQUIRE_FALSE(noncyclic.cyclic);
  auto projected = residents_family(kl, fam, noncyclic);
  CHECK(projected.cuts.size() == 4);
  for (const auto& rec : projected.cuts) CHECK(rec.trivial);

  TightOracle c6(corpus_graph("C6"));
  auto c6fam = family_with(c6, {0, 1, 2});
  auto c6t = enumerate_torsoids(c6)[0];
  auto c6proj = residents_family(c6, c6fam, c6t);
  CHECK(c6proj.cuts.size() == 7);  // six trivial plus the interval cut

  TightOracle k4(corpus_graph("K4"));
  auto k4proj = residents_family(k4, extend_to_maximal_nested_family(k4, {}),
                                 enumerate_torsoids(k4)[0]);
  CHECK(k4proj.cuts.size() == 4);
}

TEST_CASE("maximal residents") {
  TightOracle kl(corpus_graph("K4_LADDER"));
  auto fam = family_with(kl, {0, 4, 5});
  auto t = enumerate_torsoids(kl)[0];
  REQUIRE_FALSE(t.cyclic);
  // skeleton vertex 0 carries {u}; the family contains {u,p1,p2}
  CHECK(maximal_resident(kl, fam, t, {0}) == VertexSet::of(6, {0, 4, 5}));
  // toward v the big side crosses the family, so the singleton remains
  CHECK(maximal_resident(kl, fam, t, {1}) == VertexSet::of(6, {1}));

  TightOracle c6(corpus_graph("C6"));
  auto c6fam = family_with(c6, {0, 1, 2});
  auto c6t = enumerate_torsoids(c6)[0];
  CHECK(maximal_resident(c6, c6fam, c6t, {0, 1, 2}) == VertexSet::of(6, {0, 1, 2}));
  // no resident lives on an interval absent from the family
  CHECK_THROWS_AS(maximal_resident(c6, c6fam, c6t, {1, 2, 3}), InputError);
}

TEST_CASE("preimage counts") {
  TightOracle c6(corpus_graph("C6"));
  auto rep = verify_preimage_counts(c6, extend_to_maximal_nested_family(c6, {}));
  CHECK(rep.ok);
  REQUIRE(rep.entries.size() == 1);
  CHECK(rep.entries[0].c4_torsos == 2);  // 6/2 - 1

  TightOracle c10(corpus_graph("C10"));
  auto rep10 = verify_preimage_counts(c10, extend_to_maximal_nested_family(c10, {}));
  CHECK(rep10.ok);
  REQUIRE(rep10.entries.size() == 1);
  CHECK(rep10.entries[0].c4_torsos == 4);  // 10/2 - 1

  TightOracle kl(corpus_graph("K4_LADDER"));
  for (auto shore : {std::initializer_list<int>{0, 4, 5}, {1, 4, 5}}) {
    auto repl = verify_preimage_counts(kl, family_with(kl, shore));
    CHECK(repl.ok);
    for (const auto& e : repl.entries) {
      if (e.torsoid.cyclic)
        CHECK(e.c4_torsos == 1);
      else
        CHECK(e.non_c4_torsos == 1);
    }
  }
}
