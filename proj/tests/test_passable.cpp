#include <doctest.h>

#include "mcg/corpus.hpp"
#include "mcg/passable.hpp"

using namespace mcg;

TEST_CASE("the empty set is passable between any disjoint tight pair") {
  TightOracle o(corpus_graph("C6"));
  CHECK(is_passable_between(o, VertexSet(6), VertexSet::of(6, {0}), VertexSet::of(6, {1})));
  CHECK(is_passable_between(o, VertexSet(6), VertexSet::of(6, {0, 1, 2}), VertexSet::of(6, {3})));
}

TEST_CASE("passability in the ladder and the hexagon") {
  TightOracle kl(corpus_graph("K4_LADDER"));
  // the middle path {p1,p2} passes between the class containing u and the
  // class of v; it lies inside their union as the definition demands
  CHECK(is_passable_between(kl, VertexSet::of(6, {4, 5}), VertexSet::of(6, {0, 4, 5}),
                            VertexSet::of(6, {1})));
  // between the bare endpoints the containment clause rules it out
  CHECK_FALSE(is_passable_between(kl, VertexSet::of(6, {4, 5}), VertexSet::of(6, {0}),
                                  VertexSet::of(6, {1})));
  TightOracle c6(corpus_graph("C6"));
  CHECK(is_passable_between(c6, VertexSet::of(6, {1, 2}), VertexSet::of(6, {0}),
                            VertexSet::of(6, {1, 2, 3})));

  CHECK_THROWS_AS(is_passable_between(c6, VertexSet(6), VertexSet::of(6, {0, 1, 2}),
                                      VertexSet::of(6, {2, 3, 4})),
                  InputError);  // not disjoint
  CHECK_THROWS_AS(is_passable_between(c6, VertexSet(6), VertexSet::of(6, {0, 1}),
                                      VertexSet::of(6, {3})),
                  InputError);  // not tight
}

TEST_CASE("largest passable set") {
  TightOracle c6(corpus_graph("C6"));
  CHECK(largest_passable_between(c6, VertexSet::of(6, {0}), VertexSet::of(6, {1})) ==
        VertexSet(6));

  TightOracle kl(corpus_graph("K4_LADDER"));
  CHECK(largest_passable_between(kl, VertexSet::of(6, {0, 4, 5}), VertexSet::of(6, {1})) ==
        VertexSet::of(6, {4, 5}));
  CHECK(largest_passable_between(kl, VertexSet::of(6, {0}), VertexSet::of(6, {2})) ==
        VertexSet(6));
  CHECK(largest_passable_between(kl, VertexSet::of(6, {0}), VertexSet::of(6, {1})) ==
        VertexSet(6));

  // both strategies agree
  for (auto strategy : {PassableStrategy::kIncremental, PassableStrategy::kFullScan})
    CHECK(largest_passable_between(kl, VertexSet::of(6, {0, 4, 5}), VertexSet::of(6, {1}),
                                   strategy) == VertexSet::of(6, {4, 5}));

  // undefined when the union is the whole vertex set
  CHECK_THROWS_AS(largest_passable_between(kl, VertexSet::of(6, {0, 4, 5}),
                                           VertexSet::of(6, {1, 2, 3})),
                  InputError);
}

TEST_CASE("every passable set is even") {
  TightOracle kl(corpus_graph("K4_LADDER"));
  for (const auto& s :
       all_passable_between(kl, VertexSet::of(6, {0, 4, 5}), VertexSet::of(6, {1})))
    CHECK(s.count() % 2 == 0);
}
