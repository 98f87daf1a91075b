#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mcg/matching.hpp"
#include "mcg/tight.hpp"

namespace mcg {

bool is_strongly_connected(const Digraph& d);

// Strongly connected with no directed 1-separation having both sides proper.
// A 2-cycle qualifies: it cannot be pulled apart any further.
bool is_strongly_2connected(const Digraph& d);

// Directed 1-separation record.  a and b cover the vertex set and share
// exactly the separator.  A record additionally names which crossing
// direction is arc-free; when both directions are arc-free the pair yields
// two records.  This makes the records correspond one-to-one to the tight
// sets of the matching graph.
struct OneSeparation {
  VertexSet a, b;
  int separator = -1;
  bool no_arcs_b_to_a = true;  // true: no arc from b minus a into a minus b

  bool operator==(const OneSeparation& o) const {
    return a == o.a && b == o.b && no_arcs_b_to_a == o.no_arcs_b_to_a;
  }
  bool operator<(const OneSeparation& o) const {
    if (separator != o.separator) return separator < o.separator;
    if (!(a == o.a)) return a < o.a;
    return no_arcs_b_to_a > o.no_arcs_b_to_a;
  }
};

std::vector<OneSeparation> enumerate_one_separations(const Digraph& d,
                                                     const EnumerationBounds& bounds = {});

struct SeparationBijection {
  std::vector<std::pair<VertexSet, OneSeparation>> pairs;  // tight set -> separation
  size_t tight_count = 0;
  size_t separation_count = 0;
  bool bijective = false;
};

// The explicit pairing between tight sets of the matching graph and the
// 1-separation records: the matching edge crossing the tight cut becomes
// the separator, matching edges inside become one side.  The shore colour
// of the crossing edge's endpoint decides the arc-free direction (an
// endpoint in the black class means arcs leave the side).
SeparationBijection separation_tight_bijection(const Digraph& d,
                                               const EnumerationBounds& bounds = {});

// Contract one side of a proper 1-separation onto the separator; parallel
// arcs merge and loops vanish.  Returns (contract b, contract a).
std::pair<Digraph, Digraph> pull_apart(const Digraph& d, const OneSeparation& s);

// Repeated pulling apart along proper 1-separations chosen by the seeded
// order, until every piece has none.
std::vector<Digraph> lovasz_decompose_pieces(const Digraph& d, uint32_t order_seed,
                                             const EnumerationBounds& bounds = {});

// Same, reduced to the sorted multiset of canonical forms.
std::vector<std::string> lovasz_decompose(const Digraph& d, uint32_t order_seed,
                                          const EnumerationBounds& bounds = {});

}  // namespace mcg
