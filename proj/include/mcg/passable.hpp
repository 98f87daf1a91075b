#pragma once

#include <vector>

#include "mcg/tight.hpp"

namespace mcg {

// S is passable for P when P minus S and P union S are both tight.
bool is_passable_for(const TightOracle& o, const VertexSet& s, const VertexSet& p);

// S is passable between disjoint tight sets P and Q when it lies inside
// P union Q and is passable for both.  Throws when P, Q are not disjoint
// tight sets.
bool is_passable_between(const TightOracle& o, const VertexSet& s, const VertexSet& p,
                         const VertexSet& q);

enum class PassableStrategy {
  kIncremental,  // grow the union, skipping subsets of what is already found
  kFullScan,     // test every even subset; the reference algorithm
};

// The union of all sets passable between P and Q, itself passable.
// Requires P union Q to be a proper subset of the vertex set.
VertexSet largest_passable_between(const TightOracle& o, const VertexSet& p, const VertexSet& q,
                                   PassableStrategy strategy = PassableStrategy::kIncremental);

// Every set passable between P and Q, sorted (the empty set included).
std::vector<VertexSet> all_passable_between(const TightOracle& o, const VertexSet& p,
                                            const VertexSet& q);

}  // namespace mcg
