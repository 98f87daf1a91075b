#pragma once

#include <cstdint>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <vector>

#include "mcg/graph.hpp"
#include "mcg/matching.hpp"

namespace mcg {

enum class Parity { kEven, kOdd };

// Parity of |cut(X) intersect M|; matching-independent for tight hosts.
Parity parity_of(const Graph& g, const Matching& m, const VertexSet& x);

int matching_boundary_count(const Matching& m, const VertexSet& x);

// Definition-literal check: every listed perfect matching has exactly one
// edge across the cut.  Kept free of shortcuts so it can serve as the
// oracle for the optimized path.
bool is_tight_literal(const std::vector<Matching>& matchings, const VertexSet& x);

struct TightCutRecord {
  Cut cut;
  bool trivial = false;

  bool operator==(const TightCutRecord& o) const { return cut == o.cut; }
  bool operator<(const TightCutRecord& o) const { return cut < o.cut; }
};

// Matching-covered host graph with its enumerated perfect matchings and a
// memoized tightness test.  The matchings cache is immutable after
// construction; the memo is guarded by a mutex.
class TightOracle {
 public:
  explicit TightOracle(Graph g, EnumerationBounds bounds = {});

  const Graph& graph() const { return g_; }
  const EnumerationBounds& bounds() const { return bounds_; }
  const std::vector<Matching>& matchings() const { return matchings_; }

  // Fast path: reject even sets and sets with a disconnected shore, then
  // verify against the cached matchings.
  bool is_tight(const VertexSet& x) const;

  // Every tight set (both shores of every tight cut), sorted.
  const std::vector<VertexSet>& all_tight_sets() const;

  std::vector<TightCutRecord> tight_cuts(bool nontrivial_only = false) const;

 private:
  Graph g_;
  EnumerationBounds bounds_;
  std::vector<Matching> matchings_;
  mutable std::mutex mu_;
  mutable std::unordered_map<VertexSet, bool, VertexSetHash> memo_;
  mutable std::optional<std::vector<VertexSet>> tight_sets_;
};

// Nested: some pair of inducing shores (complements allowed) is disjoint.
bool are_nested_sets(const VertexSet& x, const VertexSet& y);
bool are_nested(const TightCutRecord& a, const TightCutRecord& b);

struct NestedCutFamily {
  std::vector<TightCutRecord> cuts;  // sorted by normalized shore
  bool maximal = false;
};

// Greedy extension of a pairwise-nested seed to a maximal nested family.
// All trivial cuts enter first; remaining candidates are taken in canonical
// order, or in a seed-shuffled order when order_seed != 0.
NestedCutFamily extend_to_maximal_nested_family(const TightOracle& o,
                                                const std::vector<Cut>& seed,
                                                uint32_t order_seed = 0);

// D(C): both shores of every cut of the family, sorted.
std::vector<VertexSet> family_tight_sets(const TightOracle& o, const NestedCutFamily& c);

}  // namespace mcg
