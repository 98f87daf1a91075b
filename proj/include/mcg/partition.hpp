#pragma once

#include <optional>
#include <vector>

#include "mcg/tight.hpp"

namespace mcg {

// Partition of V(G) into tight classes, classes kept sorted.
struct TightSetPartition {
  std::vector<VertexSet> classes;

  bool operator==(const TightSetPartition& o) const { return classes == o.classes; }
  bool operator<(const TightSetPartition& o) const { return classes < o.classes; }
};

// Checks the classes partition V and are all tight; errors carry a witness.
TightSetPartition validate_partition(const TightOracle& o, std::vector<VertexSet> classes);

TightSetPartition singleton_partition(const TightOracle& o);

// Quotient graph: collapse vertex i corresponds to class_of[i]; an edge is
// present iff some host edge crosses the two classes.  The result is
// verified matching covered.
struct CollapseResult {
  Graph graph;
  std::vector<VertexSet> class_of;
};

CollapseResult collapse(const TightOracle& o, const TightSetPartition& p);

// Image of a perfect matching in the collapse: one edge per crossing host
// matching edge.  Verified perfect.
Matching project_matching(const TightOracle& o, const TightSetPartition& p, const Matching& m);

// Indices of the classes meeting x oddly.  x must be tight; the union of the
// returned classes is re-verified tight and is never empty nor everything.
std::vector<int> odd_intersection_classes(const TightOracle& o, const TightSetPartition& p,
                                          const VertexSet& x);

// Bijection pairing exactly the oddly-intersecting classes: map[i] is the
// q-index paired with p-class i.
struct Correspondence {
  std::vector<int> map;
};

std::optional<Correspondence> find_correspondence(const TightOracle& o,
                                                  const TightSetPartition& p,
                                                  const TightSetPartition& q);

enum class CollapseKind { kBrick, kBrace, kCycle, kOther };

struct CollapseClass {
  CollapseKind kind = CollapseKind::kOther;
  bool cyclic = false;
  bool maximal_cyclic = false;
  bool torsoid_inducing = false;
};

// Brick/brace via bipartiteness plus absence of nontrivial tight cuts in the
// collapse (tested through unions of classes in the host); maximal
// cyclicity by exhaustive search for a 3-way class split that keeps the
// collapse a cycle.
CollapseClass classify_collapse(const TightOracle& o, const TightSetPartition& p);

// True when the collapse has at least 4 classes and no nontrivial tight cut.
bool collapse_is_bob(const TightOracle& o, const TightSetPartition& p);

// Repeatedly split the first splittable class (lexicographically least
// split) into three tight classes preserving cyclicity, until maximal.
TightSetPartition refine_to_maximal_cyclic(const TightOracle& o, const TightSetPartition& p);

// All partitions of V into tight classes, sorted.  Exponential; intended for
// the small verification corpus.
std::vector<TightSetPartition> enumerate_tight_set_partitions(const TightOracle& o);

}  // namespace mcg
