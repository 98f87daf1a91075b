#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mcg/partition.hpp"
#include "mcg/passable.hpp"

namespace mcg {

// Skeleton graph H whose vertices carry tight vertex sets of the host, plus
// the edge map eps assigning each skeleton edge its largest passable set.
// Skeleton vertex i carries vertex_sets[i]; the list is sorted, so equality
// of torsoids is plain componentwise equality (torsoids are canonical
// subobjects of the host, identity is on the nose).
struct Torsoid {
  int host_n = 0;
  bool cyclic = false;
  std::vector<VertexSet> vertex_sets;
  Graph skeleton;
  std::map<Edge, VertexSet> eps;
};

bool operator==(const Torsoid& a, const Torsoid& b);
bool operator!=(const Torsoid& a, const Torsoid& b);
bool torsoid_less(const Torsoid& a, const Torsoid& b);

struct AxiomViolation {
  std::string axiom;  // "T1".."T7"
  std::string detail;
};

struct TorsoidValidation {
  bool ok = true;
  std::vector<AxiomViolation> violations;
};

// Checks the seven torsoid axioms exhaustively: maximality of eps by a full
// passable-subset scan, the cyclic no-3-split condition by a full
// 3-partition scan.
TorsoidValidation validate_torsoid(const TightOracle& o, const Torsoid& t);

// The torsoid induced by a torsoid-inducing partition: eps from the largest
// passable set between adjacent classes, vertex sets as the class residues.
Torsoid induced_torsoid(const TightOracle& o, const TightSetPartition& p);

// Endpoint selection per skeleton edge.
struct ChoiceFunction {
  std::map<Edge, int> pick;
};

std::vector<ChoiceFunction> all_choice_functions(const Torsoid& t);

// Classes v union the eps sets assigned to v by the choice function.
TightSetPartition partition_from_choice(const TightOracle& o, const Torsoid& t,
                                        const ChoiceFunction& k);

// sigma[v] = index of the partition class with v subset sigma(v) subset
// v union incident eps.  The map is forced: sigma(v) must be the class
// containing the whole of v.
struct TorsoidCorrespondence {
  std::vector<int> sigma;
  bool strong = false;
};

std::optional<TorsoidCorrespondence> find_torsoid_correspondence(const TightOracle& o,
                                                                 const Torsoid& t,
                                                                 const TightSetPartition& p);

// min over the two shores of the number of skeleton vertices met oddly.
int theta(const Torsoid& t, const VertexSet& x);
int theta(const Torsoid& t, const TightCutRecord& c);

enum class ResidenceKind { kEdge, kVertex, kInterval };

struct Residence {
  ResidenceKind kind = ResidenceKind::kEdge;
  Edge edge{-1, -1};               // kind == kEdge
  int vertex = -1;                 // kind == kVertex
  bool proper = false;             // vertex residence with the skeleton set contained
  std::vector<int> interval;       // kind == kInterval, sorted skeleton ids
  int theta = 0;
  VertexSet witness;               // the shore satisfying the defining containments
};

// Trichotomy by theta: 0 edge, 1 vertex, >= 3 interval (cyclic only).
// theta == 2 or an even positive theta is an internal-consistency failure.
Residence classify_residence(const TightOracle& o, const Torsoid& t, const VertexSet& x);

// All torsoids of the host: torsos of one canonical maximal nested family,
// mapped through kappa and deduplicated.
std::vector<Torsoid> enumerate_torsoids(const TightOracle& o);

}  // namespace mcg
