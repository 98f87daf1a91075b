#pragma once

#include <string>
#include <vector>

#include "mcg/torsoid.hpp"

namespace mcg {

// Tight set partition of size >= 4 whose class boundaries all lie in a
// maximal nested family and whose collapse is a brick or brace.
struct MaximalStar {
  TightSetPartition partition;
};

struct Torso {
  MaximalStar star;
  CollapseResult graph;
  bool c4 = false;
};

std::vector<MaximalStar> maximal_stars(const TightOracle& o, const NestedCutFamily& c);
Torso make_torso(const TightOracle& o, const MaximalStar& s);
std::vector<Torso> torsos_of(const TightOracle& o, const NestedCutFamily& c);

// Every vertex of the torso contains a skeleton vertex set of the torsoid.
bool cleaves(const Torso& s, const Torsoid& t);

// The unique torsoid the torso cleaves: the induced torsoid of its star, via
// the maximal cyclic refinement when the torso is a C4.
Torsoid kappa_of_torso(const TightOracle& o, const Torso& s);

// The family induced on the skeleton by the members of c residing at an
// interval or properly at a vertex; verified maximal nested in the skeleton.
NestedCutFamily residents_family(const TightOracle& o, const NestedCutFamily& c, const Torsoid& t);

// Union of all family tight sets with the given odd-intersection signature
// (a single skeleton vertex, or an interval).  Verified tight, a member of
// the family, and containing every same-signature member.
VertexSet maximal_resident(const TightOracle& o, const NestedCutFamily& c, const Torsoid& t,
                           const std::vector<int>& target);

struct PreimageEntry {
  Torsoid torsoid;
  int non_c4_torsos = 0;
  int c4_torsos = 0;
  int expected_non_c4 = 0;
  int expected_c4 = 0;
  bool ok = false;
};

struct PreimageReport {
  std::vector<PreimageEntry> entries;
  bool ok = false;
  std::string detail;
};

// Groups the torsos of the family by the torsoid they cleave and checks the
// counts: one non-C4 torso per noncyclic torsoid, n/2 - 1 C4-torsos per
// cyclic torsoid on n skeleton vertices.
PreimageReport verify_preimage_counts(const TightOracle& o, const NestedCutFamily& c);

}  // namespace mcg
