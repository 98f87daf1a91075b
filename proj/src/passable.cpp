#include "mcg/passable.hpp"

#include <algorithm>
#include <bit>

#include "mcg/error.hpp"

namespace mcg {

bool is_passable_for(const TightOracle& o, const VertexSet& s, const VertexSet& p) {
  return o.is_tight(p.minus(s)) && o.is_tight(p | s);
}

bool is_passable_between(const TightOracle& o, const VertexSet& s, const VertexSet& p,
                         const VertexSet& q) {
  if (p.intersects(q)) throw InputError("sets must be disjoint");
  if (!o.is_tight(p) || !o.is_tight(q)) throw InputError("sets must be tight");
  return s.subset_of(p | q) && is_passable_for(o, s, p) && is_passable_for(o, s, q);
}

namespace {

void check_preconditions(const TightOracle& o, const VertexSet& p, const VertexSet& q) {
  if (p.intersects(q)) throw InputError("sets must be disjoint");
  if (!o.is_tight(p) || !o.is_tight(q)) throw InputError("sets must be tight");
  if ((p | q) == o.graph().all_vertices())
    throw InputError("largest passable set undefined when the union is the whole vertex set");
}

// Visits every even subset of p|q in mask order.  Odd subsets are never
// passable, so they are skipped outright.
template <typename Fn>
void scan_even_subsets(const TightOracle& o, const VertexSet& p, const VertexSet& q, Fn fn) {
  std::vector<int> members = (p | q).to_vector();
  size_t k = members.size();
  if (k > 24) throw BoundError("passable subset scan limited to 24 candidate vertices");
  int n = o.graph().vertex_count();
  for (uint64_t mask = 0; mask < (uint64_t{1} << k); ++mask) {
    if (std::popcount(mask) % 2 != 0) continue;
    VertexSet s(n);
    for (size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1) s.set(members[i]);
    fn(s);
  }
}

}  // namespace

VertexSet largest_passable_between(const TightOracle& o, const VertexSet& p, const VertexSet& q,
                                   PassableStrategy strategy) {
  check_preconditions(o, p, q);
  VertexSet acc(o.graph().vertex_count());
  scan_even_subsets(o, p, q, [&](const VertexSet& s) {
    if (strategy == PassableStrategy::kIncremental && s.subset_of(acc)) return;
    if (is_passable_for(o, s, p) && is_passable_for(o, s, q)) acc = acc | s;
  });
  if (!is_passable_for(o, acc, p) || !is_passable_for(o, acc, q))
    throw InternalError("union of passable sets must be passable");
  return acc;
}

std::vector<VertexSet> all_passable_between(const TightOracle& o, const VertexSet& p,
                                            const VertexSet& q) {
  check_preconditions(o, p, q);
  std::vector<VertexSet> out;
  scan_even_subsets(o, p, q, [&](const VertexSet& s) {
    if (is_passable_for(o, s, p) && is_passable_for(o, s, q)) out.push_back(s);
  });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mcg
