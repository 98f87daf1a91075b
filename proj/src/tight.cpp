#include "mcg/tight.hpp"

#include <algorithm>
#include <set>

#include "mcg/error.hpp"
#include "mcg/rng.hpp"

namespace mcg {

int matching_boundary_count(const Matching& m, const VertexSet& x) {
  int c = 0;
  for (auto [u, v] : m) c += x.test(u) != x.test(v) ? 1 : 0;
  return c;
}

Parity parity_of(const Graph& g, const Matching& m, const VertexSet& x) {
  if (!is_perfect_matching(g, m)) throw InputError("matching is not perfect");
  return matching_boundary_count(m, x) % 2 == 1 ? Parity::kOdd : Parity::kEven;
}

bool is_tight_literal(const std::vector<Matching>& matchings, const VertexSet& x) {
  for (const auto& m : matchings)
    if (matching_boundary_count(m, x) != 1) return false;
  return !matchings.empty();
}

TightOracle::TightOracle(Graph g, EnumerationBounds bounds)
    : g_(std::move(g)), bounds_(bounds) {
  matchings_ = enumerate_perfect_matchings(g_, bounds_);
  if (g_.vertex_count() == 0 || matchings_.empty() || !is_connected(g_))
    throw InputError("graph is not matching covered");
  std::set<Edge> covered;
  for (const auto& m : matchings_) covered.insert(m.begin(), m.end());
  if (covered.size() != static_cast<size_t>(g_.edge_count()))
    throw InputError("graph is not matching covered: some edge lies in no perfect matching");
}

bool TightOracle::is_tight(const VertexSet& x) const {
  if (x.universe_size() != g_.vertex_count())
    throw InputError("vertex set universe does not match graph");
  int c = x.count();
  if (c == 0 || c == g_.vertex_count()) return false;
  if (c % 2 == 0) return false;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(x);
    if (it != memo_.end()) return it->second;
  }
  bool result = induces_connected(g_, x) && induces_connected(g_, x.complement()) &&
                is_tight_literal(matchings_, x);
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(x, result);
  return result;
}

const std::vector<VertexSet>& TightOracle::all_tight_sets() const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (tight_sets_) return *tight_sets_;
  }
  int n = g_.vertex_count();
  if (n > 30) throw BoundError("tight set enumeration is limited to 30 vertices");
  std::vector<VertexSet> out;
  // Every cut has exactly one shore containing vertex 0; enumerate those and
  // add complements of the tight ones.
  uint64_t limit = uint64_t{1} << (n - 1);
  for (uint64_t mask = 0; mask < limit; ++mask) {
    VertexSet x(n);
    x.set(0);
    for (int i = 0; i + 1 < n; ++i)
      if ((mask >> i) & 1) x.set(i + 1);
    if (x.count() == n) continue;
    if (is_tight(x)) {
      out.push_back(x);
      out.push_back(x.complement());
    }
  }
  std::sort(out.begin(), out.end());
  std::lock_guard<std::mutex> lock(mu_);
  if (!tight_sets_) tight_sets_ = std::move(out);
  return *tight_sets_;
}

std::vector<TightCutRecord> TightOracle::tight_cuts(bool nontrivial_only) const {
  std::vector<TightCutRecord> out;
  int n = g_.vertex_count();
  for (const auto& x : all_tight_sets()) {
    if (!x.test(0)) continue;  // one shore per cut
    TightCutRecord rec;
    rec.cut = cut_of(g_, x);
    int c = x.count();
    rec.trivial = c == 1 || c == n - 1;
    if (nontrivial_only && rec.trivial) continue;
    out.push_back(std::move(rec));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool are_nested_sets(const VertexSet& x, const VertexSet& y) {
  return !x.intersects(y) || x.subset_of(y) || y.subset_of(x) ||
         (x | y) == VertexSet::full(x.universe_size());
}

bool are_nested(const TightCutRecord& a, const TightCutRecord& b) {
  return are_nested_sets(a.cut.shore, b.cut.shore);
}

NestedCutFamily extend_to_maximal_nested_family(const TightOracle& o,
                                                const std::vector<Cut>& seed,
                                                uint32_t order_seed) {
  const Graph& g = o.graph();
  std::vector<TightCutRecord> family;
  std::set<VertexSet> members;
  auto add = [&](const TightCutRecord& rec) {
    if (members.insert(rec.cut.shore).second) family.push_back(rec);
  };

  for (const auto& c : seed) {
    if (!o.is_tight(c.shore)) throw InputError("seed cut is not tight");
    for (const auto& d : seed)
      if (!are_nested_sets(c.shore, d.shore)) throw InputError("seed cuts are not pairwise nested");
  }

  auto all = o.tight_cuts();
  for (const auto& rec : all)
    if (rec.trivial) add(rec);
  for (const auto& c : seed) {
    int cnt = c.shore.count();
    add({cut_of(g, c.shore), cnt == 1 || cnt == g.vertex_count() - 1});
  }

  std::vector<TightCutRecord> candidates;
  for (const auto& rec : all)
    if (!members.count(rec.cut.shore)) candidates.push_back(rec);
  if (order_seed != 0) {
    DetRng rng(order_seed);
    rng.shuffle(candidates);
  }
  for (const auto& rec : candidates) {
    bool ok = true;
    for (const auto& f : family)
      if (!are_nested(rec, f)) {
        ok = false;
        break;
      }
    if (ok) add(rec);
  }

  std::sort(family.begin(), family.end());
  return NestedCutFamily{std::move(family), true};
}

std::vector<VertexSet> family_tight_sets(const TightOracle& o, const NestedCutFamily& c) {
  std::vector<VertexSet> out;
  for (const auto& rec : c.cuts) {
    if (rec.cut.shore.universe_size() != o.graph().vertex_count())
      throw InputError("cut family does not belong to this graph");
    out.push_back(rec.cut.shore);
    out.push_back(rec.cut.shore.complement());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace mcg
