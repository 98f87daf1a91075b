#include "mcg/digraph_bridge.hpp"

#include <algorithm>
#include <map>

#include "mcg/error.hpp"
#include "mcg/rng.hpp"

namespace mcg {

namespace {

VertexSet reach(const Digraph& d, int start, bool forward, const VertexSet& allowed) {
  VertexSet seen(d.vertex_count());
  if (!allowed.test(start)) return seen;
  seen.set(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next(d.vertex_count());
    for (int v : frontier.to_vector())
      next = next | ((forward ? d.out_mask(v) : d.in_mask(v)) & allowed);
    frontier = next.minus(seen);
    seen = seen | frontier;
  }
  return seen;
}

bool strongly_connected_within(const Digraph& d, const VertexSet& allowed) {
  int start = allowed.lowest();
  if (start < 0) return true;
  return reach(d, start, true, allowed) == allowed && reach(d, start, false, allowed) == allowed;
}

bool arcs_between(const Digraph& d, const VertexSet& from, const VertexSet& to) {
  for (int v : from.to_vector())
    if (d.out_mask(v).intersects(to)) return true;
  return false;
}

}  // namespace

bool is_strongly_connected(const Digraph& d) {
  if (d.vertex_count() == 0) return true;
  return strongly_connected_within(d, VertexSet::full(d.vertex_count()));
}

bool is_strongly_2connected(const Digraph& d) {
  int n = d.vertex_count();
  if (n < 2 || !is_strongly_connected(d)) return false;
  if (n == 2) return true;  // strong connectivity forces the 2-cycle
  // No proper 1-separation: equivalently, removing any vertex leaves the
  // digraph strongly connected.
  for (int v = 0; v < n; ++v) {
    VertexSet rest = VertexSet::full(n);
    rest.reset(v);
    if (!strongly_connected_within(d, rest)) return false;
  }
  return true;
}

std::vector<OneSeparation> enumerate_one_separations(const Digraph& d,
                                                     const EnumerationBounds& bounds) {
  int n = d.vertex_count();
  if (!is_strongly_connected(d)) throw InputError("digraph is not strongly connected");
  if (n > bounds.max_vertices)
    throw BoundError("separation enumeration exceeds the vertex bound");
  std::vector<OneSeparation> out;
  if (n == 0) return out;
  std::vector<int> rest;
  for (int s = 0; s < n; ++s) {
    rest.clear();
    for (int v = 0; v < n; ++v)
      if (v != s) rest.push_back(v);
    uint64_t limit = uint64_t{1} << (n - 1);
    for (uint64_t mask = 0; mask < limit; ++mask) {
      VertexSet a(n), b(n);
      a.set(s);
      b.set(s);
      for (int i = 0; i < n - 1; ++i)
        ((mask >> i) & 1 ? a : b).set(rest[i]);
      VertexSet a_side = a.minus(b), b_side = b.minus(a);
      bool no_b_to_a = !arcs_between(d, b_side, a_side);
      bool no_a_to_b = !arcs_between(d, a_side, b_side);
      if (no_b_to_a) out.push_back({a, b, s, true});
      if (no_a_to_b) out.push_back({a, b, s, false});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SeparationBijection separation_tight_bijection(const Digraph& d,
                                               const EnumerationBounds& bounds) {
  SeparationBijection rep;
  auto mg = matching_graph(d);
  EnumerationBounds mg_bounds = bounds;
  mg_bounds.max_vertices = 2 * bounds.max_vertices;  // the split doubles the vertex count
  TightOracle oracle(mg.graph, mg_bounds);
  const auto& tights = oracle.all_tight_sets();
  auto seps = enumerate_one_separations(d, bounds);
  rep.tight_count = tights.size();
  rep.separation_count = seps.size();

  int n = d.vertex_count();
  std::map<OneSeparation, int> sep_hits;
  for (const auto& s : seps) sep_hits[s] = 0;
  bool all_found = true;
  for (const auto& x : tights) {
    // locate the unique matching edge crossing the cut, and the inside edges
    int separator = -1;
    VertexSet inside(n);
    bool black_in_x = false;
    for (int v = 0; v < n; ++v) {
      bool white = x.test(2 * v), black = x.test(2 * v + 1);
      if (white && black)
        inside.set(v);
      else if (white != black) {
        separator = v;
        black_in_x = black;
      }
    }
    if (separator < 0) throw InternalError("tight set without a crossing matching edge");
    OneSeparation s;
    s.a = inside;
    s.a.set(separator);
    s.b = inside.complement();
    s.separator = separator;
    s.no_arcs_b_to_a = black_in_x;
    auto it = sep_hits.find(s);
    if (it == sep_hits.end())
      all_found = false;
    else
      it->second++;
    rep.pairs.push_back({x, s});
  }
  bool injective = true;
  for (const auto& [s, hits] : sep_hits)
    if (hits != 1) injective = false;
  rep.bijective = all_found && injective && rep.tight_count == rep.separation_count;
  std::sort(rep.pairs.begin(), rep.pairs.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  return rep;
}

std::pair<Digraph, Digraph> pull_apart(const Digraph& d, const OneSeparation& s) {
  int n = d.vertex_count();
  VertexSet a_side = s.a.minus(s.b), b_side = s.b.minus(s.a);
  if ((s.a | s.b) != VertexSet::full(n) || (s.a & s.b).count() != 1)
    throw InputError("not a 1-separation");
  if (arcs_between(d, b_side, a_side) && arcs_between(d, a_side, b_side))
    throw InputError("not a separation: arcs cross in both directions");
  if (a_side.empty() || b_side.empty())
    throw InputError("degenerate separation: one side is the whole vertex set");

  auto contract = [&](const VertexSet& keep_side) {
    std::vector<int> kept = keep_side.to_vector();
    kept.push_back(s.separator);
    std::sort(kept.begin(), kept.end());
    std::vector<int> new_id(n, -1);
    for (size_t i = 0; i < kept.size(); ++i) new_id[kept[i]] = static_cast<int>(i);
    int merged = new_id[s.separator];
    std::vector<Arc> arcs;
    for (auto [u, v] : d.arcs()) {
      int mu = new_id[u] >= 0 ? new_id[u] : merged;
      int mv = new_id[v] >= 0 ? new_id[v] : merged;
      if (mu != mv) arcs.push_back({mu, mv});
    }
    return build_digraph(static_cast<int>(kept.size()), std::move(arcs));
  };
  return {contract(a_side), contract(b_side)};
}

std::vector<Digraph> lovasz_decompose_pieces(const Digraph& d, uint32_t order_seed,
                                             const EnumerationBounds& bounds) {
  if (!is_strongly_connected(d)) throw InputError("digraph is not strongly connected");
  DetRng rng(order_seed + 0x9e3779b9u);
  std::vector<Digraph> work{d};
  std::vector<Digraph> pieces;
  while (!work.empty()) {
    Digraph cur = std::move(work.back());
    work.pop_back();
    std::vector<OneSeparation> proper;
    for (auto& s : enumerate_one_separations(cur, bounds)) {
      if (s.a.minus(s.b).empty() || s.b.minus(s.a).empty()) continue;
      if (!proper.empty() && proper.back().a == s.a && proper.back().b == s.b)
        continue;  // both arc-free directions name the same split
      proper.push_back(std::move(s));
    }
    if (proper.empty()) {
      pieces.push_back(std::move(cur));
      continue;
    }
    const auto& chosen = proper[rng.next_below(static_cast<uint32_t>(proper.size()))];
    auto [da, db] = pull_apart(cur, chosen);
    work.push_back(std::move(da));
    work.push_back(std::move(db));
  }
  return pieces;
}

std::vector<std::string> lovasz_decompose(const Digraph& d, uint32_t order_seed,
                                          const EnumerationBounds& bounds) {
  std::vector<std::string> out;
  for (const auto& piece : lovasz_decompose_pieces(d, order_seed, bounds))
    out.push_back(canonical_form(piece, bounds.max_vertices));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace mcg
