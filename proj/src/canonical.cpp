#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mcg/error.hpp"
#include "mcg/graph.hpp"

namespace mcg {

namespace {

// Finds the lexicographically smallest adjacency encoding over all vertex
// labelings.  Positions are filled left to right; at each position only the
// unused vertices whose row against the placed prefix is minimal can extend
// a minimal string, so the branching stays close to the automorphism count.
class MinLabelSearch {
 public:
  MinLabelSearch(int n, std::function<char(int, int)> sym) : n_(n), sym_(std::move(sym)) {}

  std::string run() {
    placed_.clear();
    used_.assign(n_, false);
    cur_.clear();
    best_.clear();
    have_best_ = false;
    dfs();
    return best_;
  }

 private:
  void dfs() {
    if (have_best_ && cur_.compare(best_.substr(0, cur_.size())) > 0) return;
    int k = static_cast<int>(placed_.size());
    if (k == n_) {
      if (!have_best_ || cur_ < best_) {
        best_ = cur_;
        have_best_ = true;
      }
      return;
    }
    // Row of candidate v against the placed prefix, as a string segment.
    std::string min_row;
    std::vector<std::pair<std::string, int>> rows;
    for (int v = 0; v < n_; ++v) {
      if (used_[v]) continue;
      std::string row;
      row.reserve(k);
      for (int j = 0; j < k; ++j) row += sym_(v, placed_[j]);
      if (min_row.empty() || row < min_row) min_row = row;
      rows.push_back({std::move(row), v});
    }
    // Transposing twins (identical adjacency outside the pair) is an
    // automorphism, so one branch per twin class suffices.  This keeps the
    // search linear on fully symmetric inputs.
    auto twins = [&](int u, int v) {
      if (sym_(u, v) != sym_(v, u)) return false;
      for (int x = 0; x < n_; ++x)
        if (x != u && x != v && sym_(u, x) != sym_(v, x)) return false;
      return true;
    };
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = i + 1; j < rows.size();) {
        if (rows[i].first == rows[j].first && twins(rows[i].second, rows[j].second))
          rows.erase(rows.begin() + static_cast<long>(j));
        else
          ++j;
      }
    for (auto& [row, v] : rows) {
      if (row != min_row && k > 0) continue;
      if (k > 0 && have_best_) {
        std::string next = cur_ + row;
        if (next.compare(best_.substr(0, next.size())) > 0) continue;
      }
      size_t mark = cur_.size();
      cur_ += row;
      placed_.push_back(v);
      used_[v] = true;
      dfs();
      used_[v] = false;
      placed_.pop_back();
      cur_.resize(mark);
    }
  }

  int n_;
  std::function<char(int, int)> sym_;
  std::vector<int> placed_;
  std::vector<bool> used_;
  std::string cur_, best_;
  bool have_best_ = false;
};

void check_bound(int n, int max_n) {
  if (n > max_n)
    throw BoundError("canonical form size bound exceeded: " + std::to_string(n) + " > " +
                     std::to_string(max_n));
}

}  // namespace

std::string canonical_form(const Graph& g, int max_n) {
  check_bound(g.vertex_count(), max_n);
  MinLabelSearch search(g.vertex_count(),
                        [&](int u, int v) { return g.has_edge(u, v) ? '1' : '0'; });
  return "G" + std::to_string(g.vertex_count()) + "|" + search.run();
}

std::string canonical_form(const Digraph& d, int max_n) {
  check_bound(d.vertex_count(), max_n);
  MinLabelSearch search(d.vertex_count(), [&](int u, int v) {
    int s = (d.has_arc(u, v) ? 1 : 0) | (d.has_arc(v, u) ? 2 : 0);
    return static_cast<char>('0' + s);
  });
  return "D" + std::to_string(d.vertex_count()) + "|" + search.run();
}

}  // namespace mcg
