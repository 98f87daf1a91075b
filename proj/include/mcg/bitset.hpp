#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "mcg/error.hpp"

namespace mcg {

inline constexpr int kMaxVertices = 256;

// Subset of the vertex range 0..n-1 of a host (di)graph.  Value type with
// fixed inline storage.  Ordering is lexicographic on the sorted vertex
// sequence: the smallest element of the symmetric difference decides, so of
// a set and its complement the one containing vertex 0 compares smaller.
class VertexSet {
 public:
  VertexSet() { words_.fill(0); }

  explicit VertexSet(int universe) : n_(universe) {
    if (universe < 0 || universe > kMaxVertices)
      throw InputError("vertex universe out of range 0..256");
    words_.fill(0);
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int w = 0; w < kWords; ++w) {
      int lo = w * 64;
      if (universe <= lo) break;
      int bits = universe - lo >= 64 ? 64 : universe - lo;
      s.words_[w] = bits == 64 ? ~uint64_t{0} : ((uint64_t{1} << bits) - 1);
    }
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.set(v);
    return s;
  }

  static VertexSet from_vertices(int universe, const std::vector<int>& vs) {
    VertexSet s(universe);
    for (int v : vs) s.set(v);
    return s;
  }

  int universe_size() const { return n_; }

  bool test(int v) const {
    return v >= 0 && v < n_ && ((words_[v >> 6] >> (v & 63)) & 1) != 0;
  }

  VertexSet& set(int v) {
    check_index(v);
    words_[v >> 6] |= uint64_t{1} << (v & 63);
    return *this;
  }

  VertexSet& reset(int v) {
    check_index(v);
    words_[v >> 6] &= ~(uint64_t{1} << (v & 63));
    return *this;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += std::popcount(w);
    return c;
  }

  bool empty() const {
    for (uint64_t w : words_)
      if (w) return false;
    return true;
  }

  // Smallest member, -1 when empty.
  int lowest() const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i]) return i * 64 + std::countr_zero(words_[i]);
    return -1;
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for (int i = 0; i < kWords; ++i) {
      uint64_t w = words_[i];
      while (w) {
        int b = std::countr_zero(w);
        out.push_back(i * 64 + b);
        w &= w - 1;
      }
    }
    return out;
  }

  VertexSet operator|(const VertexSet& o) const {
    VertexSet r = merged(o);
    for (int i = 0; i < kWords; ++i) r.words_[i] = words_[i] | o.words_[i];
    return r;
  }

  VertexSet operator&(const VertexSet& o) const {
    VertexSet r = merged(o);
    for (int i = 0; i < kWords; ++i) r.words_[i] = words_[i] & o.words_[i];
    return r;
  }

  VertexSet operator^(const VertexSet& o) const {
    VertexSet r = merged(o);
    for (int i = 0; i < kWords; ++i) r.words_[i] = words_[i] ^ o.words_[i];
    return r;
  }

  // Set difference *this minus o.
  VertexSet minus(const VertexSet& o) const {
    VertexSet r = merged(o);
    for (int i = 0; i < kWords; ++i) r.words_[i] = words_[i] & ~o.words_[i];
    return r;
  }

  VertexSet complement() const { return full(n_).minus(*this); }

  bool subset_of(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  bool intersects(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  bool operator==(const VertexSet& o) const {
    return n_ == o.n_ && words_ == o.words_;
  }
  bool operator!=(const VertexSet& o) const { return !(*this == o); }

  // Lexicographic on sorted vertex lists.  With m the smallest differing
  // vertex: the side owning m is smaller when the other side still has a
  // larger vertex, and larger when the other side is exhausted (a proper
  // prefix compares smaller).
  bool operator<(const VertexSet& o) const {
    if (n_ != o.n_) return n_ < o.n_;
    for (int i = 0; i < kWords; ++i) {
      uint64_t d = words_[i] ^ o.words_[i];
      if (!d) continue;
      int b = std::countr_zero(d);
      bool mine = (words_[i] >> b) & 1;
      const auto& rest = mine ? o.words_ : words_;
      bool rest_has_higher = b < 63 && (rest[i] >> (b + 1)) != 0;
      for (int j = i + 1; j < kWords && !rest_has_higher; ++j)
        if (rest[j]) rest_has_higher = true;
      return mine ? rest_has_higher : !rest_has_higher;
    }
    return false;
  }

  size_t hash() const {
    size_t h = 1469598103934665603ull ^ static_cast<size_t>(n_);
    for (uint64_t w : words_) {
      h ^= static_cast<size_t>(w);
      h *= 1099511628211ull;
    }
    return h;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int v : to_vector()) {
      if (!first) s += ' ';
      s += std::to_string(v);
      first = false;
    }
    return s + "}";
  }

 private:
  static constexpr int kWords = kMaxVertices / 64;

  void check_index(int v) const {
    if (v < 0 || v >= n_) throw InputError("vertex id out of range");
  }

  VertexSet merged(const VertexSet& o) const {
    if (n_ != o.n_) throw InternalError("vertex sets over different universes");
    VertexSet r;
    r.n_ = n_;
    return r;
  }

  int n_ = 0;
  std::array<uint64_t, kWords> words_{};
};

struct VertexSetHash {
  size_t operator()(const VertexSet& s) const { return s.hash(); }
};

inline std::ostream& operator<<(std::ostream& os, const VertexSet& s) {
  return os << s.to_string();
}

}  // namespace mcg
