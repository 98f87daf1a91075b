#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace mcg {

// Deterministic RNG helpers.  std::mt19937 output is fully specified by the
// standard; std::uniform_int_distribution and std::shuffle are not, so the
// draws below go through the raw engine to keep results identical across
// standard libraries.
class DetRng {
 public:
  explicit DetRng(uint32_t seed) : gen_(seed) {}

  uint32_t next() { return gen_(); }

  // Uniform-ish value in [0, bound); modulo bias is irrelevant here.
  uint32_t next_below(uint32_t bound) { return bound ? gen_() % bound : 0; }

  bool next_bool(double p) {
    return gen_() < static_cast<uint32_t>(p * 4294967295.0);
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = next_below(static_cast<uint32_t>(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::mt19937 gen_;
};

}  // namespace mcg
