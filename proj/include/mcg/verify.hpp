#pragma once

#include <string>
#include <vector>

#include "mcg/tight.hpp"

namespace mcg::verify {

struct CheckResult {
  std::string name;
  std::string instance;
  bool pass = false;
  std::string detail;
};

// Property suites of every module, run against one corpus instance.
std::vector<CheckResult> run_instance(const std::string& name);

// All corpus instances.
std::vector<CheckResult> run_all();

bool all_passed(const std::vector<CheckResult>& results);

// Seeded generator for matching covered test graphs with <= max_n vertices.
Graph random_matching_covered_graph(uint32_t seed, int max_n, const EnumerationBounds& bounds);

// Seeded generator for strongly connected digraphs with 2..max_n vertices.
Digraph random_strongly_connected_digraph(uint32_t seed, int max_n);

}  // namespace mcg::verify
