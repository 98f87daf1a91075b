#pragma once

#include <string>
#include <vector>

#include "mcg/partition.hpp"

namespace mcg {

// Named instances reproduced bit-exactly from embedded definitions.
const std::vector<std::string>& corpus_graph_names();
const std::vector<std::string>& corpus_digraph_names();
bool is_corpus_graph(const std::string& name);
bool is_corpus_digraph(const std::string& name);

Graph corpus_graph(const std::string& name);
Digraph corpus_digraph(const std::string& name);

// The three hexagon partitions (HEX_LEFT, HEX_MIDDLE, HEX_RIGHT) over C6.
const std::vector<std::string>& hex_partition_names();
std::vector<VertexSet> hex_partition_classes(const std::string& name);

}  // namespace mcg
