#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "mcg/matching.hpp"
#include "mcg/partition.hpp"

namespace mcg {

// Text edge-list format: header `g <n>` or `d <n>`, one edge per line
// (`u v` undirected, `u > v` directed), `#` comments.  Vertex tokens are
// integers or names; names receive ids in first-seen order.
std::variant<Graph, Digraph> parse_graph_text(std::istream& in);
std::variant<Graph, Digraph> parse_graph_text(const std::string& text);

std::string write_graph_text(const Graph& g);
std::string write_graph_text(const Digraph& d);

// Matching files: one edge per line, `u v`.
Matching parse_matching_text(const std::string& text, const Graph& host);
std::string write_matching_text(const Matching& m);

// Partition files: one class per line, `P: 1 2 3`.
std::vector<VertexSet> parse_partition_text(const std::string& text, int universe);
std::string write_partition_text(const std::vector<VertexSet>& classes);

// Cut files: one cut per line as the sorted shore, `X: 1 2 3`.
std::vector<VertexSet> parse_cut_shores_text(const std::string& text, int universe);
std::string write_cut_shores_text(const std::vector<VertexSet>& shores);

std::string dot_export(const Graph& g);
std::string dot_export(const Digraph& d);

}  // namespace mcg
