#include "mcg/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "mcg/error.hpp"

namespace mcg {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) {
    if (tok[0] == '#') break;
    out.push_back(tok);
  }
  return out;
}

class TokenResolver {
 public:
  explicit TokenResolver(int n) : n_(n) {}

  int resolve(const std::string& tok) {
    bool numeric = !tok.empty() && tok.find_first_not_of("0123456789") == std::string::npos;
    if (numeric) {
      int v = std::stoi(tok);
      if (v < 0 || v >= n_) throw InputError("vertex id out of range: " + tok);
      return v;
    }
    auto it = ids_.find(tok);
    if (it != ids_.end()) return it->second;
    int id = next_++;
    if (id >= n_) throw InputError("more names than declared vertices");
    ids_[tok] = id;
    names_.resize(n_);
    names_[id] = tok;
    return id;
  }

  std::vector<std::string> names() const { return names_; }
  bool any_names() const { return !ids_.empty(); }

 private:
  int n_;
  int next_ = 0;
  std::map<std::string, int> ids_;
  std::vector<std::string> names_;
};

}  // namespace

std::variant<Graph, Digraph> parse_graph_text(std::istream& in) {
  std::string line;
  bool directed = false;
  int n = -1;
  while (std::getline(in, line)) {
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks.size() != 2 || (toks[0] != "g" && toks[0] != "d"))
      throw InputError("expected header line 'g <n>' or 'd <n>'");
    directed = toks[0] == "d";
    n = std::stoi(toks[1]);
    break;
  }
  if (n < 0) throw InputError("missing header line");
  TokenResolver resolver(n);
  std::vector<Edge> edges;
  std::vector<Arc> arcs;
  while (std::getline(in, line)) {
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (directed) {
      if (toks.size() != 3 || toks[1] != ">")
        throw InputError("expected arc line 'u > v': " + line);
      arcs.push_back({resolver.resolve(toks[0]), resolver.resolve(toks[2])});
    } else {
      if (toks.size() != 2) throw InputError("expected edge line 'u v': " + line);
      int u = resolver.resolve(toks[0]), v = resolver.resolve(toks[1]);
      edges.push_back(make_edge(u, v));
    }
  }
  auto names = resolver.any_names() ? resolver.names() : std::vector<std::string>{};
  if (directed) return build_digraph(n, std::move(arcs), std::move(names));
  return build_graph(n, std::move(edges), std::move(names));
}

std::variant<Graph, Digraph> parse_graph_text(const std::string& text) {
  std::istringstream iss(text);
  return parse_graph_text(iss);
}

std::string write_graph_text(const Graph& g) {
  std::ostringstream os;
  os << "g " << g.vertex_count() << "\n";
  for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
  return os.str();
}

std::string write_graph_text(const Digraph& d) {
  std::ostringstream os;
  os << "d " << d.vertex_count() << "\n";
  for (auto [u, v] : d.arcs()) os << u << " > " << v << "\n";
  return os.str();
}

Matching parse_matching_text(const std::string& text, const Graph& host) {
  std::istringstream iss(text);
  std::string line;
  TokenResolver resolver(host.vertex_count());
  Matching m;
  while (std::getline(iss, line)) {
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks.size() != 2) throw InputError("expected matching line 'u v': " + line);
    m.push_back(make_edge(resolver.resolve(toks[0]), resolver.resolve(toks[1])));
  }
  std::sort(m.begin(), m.end());
  return m;
}

std::string write_matching_text(const Matching& m) {
  std::ostringstream os;
  for (auto [u, v] : m) os << u << " " << v << "\n";
  return os.str();
}

namespace {

std::vector<VertexSet> parse_labeled_sets(const std::string& text, int universe,
                                          const std::string& label) {
  std::istringstream iss(text);
  std::string line;
  std::vector<VertexSet> out;
  while (std::getline(iss, line)) {
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (toks[0] != label) throw InputError("expected line starting with '" + label + "'");
    VertexSet s(universe);
    for (size_t i = 1; i < toks.size(); ++i) s.set(std::stoi(toks[i]));
    out.push_back(s);
  }
  return out;
}

std::string write_labeled_sets(const std::vector<VertexSet>& sets, const std::string& label) {
  std::ostringstream os;
  for (const auto& s : sets) {
    os << label;
    for (int v : s.to_vector()) os << " " << v;
    os << "\n";
  }
  return os.str();
}

}  // namespace

std::vector<VertexSet> parse_partition_text(const std::string& text, int universe) {
  return parse_labeled_sets(text, universe, "P:");
}

std::string write_partition_text(const std::vector<VertexSet>& classes) {
  return write_labeled_sets(classes, "P:");
}

std::vector<VertexSet> parse_cut_shores_text(const std::string& text, int universe) {
  return parse_labeled_sets(text, universe, "X:");
}

std::string write_cut_shores_text(const std::vector<VertexSet>& shores) {
  return write_labeled_sets(shores, "X:");
}

std::string dot_export(const Graph& g) {
  std::ostringstream os;
  os << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    os << "  " << v << " [label=\"" << g.vertex_label(v) << "\"];\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string dot_export(const Digraph& d) {
  std::ostringstream os;
  os << "digraph D {\n";
  for (int v = 0; v < d.vertex_count(); ++v)
    os << "  " << v << " [label=\"" << d.vertex_label(v) << "\"];\n";
  for (auto [u, v] : d.arcs()) os << "  " << u << " -> " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace mcg
