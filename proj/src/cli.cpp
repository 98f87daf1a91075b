#include "mcg/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "mcg/corpus.hpp"
#include "mcg/digraph_bridge.hpp"
#include "mcg/error.hpp"
#include "mcg/io.hpp"
#include "mcg/torso.hpp"
#include "mcg/torsoid.hpp"
#include "mcg/verify.hpp"

namespace mcg {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

constexpr const char* kUsage = R"(usage: mcg <command> [options] <input>

commands:
  info <graph>                 basic facts about a graph or digraph
  tight-cuts <graph>           all tight cuts [--nontrivial-only]
  torsoids <graph>             all torsoids [--dot]
  torsos <graph>               maximal family, torsos and their torsoids [--seed N]
  classify <graph> --partition <spec> | --set <ids>
                               collapse classification / residence of a set
  digraph <check|separations|decompose> <digraph> [--seed N]
  convert --to-matching <digraph> | --to-digraph <graph> --matching <file>
  verify <graph|all>           run the property suites

inputs are file paths or corpus:<NAME>; corpus graphs:
  C4 C6 C8 C10 K4 K33 PETERSEN K4_LADDER, digraphs DC3 DC5 DDC5,
  partitions HEX_LEFT HEX_MIDDLE HEX_RIGHT
options: --seed <int>, --bound <n>, --dot, --text
)";

struct Options {
  std::vector<std::string> positional;
  bool dot = false;
  bool text = false;
  bool nontrivial_only = false;
  uint32_t seed = 0;
  EnumerationBounds bounds;
  std::optional<std::string> partition;
  std::optional<std::string> set_spec;
  std::optional<std::string> matching_file;
  bool to_matching = false;
  bool to_digraph = false;
};

Options parse_options(const std::vector<std::string>& args, size_t from) {
  Options opt;
  for (size_t i = from; i < args.size(); ++i) {
    const std::string& a = args[i];
    auto value = [&](const char* flag) -> std::string {
      if (i + 1 >= args.size()) throw UsageError(std::string("missing value after ") + flag);
      return args[++i];
    };
    if (a == "--dot")
      opt.dot = true;
    else if (a == "--text")
      opt.text = true;
    else if (a == "--nontrivial-only")
      opt.nontrivial_only = true;
    else if (a == "--seed")
      opt.seed = static_cast<uint32_t>(std::stoul(value("--seed")));
    else if (a == "--bound")
      opt.bounds.max_vertices = std::stoi(value("--bound"));
    else if (a == "--partition")
      opt.partition = value("--partition");
    else if (a == "--set")
      opt.set_spec = value("--set");
    else if (a == "--matching")
      opt.matching_file = value("--matching");
    else if (a == "--to-matching")
      opt.to_matching = true;
    else if (a == "--to-digraph")
      opt.to_digraph = true;
    else if (!a.empty() && a[0] == '-')
      throw UsageError("unknown option " + a);
    else
      opt.positional.push_back(a);
  }
  return opt;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::variant<Graph, Digraph> load_any(const std::string& spec) {
  if (spec.rfind("corpus:", 0) == 0) {
    std::string name = spec.substr(7);
    if (is_corpus_graph(name)) return corpus_graph(name);
    if (is_corpus_digraph(name)) return corpus_digraph(name);
    throw InputError("unknown corpus instance: " + name);
  }
  return parse_graph_text(read_file(spec));
}

Graph load_graph(const std::string& spec) {
  auto v = load_any(spec);
  if (std::holds_alternative<Digraph>(v)) throw UsageError("expected an undirected graph input");
  return std::get<Graph>(v);
}

Digraph load_digraph(const std::string& spec) {
  auto v = load_any(spec);
  if (std::holds_alternative<Graph>(v)) throw UsageError("expected a digraph input");
  return std::get<Digraph>(v);
}

json vertex_set_json(const VertexSet& s) { return json(s.to_vector()); }

json edges_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (auto [u, v] : edges) out.push_back(json::array({u, v}));
  return out;
}

json names_json(const std::vector<std::string>& names) {
  json out = json::object();
  for (size_t i = 0; i < names.size(); ++i)
    if (!names[i].empty()) out[std::to_string(i)] = names[i];
  return out;
}

json graph_json(const Graph& g) {
  json j;
  j["type"] = "graph";
  j["n"] = g.vertex_count();
  j["edges"] = edges_json(g.edges());
  if (!g.names().empty()) j["names"] = names_json(g.names());
  return j;
}

json digraph_json(const Digraph& d) {
  json j;
  j["type"] = "digraph";
  j["n"] = d.vertex_count();
  json arcs = json::array();
  for (auto [u, v] : d.arcs()) arcs.push_back(json::array({u, v}));
  j["arcs"] = arcs;
  if (!d.names().empty()) j["names"] = names_json(d.names());
  return j;
}

json torsoid_json(const Torsoid& t) {
  json j;
  j["cyclic"] = t.cyclic;
  json vertices = json::array();
  for (size_t i = 0; i < t.vertex_sets.size(); ++i)
    vertices.push_back({{"id", i}, {"set", vertex_set_json(t.vertex_sets[i])}});
  json edges = json::array();
  for (auto e : t.skeleton.edges())
    edges.push_back(
        {{"u", e.first}, {"v", e.second}, {"eps", vertex_set_json(t.eps.at(e))}});
  j["skeleton"] = {{"vertices", vertices}, {"edges", edges}};
  return j;
}

std::string torsoid_dot(const Torsoid& t) {
  std::ostringstream os;
  os << "graph torsoid {\n";
  for (size_t i = 0; i < t.vertex_sets.size(); ++i)
    os << "  " << i << " [label=\"" << t.vertex_sets[i].to_string() << "\"];\n";
  for (auto e : t.skeleton.edges()) {
    os << "  " << e.first << " -- " << e.second;
    const VertexSet& eps = t.eps.at(e);
    if (!eps.empty()) os << " [label=\"" << eps.to_string() << "\"]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

VertexSet parse_set_spec(const std::string& spec, int universe) {
  VertexSet s(universe);
  std::string cleaned = spec;
  for (auto& c : cleaned)
    if (c == ',') c = ' ';
  std::istringstream iss(cleaned);
  int v;
  while (iss >> v) s.set(v);
  return s;
}

std::vector<VertexSet> load_partition_classes(const std::string& spec, const Graph& g) {
  if (spec.rfind("corpus:", 0) == 0) {
    std::string name = spec.substr(7);
    if (g.vertex_count() != 6)
      throw InputError("hexagon partitions live on a 6-vertex cycle");
    return hex_partition_classes(name);
  }
  return parse_partition_text(read_file(spec), g.vertex_count());
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_info(const Options& opt, std::ostream& out) {
  if (opt.positional.empty()) throw UsageError("info: missing input");
  auto v = load_any(opt.positional[0]);
  json j;
  j["schema"] = 1;
  if (std::holds_alternative<Graph>(v)) {
    const Graph& g = std::get<Graph>(v);
    if (opt.dot) {
      out << dot_export(g);
      return 0;
    }
    j["graph"] = graph_json(g);
    j["connected"] = is_connected(g);
    auto bip = bipartition_of(g);
    j["bipartite"] = bip.has_value();
    if (bip) {
      j["colour_class_0"] = vertex_set_json(bip->first);
      j["colour_class_1"] = vertex_set_json(bip->second);
    }
    bool mc = is_matching_covered(g, opt.bounds);
    j["matching_covered"] = mc;
    j["perfect_matchings"] = enumerate_perfect_matchings(g, opt.bounds).size();
    if (g.vertex_count() <= opt.bounds.max_vertices) j["canonical"] = canonical_form(g, opt.bounds.max_vertices);
  } else {
    const Digraph& d = std::get<Digraph>(v);
    if (opt.dot) {
      out << dot_export(d);
      return 0;
    }
    j["digraph"] = digraph_json(d);
    j["strongly_connected"] = is_strongly_connected(d);
    j["strongly_2connected"] = is_strongly_2connected(d);
    if (d.vertex_count() <= opt.bounds.max_vertices)
      j["canonical"] = canonical_form(d, opt.bounds.max_vertices);
  }
  emit(out, j);
  return 0;
}

int cmd_tight_cuts(const Options& opt, std::ostream& out) {
  if (opt.positional.empty()) throw UsageError("tight-cuts: missing input");
  Graph g = load_graph(opt.positional[0]);
  TightOracle oracle(g, opt.bounds);
  auto records = oracle.tight_cuts(opt.nontrivial_only);
  if (opt.text) {
    std::vector<VertexSet> shores;
    for (const auto& rec : records) shores.push_back(rec.cut.shore);
    out << write_cut_shores_text(shores);
    return 0;
  }
  json cuts = json::array();
  for (const auto& rec : records)
    cuts.push_back({{"shore", vertex_set_json(rec.cut.shore)},
                    {"edges", edges_json(rec.cut.edges)},
                    {"trivial", rec.trivial}});
  json j;
  j["schema"] = 1;
  j["cuts"] = cuts;
  emit(out, j);
  return 0;
}

int cmd_torsoids(const Options& opt, std::ostream& out) {
  if (opt.positional.empty()) throw UsageError("torsoids: missing input");
  Graph g = load_graph(opt.positional[0]);
  TightOracle oracle(g, opt.bounds);
  auto torsoids = enumerate_torsoids(oracle);
  if (opt.dot) {
    for (const auto& t : torsoids) out << torsoid_dot(t);
    return 0;
  }
  json j;
  j["schema"] = 1;
  json arr = json::array();
  for (const auto& t : torsoids) arr.push_back(torsoid_json(t));
  j["torsoids"] = arr;
  emit(out, j);
  return 0;
}

int cmd_torsos(const Options& opt, std::ostream& out) {
  if (opt.positional.empty()) throw UsageError("torsos: missing input");
  Graph g = load_graph(opt.positional[0]);
  TightOracle oracle(g, opt.bounds);
  auto family = extend_to_maximal_nested_family(oracle, {}, opt.seed);
  auto torsoids = enumerate_torsoids(oracle);
  json j;
  j["schema"] = 1;
  j["family_id"] = opt.seed;
  json fam = json::array();
  for (const auto& rec : family.cuts)
    fam.push_back({{"shore", vertex_set_json(rec.cut.shore)}, {"trivial", rec.trivial}});
  j["family"] = fam;
  json tj = json::array();
  for (const auto& t : torsoids) tj.push_back(torsoid_json(t));
  j["torsoids"] = tj;
  json torsos = json::array();
  for (const auto& torso : torsos_of(oracle, family)) {
    Torsoid t = kappa_of_torso(oracle, torso);
    int kappa_id = -1;
    for (size_t i = 0; i < torsoids.size(); ++i)
      if (torsoids[i] == t) kappa_id = static_cast<int>(i);
    json classes = json::array();
    for (const auto& c : torso.star.partition.classes) classes.push_back(vertex_set_json(c));
    torsos.push_back({{"classes", classes},
                      {"collapse", graph_json(torso.graph.graph)},
                      {"c4", torso.c4},
                      {"family_id", opt.seed},
                      {"kappa", kappa_id}});
  }
  j["torsos"] = torsos;
  emit(out, j);
  return 0;
}

int cmd_classify(const Options& opt, std::ostream& out) {
  if (opt.positional.empty()) throw UsageError("classify: missing input");
  Graph g = load_graph(opt.positional[0]);
  TightOracle oracle(g, opt.bounds);
  json j;
  j["schema"] = 1;
  if (opt.partition) {
    auto p = validate_partition(oracle, load_partition_classes(*opt.partition, g));
    auto cls = classify_collapse(oracle, p);
    const char* kind = cls.kind == CollapseKind::kBrick   ? "brick"
                       : cls.kind == CollapseKind::kBrace ? "brace"
                       : cls.kind == CollapseKind::kCycle ? "cycle"
                                                          : "other";
    j["partition"] = [&] {
      json arr = json::array();
      for (const auto& c : p.classes) arr.push_back(vertex_set_json(c));
      return arr;
    }();
    j["collapse"] = graph_json(collapse(oracle, p).graph);
    j["kind"] = kind;
    j["cyclic"] = cls.cyclic;
    j["maximal_cyclic"] = cls.maximal_cyclic;
    j["torsoid_inducing"] = cls.torsoid_inducing;
  } else if (opt.set_spec) {
    VertexSet x = parse_set_spec(*opt.set_spec, g.vertex_count());
    if (!oracle.is_tight(x)) throw InputError("set is not tight: " + x.to_string());
    json arr = json::array();
    auto torsoids = enumerate_torsoids(oracle);
    for (size_t i = 0; i < torsoids.size(); ++i) {
      Residence r = classify_residence(oracle, torsoids[i], x);
      json rj;
      rj["torsoid"] = i;
      rj["theta"] = r.theta;
      rj["witness"] = vertex_set_json(r.witness);
      switch (r.kind) {
        case ResidenceKind::kEdge:
          rj["kind"] = "edge";
          rj["edge"] = json::array({r.edge.first, r.edge.second});
          break;
        case ResidenceKind::kVertex:
          rj["kind"] = "vertex";
          rj["vertex"] = r.vertex;
          rj["proper"] = r.proper;
          break;
        case ResidenceKind::kInterval:
          rj["kind"] = "interval";
          rj["interval"] = json(r.interval);
          break;
      }
      arr.push_back(rj);
    }
    j["set"] = vertex_set_json(x);
    j["residences"] = arr;
  } else {
    throw UsageError("classify: expected --partition or --set");
  }
  emit(out, j);
  return 0;
}

int cmd_digraph(const Options& opt, std::ostream& out) {
  if (opt.positional.size() < 2) throw UsageError("digraph: expected subcommand and input");
  const std::string& sub = opt.positional[0];
  Digraph d = load_digraph(opt.positional[1]);
  json j;
  j["schema"] = 1;
  if (sub == "check") {
    j["digraph"] = digraph_json(d);
    j["strongly_connected"] = is_strongly_connected(d);
    j["strongly_2connected"] = is_strongly_2connected(d);
  } else if (sub == "separations") {
    auto seps = enumerate_one_separations(d, opt.bounds);
    json arr = json::array();
    for (const auto& s : seps)
      arr.push_back({{"a", vertex_set_json(s.a)},
                     {"b", vertex_set_json(s.b)},
                     {"separator", s.separator},
                     {"arc_free", s.no_arcs_b_to_a ? "b_to_a" : "a_to_b"}});
    j["separations"] = arr;
    auto rep = separation_tight_bijection(d, opt.bounds);
    j["tight_set_count"] = rep.tight_count;
    j["bijective"] = rep.bijective;
  } else if (sub == "decompose") {
    auto pieces = lovasz_decompose(d, opt.seed, opt.bounds);
    json arr = json::array();
    size_t i = 0;
    while (i < pieces.size()) {
      size_t jdx = i;
      while (jdx < pieces.size() && pieces[jdx] == pieces[i]) ++jdx;
      arr.push_back({{"canonical", pieces[i]}, {"count", jdx - i}});
      i = jdx;
    }
    j["seed"] = opt.seed;
    j["pieces"] = arr;
    j["total"] = pieces.size();
  } else {
    throw UsageError("digraph: unknown subcommand " + sub);
  }
  emit(out, j);
  return 0;
}

int cmd_convert(const Options& opt, std::ostream& out) {
  if (opt.positional.empty()) throw UsageError("convert: missing input");
  if (opt.to_matching == opt.to_digraph)
    throw UsageError("convert: exactly one of --to-matching / --to-digraph required");
  json j;
  j["schema"] = 1;
  if (opt.to_matching) {
    Digraph d = load_digraph(opt.positional[0]);
    auto r = matching_graph(d);
    j["graph"] = graph_json(r.graph);
    j["graph_text"] = write_graph_text(r.graph);
    j["matching"] = edges_json(r.matching);
    j["matching_text"] = write_matching_text(r.matching);
    json split = json::array();
    for (size_t v = 0; v < r.split_map.size(); ++v)
      split.push_back(std::to_string(v) + ": (" + std::to_string(r.split_map[v].first) + ", " +
                      std::to_string(r.split_map[v].second) + ")");
    j["split_map"] = split;
  } else {
    Graph g = load_graph(opt.positional[0]);
    if (!opt.matching_file) throw UsageError("convert --to-digraph requires --matching <file>");
    Matching m = parse_matching_text(read_file(*opt.matching_file), g);
    auto r = m_direction(g, m);
    j["digraph"] = digraph_json(r.digraph);
    j["digraph_text"] = write_graph_text(r.digraph);
    json contraction = json::array();
    for (size_t i = 0; i < r.contracted_edge.size(); ++i)
      contraction.push_back(std::to_string(i) + ": (" +
                            std::to_string(r.contracted_edge[i].first) + ", " +
                            std::to_string(r.contracted_edge[i].second) + ")");
    j["contraction_map"] = contraction;
  }
  emit(out, j);
  return 0;
}

int cmd_verify(const Options& opt, std::ostream& out) {
  if (opt.positional.empty()) throw UsageError("verify: missing input (instance name or 'all')");
  std::string target = opt.positional[0];
  if (target.rfind("corpus:", 0) == 0) target = target.substr(7);
  auto results = target == "all" ? verify::run_all() : verify::run_instance(target);
  json arr = json::array();
  for (const auto& r : results)
    arr.push_back(
        {{"name", r.name}, {"instance", r.instance}, {"pass", r.pass}, {"detail", r.detail}});
  bool ok = verify::all_passed(results);
  json j;
  j["schema"] = 1;
  j["checks"] = arr;
  j["pass"] = ok;
  emit(out, j);
  return ok ? 0 : 3;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    if (args.empty()) throw UsageError("missing command");
    const std::string& cmd = args[0];
    Options opt = parse_options(args, 1);
    if (cmd == "info") return cmd_info(opt, out);
    if (cmd == "tight-cuts") return cmd_tight_cuts(opt, out);
    if (cmd == "torsoids") return cmd_torsoids(opt, out);
    if (cmd == "torsos") return cmd_torsos(opt, out);
    if (cmd == "classify") return cmd_classify(opt, out);
    if (cmd == "digraph") return cmd_digraph(opt, out);
    if (cmd == "convert") return cmd_convert(opt, out);
    if (cmd == "verify") return cmd_verify(opt, out);
    if (cmd == "help" || cmd == "--help" || cmd == "-h") {
      out << kUsage;
      return 0;
    }
    throw UsageError("unknown command: " + cmd);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n" << kUsage;
    return 1;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace mcg
