#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mcg/cli.hpp"
#include "mcg/corpus.hpp"
#include "mcg/io.hpp"

using namespace mcg;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
  std::string path = "/tmp/mcg_test_" + name;
  std::ofstream f(path);
  f << content;
  return path;
}

}  // namespace

TEST_CASE("graph text parsing round trip and name resolution") {
  Graph c4 = corpus_graph("C4");
  auto parsed = parse_graph_text(write_graph_text(c4));
  REQUIRE(std::holds_alternative<Graph>(parsed));
  CHECK(std::get<Graph>(parsed) == c4);

  auto named = parse_graph_text("# a triangle with a tail\ng 4\na b\nb c\nc a\nc 3\n");
  REQUIRE(std::holds_alternative<Graph>(named));
  const Graph& g = std::get<Graph>(named);
  CHECK(g.vertex_count() == 4);
  CHECK(g.vertex_label(0) == "a");
  CHECK(g.vertex_label(2) == "c");
  CHECK(g.has_edge(2, 3));

  auto directed = parse_graph_text("d 3\n0 > 1\n1 > 2\n2 > 0\n");
  REQUIRE(std::holds_alternative<Digraph>(directed));
  CHECK(std::get<Digraph>(directed) == corpus_digraph("DC3"));

  CHECK_THROWS_AS(parse_graph_text("g 2\n0 1 2\n"), InputError);
  CHECK_THROWS_AS(parse_graph_text("0 1\n"), InputError);
}

TEST_CASE("matching, partition and cut file formats") {
  Graph c6 = corpus_graph("C6");
  Matching m = parse_matching_text("0 1\n2 3\n4 5\n", c6);
  CHECK(m == Matching{{0, 1}, {2, 3}, {4, 5}});
  CHECK(write_matching_text(m) == "0 1\n2 3\n4 5\n");

  auto classes = parse_partition_text("P: 0\nP: 1 2 3\nP: 4\nP: 5\n", 6);
  REQUIRE(classes.size() == 4);
  CHECK(classes[1] == VertexSet::of(6, {1, 2, 3}));
  CHECK(write_partition_text(classes) == "P: 0\nP: 1 2 3\nP: 4\nP: 5\n");

  auto shores = parse_cut_shores_text("X: 0 1 2\n", 6);
  REQUIRE(shores.size() == 1);
  CHECK(shores[0] == VertexSet::of(6, {0, 1, 2}));
}

TEST_CASE("cli info and tight-cuts") {
  auto info = cli({"info", "corpus:C6"});
  CHECK(info.code == 0);
  json j = json::parse(info.out);
  CHECK(j["schema"] == 1);
  CHECK(j["matching_covered"] == true);
  CHECK(j["perfect_matchings"] == 2);

  auto cuts = cli({"tight-cuts", "corpus:C6"});
  CHECK(cuts.code == 0);
  CHECK(json::parse(cuts.out)["cuts"].size() == 9);

  auto nt = cli({"tight-cuts", "corpus:K4_LADDER", "--nontrivial-only"});
  CHECK(json::parse(nt.out)["cuts"].size() == 2);

  auto text = cli({"tight-cuts", "corpus:K4_LADDER", "--nontrivial-only", "--text"});
  CHECK(text.out == "X: 0 2 3\nX: 0 4 5\n");
}

TEST_CASE("cli torsoids and torsos") {
  auto t = cli({"torsoids", "corpus:C6"});
  CHECK(t.code == 0);
  json j = json::parse(t.out);
  REQUIRE(j["torsoids"].size() == 1);
  CHECK(j["torsoids"][0]["cyclic"] == true);
  CHECK(j["torsoids"][0]["skeleton"]["vertices"].size() == 6);

  auto torsos = cli({"torsos", "corpus:C6", "--seed", "2"});
  CHECK(torsos.code == 0);
  json tj = json::parse(torsos.out);
  CHECK(tj["torsos"].size() == 2);
  for (const auto& torso : tj["torsos"]) {
    CHECK(torso["c4"] == true);
    CHECK(torso["kappa"] == 0);
  }

  auto dot = cli({"torsoids", "corpus:K4_LADDER", "--dot"});
  CHECK(dot.code == 0);
  CHECK(dot.out.find("graph torsoid {") != std::string::npos);
}

TEST_CASE("cli classify") {
  auto part = cli({"classify", "corpus:C6", "--partition", "corpus:HEX_MIDDLE"});
  CHECK(part.code == 0);
  json j = json::parse(part.out);
  CHECK(j["cyclic"] == true);
  CHECK(j["maximal_cyclic"] == false);
  CHECK(j["torsoid_inducing"] == false);

  auto res = cli({"classify", "corpus:K4_LADDER", "--set", "4"});
  CHECK(res.code == 0);
  json rj = json::parse(res.out);
  REQUIRE(rj["residences"].size() == 2);
  CHECK(rj["residences"][0]["kind"] == "edge");

  auto bad = cli({"classify", "corpus:C6", "--set", "0,1"});
  CHECK(bad.code == 2);  // not tight
}

TEST_CASE("cli digraph commands") {
  auto check = cli({"digraph", "check", "corpus:DDC5"});
  CHECK(check.code == 0);
  CHECK(json::parse(check.out)["strongly_2connected"] == true);

  auto dec = cli({"digraph", "decompose", "corpus:DC5"});
  CHECK(dec.code == 0);
  json j = json::parse(dec.out);
  CHECK(j["total"] == 4);
  REQUIRE(j["pieces"].size() == 1);
  CHECK(j["pieces"][0]["count"] == 4);

  auto seps = cli({"digraph", "separations", "corpus:DC3"});
  CHECK(json::parse(seps.out)["separations"].size() == 18);
  CHECK(json::parse(seps.out)["bijective"] == true);
}

TEST_CASE("cli convert round trip") {
  auto conv = cli({"convert", "--to-matching", "corpus:DC5"});
  CHECK(conv.code == 0);
  json j = json::parse(conv.out);
  std::string graph_path = temp_file("rt_graph.txt", j["graph_text"]);
  std::string matching_path = temp_file("rt_matching.txt", j["matching_text"]);

  auto back = cli({"convert", "--to-digraph", graph_path, "--matching", matching_path});
  CHECK(back.code == 0);
  json bj = json::parse(back.out);
  auto parsed = parse_graph_text(bj["digraph_text"].get<std::string>());
  REQUIRE(std::holds_alternative<Digraph>(parsed));
  CHECK(canonical_form(std::get<Digraph>(parsed)) == canonical_form(corpus_digraph("DC5")));
  std::remove(graph_path.c_str());
  std::remove(matching_path.c_str());

  // an undirected input cannot be split
  CHECK(cli({"convert", "--to-matching", "corpus:K4"}).code == 1);
}

TEST_CASE("cli exit codes and determinism") {
  CHECK(cli({}).code == 1);
  CHECK(cli({"frobnicate"}).code == 1);
  CHECK(cli({"info", "/nonexistent/file"}).code == 2);

  std::string p4 = temp_file("p4.txt", "g 4\n0 1\n1 2\n2 3\n");
  CHECK(cli({"tight-cuts", p4}).code == 2);  // not matching covered
  std::remove(p4.c_str());

  auto a = cli({"torsos", "corpus:K4_LADDER", "--seed", "3"});
  auto b = cli({"torsos", "corpus:K4_LADDER", "--seed", "3"});
  CHECK(a.out == b.out);

  CHECK(cli({"verify", "corpus:K4"}).code == 0);
}
