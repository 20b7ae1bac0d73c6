#include "doctest.h"
#include "provar/io.hpp"

using namespace provar;

TEST_CASE("graph JSON round-trip") {
  Alphabet ab = Alphabet::latin(2);
  for (const char* gens : {"baB,bbA", "a,b", "aa,bb,abab"}) {
    LabeledGraph g = LabeledGraph::from_generators(parse_words(gens, ab), ab);
    nlohmann::json j = graph_to_json(g);
    CHECK(j["base"] == 0);
    CHECK(j["vertices"] == g.vertex_count());
    CHECK(graph_from_json(j) == g);
  }
}

TEST_CASE("dot export marks the base") {
  Alphabet ab = Alphabet::latin(2);
  LabeledGraph g = LabeledGraph::from_generators(parse_words("ab", ab), ab);
  std::string dot = graph_to_dot(g);
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("label=\"a\"") != std::string::npos);
  CHECK(dot.find("digraph") == 0);
}

TEST_CASE("closure result JSON") {
  Alphabet a1 = Alphabet::latin(1);
  LabeledGraph a3 = LabeledGraph::from_generators(parse_words("aaa", a1), a1);
  nlohmann::json j = closure_result_to_json(cl_su(a3));
  CHECK(j["variety"] == "su");
  CHECK(j["status"] == "SOUND_UPPER");
  CHECK(j["generators"] == nlohmann::json::array({"aaa"}));
  CHECK(j["primes_used"].size() >= 4);
  CHECK(j.contains("graph"));
  CHECK(j.contains("certificates"));
}

TEST_CASE("fringe JSON includes witnesses") {
  Alphabet ab = Alphabet::latin(2);
  LabeledGraph g = LabeledGraph::from_generators(parse_words("aa,bb", ab), ab);
  nlohmann::json j = fringe_to_json(fringe(g));
  CHECK(j["members"].size() == 5);
  for (const auto& m : j["members"]) {
    CHECK(m.contains("graph"));
    CHECK(m["witness"].is_array());
    CHECK(m["witness"].size() == g.vertex_count());
  }
}

TEST_CASE("subgroup files") {
  Alphabet ab = Alphabet::latin(2);
  std::string text = "# heading\naa,bb\n\nab # trailing comment\n   \n";
  auto subs = parse_subgroup_file(text, ab);
  REQUIRE(subs.size() == 2);
  CHECK(subs[0].size() == 2);
  CHECK(subs[1].size() == 1);
  CHECK(subs[1][0].format(ab) == "ab");
}
