#include <numeric>
#include <set>
#include <unordered_set>

#include "doctest.h"
#include "provar/lattice.hpp"

using namespace provar;

namespace {

// Independent fringe oracle: fold every vertex-partition quotient directly.
std::unordered_set<LabeledGraph, GraphHash> fringe_by_partitions(
    const LabeledGraph& g) {
  std::unordered_set<LabeledGraph, GraphHash> out;
  std::size_t n = g.vertex_count();
  std::vector<int> block(n, 0);  // restricted growth string
  while (true) {
    RawGraph raw{g.alphabet(), static_cast<std::size_t>(
                                   *std::max_element(block.begin(), block.end())) +
                                   1,
                 block[0], {}};
    for (const Edge& e : g.edges())
      raw.edges.push_back({block[e.from], e.label, block[e.to]});
    out.insert(fold(raw));
    // Next restricted growth string.
    bool advanced = false;
    std::size_t i = n;
    while (i > 1 && !advanced) {
      --i;
      int cap = *std::max_element(block.begin(), block.begin() + i) + 1;
      if (block[i] < cap) {
        block[i]++;
        std::fill(block.begin() + i + 1, block.end(), 0);
        advanced = true;
      } else {
        block[i] = 0;
      }
    }
    if (!advanced) break;
  }
  return out;
}

}  // namespace

TEST_CASE("intersection of cyclic subgroups") {
  Alphabet a1 = Alphabet::latin(1);
  for (long m : {2L, 3L, 4L, 6L}) {
    for (long n : {2L, 3L, 5L}) {
      LabeledGraph gm = LabeledGraph::from_generators({power(Word::parse("a", a1), m)}, a1);
      LabeledGraph gn = LabeledGraph::from_generators({power(Word::parse("a", a1), n)}, a1);
      LabeledGraph expect = LabeledGraph::from_generators(
          {power(Word::parse("a", a1), std::lcm(m, n))}, a1);
      CHECK(intersect(gm, gn) == expect);
    }
  }
}

TEST_CASE("join") {
  Alphabet a1 = Alphabet::latin(1);
  LabeledGraph g2 = LabeledGraph::from_generators(parse_words("aa", a1), a1);
  LabeledGraph g3 = LabeledGraph::from_generators(parse_words("aaa", a1), a1);
  CHECK(join(g2, g3) == LabeledGraph::from_generators(parse_words("a", a1), a1));
  Alphabet ab = Alphabet::latin(2);
  LabeledGraph ha = LabeledGraph::from_generators(parse_words("a", ab), ab);
  LabeledGraph hb = LabeledGraph::from_generators(parse_words("b", ab), ab);
  CHECK(join(ha, hb) == LabeledGraph::from_generators(parse_words("a,b", ab), ab));
}

TEST_CASE("fringe agrees with partition enumeration") {
  Alphabet ab = Alphabet::latin(2);
  for (const char* gens : {"aa", "aa,bb", "abbA,bab", "abAb,BAbAb"}) {
    LabeledGraph g = LabeledGraph::from_generators(parse_words(gens, ab), ab);
    Fringe f = fringe(g);
    auto oracle = fringe_by_partitions(g);
    CHECK(f.members.size() == oracle.size());
    for (const LabeledGraph& m : f.members) {
      CHECK(oracle.count(m) == 1);
      auto mor = find_morphism(g, m);
      REQUIRE(mor.has_value());
      CHECK(mor->surjective);
    }
  }
}

TEST_CASE("fringe contains its origin and respects caps") {
  Alphabet ab = Alphabet::latin(2);
  LabeledGraph g = LabeledGraph::from_generators(parse_words("aa,bb", ab), ab);
  Fringe f = fringe(g);
  bool has_origin = false;
  for (const LabeledGraph& m : f.members)
    if (m == g) has_origin = true;
  CHECK(has_origin);
  FringeOptions tight;
  tight.max_vertices = 2;
  CHECK_THROWS_AS(fringe(g, tight), FringeCapExceeded);
}

TEST_CASE("basis rewriting round-trips") {
  Alphabet ab = Alphabet::latin(2);
  LabeledGraph k = cayley_graph(2, ab);
  BasisDictionary dict = basis_dictionary(k);
  CHECK(dict.symbols.size() == 5);
  for (const char* text : {"aa", "bb", "abab", "abAB", "aabb", "baba"}) {
    Word w = Word::parse(text, ab);
    REQUIRE(k.member(w));
    Word rewritten = rewrite_in_basis(dict, w);
    // Substitute the basis words back in.
    Word back(2);
    for (int l : rewritten.letters()) {
      Word piece = dict.to_ambient[static_cast<std::size_t>(std::abs(l)) - 1];
      back = multiply(back, l > 0 ? piece : invert(piece));
    }
    CHECK(back == w);
  }
  CHECK(rewrite_in_basis(dict, Word(2)).empty());
  CHECK_THROWS_AS(rewrite_in_basis(dict, Word::parse("a", ab)), NotAMember);
}

TEST_CASE("blow_up inverts rewriting on subgroups") {
  Alphabet ab = Alphabet::latin(2);
  LabeledGraph k = cayley_graph(2, ab);
  BasisDictionary dict = basis_dictionary(k);
  for (const char* gens : {"aa", "aa,bb", "abab,bb", "aabb,abAB"}) {
    std::vector<Word> hw = parse_words(gens, ab);
    LabeledGraph h = LabeledGraph::from_generators(hw, ab);
    std::vector<Word> rewritten;
    for (const Word& w : hw) rewritten.push_back(rewrite_in_basis(dict, w));
    LabeledGraph inner = LabeledGraph::from_generators(rewritten, dict.symbols);
    CHECK(blow_up(inner, dict) == h);
  }
}
