#include <algorithm>
#include <random>

#include "doctest.h"
#include "provar/graph.hpp"

using namespace provar;

namespace {

Word rand_word(std::mt19937& rng, std::size_t n, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> letter(0, 2 * static_cast<int>(n) - 1);
  std::vector<int> ls;
  for (int i = 0, l = len(rng); i < l; ++i) {
    int x = letter(rng);
    ls.push_back(x < static_cast<int>(n) ? x + 1 : -(x - static_cast<int>(n) + 1));
  }
  return Word::from_letters(n, std::move(ls));
}

}  // namespace

TEST_CASE("folding basics") {
  Alphabet ab = Alphabet::latin(2);
  LabeledGraph t = LabeledGraph::trivial(ab);
  CHECK(t.vertex_count() == 1);
  CHECK(t.edge_count() == 0);
  CHECK(t.member(Word()));
  CHECK(!t.member(Word::parse("a", ab)));

  LabeledGraph g = LabeledGraph::from_generators(parse_words("baB,bbA", ab), ab);
  CHECK(g.vertex_count() == 3);
  CHECK(g.edge_count() == 4);
  CHECK(g.rank() == 2);
  CHECK(!g.index().has_value());
  CHECK(g.member(Word::parse("baB", ab)));
  CHECK(g.member(Word::parse("bbA", ab)));
  CHECK(g.member(Word::parse("baBbbA", ab)));
  CHECK(!g.member(Word::parse("a", ab)));
  CHECK(!g.member(Word::parse("b", ab)));
}

TEST_CASE("canonical form is generator-presentation independent") {
  Alphabet ab = Alphabet::latin(2);
  auto gens = parse_words("abbA,bab", ab);
  LabeledGraph g = LabeledGraph::from_generators(gens, ab);
  // Reorder, invert and conjugate-shuffle the generating set.
  CHECK(LabeledGraph::from_generators(parse_words("bab,abbA", ab), ab) == g);
  CHECK(LabeledGraph::from_generators(parse_words("aBBA,BAB", ab), ab) == g);
  std::vector<Word> products{gens[0], multiply(gens[0], gens[1])};
  CHECK(LabeledGraph::from_generators(products, ab) == g);
}

TEST_CASE("membership agrees with the re-fold oracle") {
  Alphabet ab = Alphabet::latin(2);
  std::mt19937 rng(7);
  for (int it = 0; it < 40; ++it) {
    std::vector<Word> gens;
    std::uniform_int_distribution<int> cnt(1, 3);
    for (int i = 0, c = cnt(rng); i < c; ++i)
      gens.push_back(rand_word(rng, 2, 7));
    LabeledGraph g = LabeledGraph::from_generators(gens, ab);
    for (int j = 0; j < 10; ++j) {
      Word w = rand_word(rng, 2, 7);
      auto plus = gens;
      plus.push_back(w);
      CHECK(g.member(w) == (LabeledGraph::from_generators(plus, ab) == g));
    }
  }
}

TEST_CASE("index and completeness") {
  Alphabet ab = Alphabet::latin(2);
  CHECK(LabeledGraph::from_generators(parse_words("a,b", ab), ab).index() == 1);
  // Kernel of the a-parity map: index 2.
  LabeledGraph k =
      LabeledGraph::from_generators(parse_words("aa,b,abA", ab), ab);
  CHECK(k.index() == 2);
  CHECK(k.rank() == 3);
}

TEST_CASE("morphisms") {
  Alphabet ab = Alphabet::latin(2);
  LabeledGraph h = LabeledGraph::from_generators(parse_words("ab", ab), ab);
  LabeledGraph f = LabeledGraph::from_generators(parse_words("a,b", ab), ab);
  auto m = find_morphism(h, f);
  REQUIRE(m.has_value());
  CHECK(m->surjective);
  CHECK(!find_morphism(h, LabeledGraph::from_generators(parse_words("a", ab), ab))
             .has_value());
  auto self = find_morphism(h, h);
  REQUIRE(self.has_value());
  CHECK(self->injective);
  CHECK(self->surjective);
}

TEST_CASE("schreier data on the Klein four-group Cayley graph") {
  Alphabet ab = Alphabet::latin(2);
  LabeledGraph c = cayley_graph(2, ab);
  CHECK(c.vertex_count() == 4);
  CHECK(c.edge_count() == 8);
  CHECK(c.rank() == 5);
  CHECK(c.index() == 4);
  SchreierData sd = schreier(c);
  CHECK(sd.tree_edges.size() == 3);
  CHECK(sd.basis.size() == 5);
  CHECK(sd.transversal[0].empty());
  for (const Word& b : sd.basis) {
    CHECK(!b.empty());
    CHECK(c.member(b));
  }
  // Basis words have trivial image in (Z/2)^2: even exponent sums.
  for (const Word& b : sd.basis) {
    int e[2] = {0, 0};
    for (int l : b.letters()) e[std::abs(l) - 1]++;
    CHECK(e[0] % 2 == 0);
    CHECK(e[1] % 2 == 0);
  }
  CHECK_THROWS_AS(schreier(c, {0, 1, 2, 3}), NotASpanningTree);
}

TEST_CASE("cayley graph degenerate modulus") {
  Alphabet ab = Alphabet::latin(2);
  LabeledGraph c = cayley_graph(1, ab);
  CHECK(c.vertex_count() == 1);
  CHECK(c.edge_count() == 2);
}
