#include <random>
#include <set>

#include "doctest.h"
#include "provar/modlin.hpp"

using namespace provar;

namespace {

// Brute-force enumeration of the subgroup generated in (Z/dZ)^n.
std::set<std::vector<long>> enumerate_subgroup(
    long d, std::size_t n, const std::vector<std::vector<long>>& gens) {
  std::set<std::vector<long>> elems{std::vector<long>(n, 0)};
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<long>> cur(elems.begin(), elems.end());
    for (const auto& e : cur)
      for (const auto& g : gens) {
        std::vector<long> s(n);
        for (std::size_t i = 0; i < n; ++i) s[i] = (e[i] + g[i]) % d;
        if (elems.insert(s).second) grew = true;
      }
  }
  return elems;
}

}  // namespace

TEST_CASE("Howell form order and membership match enumeration") {
  std::mt19937 rng(11);
  for (long d : {2L, 3L, 4L, 6L, 8L, 12L}) {
    for (int it = 0; it < 15; ++it) {
      std::size_t n = 1 + static_cast<std::size_t>(rng() % 3);
      std::vector<std::vector<long>> gens;
      std::size_t count = 1 + rng() % 3;
      for (std::size_t i = 0; i < count; ++i) {
        std::vector<long> v(n);
        for (long& x : v) x = static_cast<long>(rng() % static_cast<unsigned>(d));
        gens.push_back(v);
      }
      ModSubgroup s = ModSubgroup::from_vectors(d, n, gens);
      auto elems = enumerate_subgroup(d, n, gens);
      CHECK(s.order() == elems.size());
      // Probe every vector of the ambient when small, random ones otherwise.
      for (int probe = 0; probe < 40; ++probe) {
        std::vector<long> v(n);
        for (long& x : v) x = static_cast<long>(rng() % static_cast<unsigned>(d));
        CHECK(s.member(v) == (elems.count(v) == 1));
        std::vector<long> r = s.reduce(v);
        std::vector<long> diff(n);
        for (std::size_t i = 0; i < n; ++i) diff[i] = ((v[i] - r[i]) % d + d) % d;
        CHECK(s.member(diff));
        CHECK(s.reduce(r) == r);
      }
      // Canonicity: regenerating from the full element list gives equal form.
      std::vector<std::vector<long>> all(elems.begin(), elems.end());
      CHECK(ModSubgroup::from_vectors(d, n, all) == s);
    }
  }
}

TEST_CASE("full and zero subgroups") {
  ModSubgroup full = ModSubgroup::from_vectors(6, 2, {{1, 0}, {0, 1}});
  CHECK(full.is_full());
  CHECK(full.order() == 36);
  ModSubgroup zero = ModSubgroup::zero(6, 2);
  CHECK(!zero.is_full());
  CHECK(zero.order() == 1);
  CHECK(zero.member(std::vector<long>{0, 0}));
  CHECK(!zero.member(std::vector<long>{3, 0}));
}

TEST_CASE("exponent vectors") {
  Alphabet ab = Alphabet::latin(2);
  Word w = Word::parse("aabAB", ab);
  CHECK(exponent_vector(w, 5, 2) == std::vector<long>{1, 0});
  CHECK(exponent_vector(w, 2, 2) == std::vector<long>{1, 0});
  CHECK(exponent_vector(Word(2), 3, 2) == std::vector<long>{0, 0});
}

TEST_CASE("coset graphs") {
  Alphabet ab = Alphabet::latin(2);
  // H = <a>: image mod 2 is <(1,0)>, coset graph has index 2.
  ModSubgroup s = abelian_image(parse_words("a", ab), 2, 2);
  LabeledGraph g = coset_graph(s, ab);
  CHECK(g.index() == 2);
  CHECK(g.member(Word::parse("a", ab)));
  CHECK(g.member(Word::parse("bb", ab)));
  CHECK(g.member(Word::parse("abAB", ab)));
  CHECK(!g.member(Word::parse("b", ab)));
  // Full image: the coset graph is the whole free group.
  ModSubgroup full = abelian_image(parse_words("a,b", ab), 4, 2);
  CHECK(coset_graph(full, ab).vertex_count() == 1);
  // Zero image: the Cayley graph of (Z/dZ)^n.
  CHECK(coset_graph(ModSubgroup::zero(2, 2), ab) == cayley_graph(2, ab));
}
