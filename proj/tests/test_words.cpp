#include "doctest.h"
#include "provar/words.hpp"

using namespace provar;

TEST_CASE("alphabet construction") {
  Alphabet a = Alphabet::latin(3);
  CHECK(a.size() == 3);
  CHECK(a.symbol(0) == 'a');
  CHECK(a.symbol(2) == 'c');
  Alphabet s = Alphabet::from_symbols("xyz");
  CHECK(s.size() == 3);
  CHECK(s.symbol(1) == 'y');
  CHECK_THROWS_AS(Alphabet::from_symbols("aa"), Error);
  CHECK_THROWS_AS(Alphabet::from_symbols("aB"), UnknownSymbol);
  CHECK_THROWS_AS(Alphabet::latin(27), Error);
  Alphabet anon(30);
  CHECK(!anon.has_symbols());
  CHECK(anon.letter_name(5) == "x5");
  CHECK(anon.letter_name(-5) == "x5^-1");
}

TEST_CASE("parsing and free reduction") {
  Alphabet ab = Alphabet::latin(2);
  CHECK(Word::parse("aA", ab).empty());
  CHECK(Word::parse("abBA", ab).empty());
  CHECK(Word::parse("abAB", ab).size() == 4);
  CHECK(Word::parse("baB", ab).format(ab) == "baB");
  CHECK(Word::parse("", ab).format(ab) == "1");
  CHECK(Word::parse("aab BA", ab) == Word::parse("a", ab));
  CHECK_THROWS_AS(Word::parse("axe", ab), UnknownSymbol);
}

TEST_CASE("word algebra") {
  Alphabet ab = Alphabet::latin(2);
  Word u = Word::parse("ab", ab), v = Word::parse("Ba", ab);
  CHECK(multiply(u, v).format(ab) == "aa");
  CHECK(multiply(u, invert(u)).empty());
  CHECK(invert(u).format(ab) == "BA");
  CHECK(power(u, 3).format(ab) == "ababab");
  CHECK(power(u, -2).format(ab) == "BABA");
  CHECK(power(u, 0).empty());
  Word other(3);
  CHECK_THROWS_AS(multiply(u, Word::parse("c", Alphabet::latin(3))),
                  AlphabetMismatch);
}

TEST_CASE("generator lists") {
  Alphabet ab = Alphabet::latin(2);
  auto ws = parse_words("ab, ,aA,ba", ab);
  REQUIRE(ws.size() == 2);
  CHECK(ws[0].format(ab) == "ab");
  CHECK(ws[1].format(ab) == "ba");
}
