#include <algorithm>

#include "doctest.h"
#include "provar/oracle.hpp"

using namespace provar;

TEST_CASE("table validation") {
  CHECK_THROWS_AS(FiniteGroup("bad", {{0, 1}, {1, 1}}), Error);
  CHECK_THROWS_AS(FiniteGroup("bad", {{1, 0}, {0, 1}}), Error);
  FiniteGroup z2("ok", {{0, 1}, {1, 0}});
  CHECK(z2.order() == 2);
  CHECK(z2.inv(1) == 1);
}

TEST_CASE("standard constructions") {
  CHECK(FiniteGroup::trivial().order() == 1);
  FiniteGroup z6 = FiniteGroup::cyclic(6);
  CHECK(z6.element_order(1) == 6);
  CHECK(is_abelian(z6));
  FiniteGroup d4 = FiniteGroup::dihedral(4);
  CHECK(d4.order() == 8);
  CHECK(!is_abelian(d4));
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(!is_abelian(s3));
  FiniteGroup s4 = FiniteGroup::symmetric(4);
  CHECK(s4.order() == 24);
  FiniteGroup a4 = FiniteGroup::alternating4();
  CHECK(a4.order() == 12);
  FiniteGroup q8 = FiniteGroup::quaternion8();
  CHECK(q8.order() == 8);
  CHECK(!is_abelian(q8));
  int order4 = 0;
  for (std::size_t x = 0; x < 8; ++x)
    if (q8.element_order(static_cast<std::uint8_t>(x)) == 4) ++order4;
  CHECK(order4 == 6);  // distinguishes Q8 from D4
  FiniteGroup v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                               FiniteGroup::cyclic(2));
  CHECK(v4.order() == 4);
  CHECK(is_abelian(v4));
  FiniteGroup sd = FiniteGroup::semidirect_cyclic(3, 2, 2);  // iso to S3
  CHECK(sd.fingerprint() == s3.fingerprint());
  CHECK_THROWS_AS(FiniteGroup::semidirect_cyclic(5, 2, 2), Error);
}

TEST_CASE("subgroup lattice") {
  CHECK(all_subgroups(FiniteGroup::cyclic(6)).size() == 4);
  CHECK(all_subgroups(FiniteGroup::symmetric(3)).size() == 6);
  CHECK(all_subgroups(FiniteGroup::quaternion8()).size() == 6);
  CHECK(all_subgroups(FiniteGroup::alternating4()).size() == 10);
  FiniteGroup v4 = FiniteGroup::direct_product(FiniteGroup::cyclic(2),
                                               FiniteGroup::cyclic(2));
  CHECK(all_subgroups(v4).size() == 5);
  // (Z/2)^3 is 3-generated: complete enumeration must still find it all.
  FiniteGroup e8 = FiniteGroup::direct_product(v4, FiniteGroup::cyclic(2));
  CHECK(all_subgroups(e8).size() == 16);
}

TEST_CASE("normality, quotients and cores") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  Subgroup a3;
  for (std::size_t x = 0; x < 6; ++x)
    if (s3.element_order(static_cast<std::uint8_t>(x)) % 2 == 1)
      a3.push_back(static_cast<std::uint8_t>(x));
  REQUIRE(a3.size() == 3);
  CHECK(is_normal(s3, a3));
  FiniteGroup q = quotient(s3, a3);
  CHECK(q.order() == 2);
  CHECK(p_prime_core(s3, 2).size() == 3);
  CHECK(p_prime_core(s3, 3).size() == 1);
  Subgroup two = subgroup_closure(s3, {a3.empty() ? std::uint8_t(1) : std::uint8_t(1)});
  // Order-2 subgroups of S3 are not normal.
  for (std::size_t x = 1; x < 6; ++x)
    if (s3.element_order(static_cast<std::uint8_t>(x)) == 2)
      CHECK_THROWS_AS(quotient(s3, subgroup_closure(s3, {static_cast<std::uint8_t>(x)})),
                      NotNormal);
}

TEST_CASE("variety predicates") {
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  CHECK(is_p_group(FiniteGroup::quaternion8(), 2));
  CHECK(!is_p_group(s3, 2));
  CHECK(is_nilpotent(FiniteGroup::quaternion8()));
  CHECK(!is_nilpotent(s3));
  CHECK(is_supersolvable(s3));
  CHECK(is_supersolvable(FiniteGroup::cyclic(12)));
  CHECK(is_supersolvable(FiniteGroup::dihedral(4)));
  CHECK(!is_supersolvable(FiniteGroup::alternating4()));
  CHECK(!is_supersolvable(FiniteGroup::symmetric(4)));
  CHECK(in_hp(s3, 3));
  CHECK(!in_hp(s3, 2));
  CHECK(in_hp(FiniteGroup::cyclic(2), 3));  // Ab_2 with 2 | 3-1
  CHECK(in_variety(FiniteGroup::cyclic(4), VarietySpec::parse("ab:4")));
  CHECK(!in_variety(FiniteGroup::cyclic(4), VarietySpec::parse("ab:2")));
}

TEST_CASE("catalog") {
  auto su6 = catalog(6, VarietySpec::parse("su"));
  bool has_s3 = false, has_z6 = false;
  for (const FiniteGroup& g : su6) {
    if (g.order() == 6 && !is_abelian(g)) has_s3 = true;
    if (g.order() == 6 && is_abelian(g)) has_z6 = true;
  }
  CHECK(has_s3);
  CHECK(has_z6);
  auto su12 = catalog(12, VarietySpec::parse("su"));
  for (const FiniteGroup& g : su12)
    CHECK(g.fingerprint() != FiniteGroup::alternating4().fingerprint());
  auto all2 = catalog(2, std::nullopt);
  REQUIRE(all2.size() == 2);
  CHECK(all2[0].order() == 1);
  CHECK(all2[1].order() == 2);
  CHECK_THROWS_AS(catalog(65, std::nullopt), OrderCapExceeded);
}

TEST_CASE("separation") {
  Alphabet a1 = Alphabet::latin(1);
  Word a = Word::parse("a", a1);
  auto st = separation_status(a, parse_words("aa", a1), VarietySpec::parse("gp:2"), 4);
  CHECK(st.separated);
  REQUIRE(st.witness.has_value());
  CHECK(st.witness->group_order == 2);
  // A member is never separated.
  auto member = separation_status(Word::parse("aa", a1), parse_words("aa", a1),
                                  std::nullopt, 12);
  CHECK(!member.separated);
  CHECK(member.max_order == 12);
}

TEST_CASE("lemma verifiers on known groups") {
  CHECK(verify_lemma_fff(FiniteGroup::symmetric(3)));
  CHECK(verify_lemma_fff(FiniteGroup::cyclic(12)));
  CHECK(verify_lemma_fp(FiniteGroup::symmetric(3)));
  CHECK(verify_lemma_fp(FiniteGroup::cyclic(12)));
  CHECK(verify_lemma_ff(FiniteGroup::symmetric(3)));
  CHECK(verify_lemma_ff(FiniteGroup::dihedral(6)));
}
