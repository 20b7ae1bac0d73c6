#include "doctest.h"
#include "provar/closures.hpp"

using namespace provar;

TEST_CASE("variety parsing") {
  CHECK(VarietySpec::parse("ab:6").str() == "ab:6");
  CHECK(VarietySpec::parse("gp:2").kind == VarietySpec::Kind::Gp);
  CHECK(VarietySpec::parse("hp:5").param == 5);
  CHECK(VarietySpec::parse("nil").str() == "nil");
  CHECK(VarietySpec::parse("su").str() == "su");
  CHECK_THROWS_AS(VarietySpec::parse("gp:4"), NotPrime);
  CHECK_THROWS_AS(VarietySpec::parse("hp:1"), NotPrime);
  CHECK_THROWS_AS(VarietySpec::parse("bogus"), Error);
  CHECK_THROWS_AS(VarietySpec::parse("ab:0"), Error);
}

TEST_CASE("abelian denseness and closure") {
  Alphabet ab = Alphabet::latin(2);
  LabeledGraph f = LabeledGraph::from_generators(parse_words("a,b", ab), ab);
  LabeledGraph h = LabeledGraph::from_generators(parse_words("aa,b", ab), ab);
  CHECK(ab_dense(f, 2));
  CHECK(ab_dense(f, 12));
  CHECK(!ab_dense(h, 2));
  CHECK(ab_dense(h, 3));
  ClosureResult c = cl_ab(h, 2);
  CHECK(c.status == ClosureStatus::Exact);
  CHECK(c.graph ==
        LabeledGraph::from_generators(parse_words("aa,b,abA", ab), ab));
  CHECK(cl_ab(f, 6).graph == f);
}

TEST_CASE("intrinsic p-denseness") {
  Alphabet ab = Alphabet::latin(2);
  LabeledGraph f = LabeledGraph::from_generators(parse_words("a,b", ab), ab);
  LabeledGraph h = LabeledGraph::from_generators(parse_words("aa,b", ab), ab);
  LabeledGraph t = LabeledGraph::trivial(ab);
  CHECK(intrinsic_gp_dense(h, f, 3));
  CHECK(!intrinsic_gp_dense(h, f, 2));
  CHECK(intrinsic_gp_dense(t, t, 2));  // rank-0 ambient
  LabeledGraph other = LabeledGraph::from_generators(parse_words("ab", ab), ab);
  CHECK_THROWS_AS(intrinsic_gp_dense(h, other, 2), NotASubgroup);
}

TEST_CASE("denseness matches closure being everything") {
  Alphabet a1 = Alphabet::latin(1);
  Alphabet ab = Alphabet::latin(2);
  LabeledGraph f1 = LabeledGraph::from_generators(parse_words("a", a1), a1);
  std::vector<LabeledGraph> samples{
      LabeledGraph::from_generators(parse_words("aa", a1), a1),
      LabeledGraph::from_generators(parse_words("aaa", a1), a1), f1,
      LabeledGraph::from_generators(parse_words("aa,b,abA", ab), ab),
      LabeledGraph::from_generators(parse_words("a,b", ab), ab)};
  for (const LabeledGraph& h : samples) {
    for (const char* v : {"ab:2", "ab:6", "gp:2", "gp:3", "hp:2", "hp:3", "nil", "su"}) {
      VarietySpec spec = VarietySpec::parse(v);
      ClosureResult c = closure(h, spec);
      bool everything = c.graph.vertex_count() == 1 &&
                        c.graph.edge_count() == h.label_count();
      if (dense(h, spec)) {
        CHECK(everything);
      } else if (c.status == ClosureStatus::Exact) {
        CHECK(!everything);
      }
    }
  }
}

TEST_CASE("known closure values") {
  Alphabet a1 = Alphabet::latin(1);
  LabeledGraph a = LabeledGraph::from_generators(parse_words("a", a1), a1);
  LabeledGraph a2 = LabeledGraph::from_generators(parse_words("aa", a1), a1);
  LabeledGraph a3 = LabeledGraph::from_generators(parse_words("aaa", a1), a1);
  CHECK(cl_gp(a2, 2).graph == a2);
  CHECK(cl_gp(a2, 3).graph == a);
  CHECK(cl_hp(a3, 3).graph == a3);
  CHECK(cl_hp(a3, 5).graph == a);
  CHECK(cl_hp(a2, 2).graph == a2);  // p = 2 reduces to G_2
  CHECK(cl_su(a3).graph == a3);
  CHECK(cl_su(a2).graph == a2);
  CHECK(cl_nil(a2).graph == a2);
  ClosureResult su = cl_su(a3);
  CHECK(su.status == ClosureStatus::SoundUpper);
  CHECK(!su.primes_used.empty());
  CHECK(su.primes_used.front() == 2);
}

TEST_CASE("closure certificates are recorded") {
  Alphabet a1 = Alphabet::latin(1);
  LabeledGraph a2 = LabeledGraph::from_generators(parse_words("aa", a1), a1);
  CHECK(!cl_gp(a2, 2).certificates.empty());
  CHECK(!cl_su(a2).certificates.empty());
}

TEST_CASE("hp denseness with Magnus cross-check") {
  Alphabet ab = Alphabet::latin(2);
  ClosureOptions opt;
  opt.cross_check = true;
  LabeledGraph f = LabeledGraph::from_generators(parse_words("a,b", ab), ab);
  LabeledGraph h = LabeledGraph::from_generators(parse_words("aa", ab), ab);
  CHECK(hp_dense(f, 3, opt));
  CHECK(!hp_dense(h, 3, opt));
  CHECK(hp_dense(f, 2, opt));
}

TEST_CASE("schreier generator counts") {
  Alphabet ab = Alphabet::latin(2);
  LabeledGraph g =
      LabeledGraph::from_generators(parse_words("abAb,BAbAb,AB,BabbbAb", ab), ab);
  CHECK(generators(g).size() == g.rank());
  CHECK(generators(LabeledGraph::trivial(ab)).empty());
}
