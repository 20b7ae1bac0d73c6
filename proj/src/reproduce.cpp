#include "provar/reproduce.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "provar/closures.hpp"
#include "provar/errors.hpp"
#include "provar/lattice.hpp"
#include "provar/magnus.hpp"
#include "provar/oracle.hpp"

namespace provar {

namespace {

constexpr unsigned kSeed = 20240801;

Word random_word(std::mt19937& rng, std::size_t n, int max_len) {
  std::uniform_int_distribution<int> len(1, max_len);
  std::uniform_int_distribution<int> letter(0, 2 * static_cast<int>(n) - 1);
  std::vector<int> letters;
  int l = len(rng);
  for (int i = 0; i < l; ++i) {
    int x = letter(rng);
    letters.push_back(x < static_cast<int>(n) ? x + 1
                                              : -(x - static_cast<int>(n) + 1));
  }
  return Word::from_letters(n, std::move(letters));
}

std::vector<Word> random_subgroup(std::mt19937& rng, std::size_t n,
                                  int max_gens, int max_len) {
  std::uniform_int_distribution<int> count(1, max_gens);
  std::vector<Word> gens;
  int c = count(rng);
  for (int i = 0; i < c; ++i) gens.push_back(random_word(rng, n, max_len));
  return gens;
}

std::string gens_str(const LabeledGraph& g) {
  std::string out = "<";
  bool first = true;
  for (const Word& w : generators(g)) {
    if (!first) out += ",";
    out += w.format(g.alphabet());
    first = false;
  }
  return out + ">";
}

/// Pre-fold bouquet of generator paths, for fold-order shuffling.
RawGraph flower(const std::vector<Word>& gens, const Alphabet& alphabet) {
  RawGraph raw{alphabet, 1, 0, {}};
  for (const Word& w : gens) {
    int prev = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      int next = i + 1 == w.size() ? 0 : static_cast<int>(raw.vertex_count++);
      int l = w.letters()[i];
      if (l > 0)
        raw.edges.push_back({prev, l - 1, next});
      else
        raw.edges.push_back({next, -l - 1, prev});
      prev = next;
    }
  }
  return raw;
}

bool contains(const LabeledGraph& sub, const LabeledGraph& super) {
  return find_morphism(sub, super).has_value();
}

/// Necessary condition for equal closures: all homomorphisms into the
/// variety's catalog (order <= 24) give equal subgroup images.
bool hom_consistent(const LabeledGraph& c, const LabeledGraph& h,
                    const VarietySpec& v) {
  std::vector<Word> cg = generators(c), hg = generators(h);
  std::size_t n = h.label_count();
  for (const FiniteGroup& g : catalog(24, v)) {
    std::vector<std::uint8_t> images(n, 0);
    while (true) {
      Subgroup a, b;
      for (const Word& w : cg) a.push_back(g.eval(w, images));
      for (const Word& w : hg) b.push_back(g.eval(w, images));
      if (subgroup_closure(g, a) != subgroup_closure(g, b)) return false;
      std::size_t i = n;
      while (i > 0 && images[i - 1] == g.order() - 1) images[--i] = 0;
      if (i == 0) break;
      images[i - 1]++;
    }
  }
  return true;
}

CheckResult check_figure1() {
  CheckResult r{"figure1", 1, "printed 3-vertex graph, 50 fold orders agree",
                "", false};
  Alphabet ab = Alphabet::latin(2);
  std::vector<Word> gens = parse_words("baB,bbA", ab);
  LabeledGraph g = LabeledGraph::from_generators(gens, ab);
  // The figure: base x, b:x->y, a:y->y, b:y->z, a:x->z.
  RawGraph printed{ab, 3, 0, {{0, 1, 1}, {1, 0, 1}, {1, 1, 2}, {0, 0, 2}}};
  bool ok = fold(printed) == g && g.vertex_count() == 3 && g.edge_count() == 4;
  std::mt19937 rng(kSeed);
  RawGraph pre = flower(gens, ab);
  for (int k = 0; k < 50 && ok; ++k) {
    std::shuffle(pre.edges.begin(), pre.edges.end(), rng);
    ok = fold(pre) == g;
  }
  r.actual = ok ? r.expected
                : "mismatch (V=" + std::to_string(g.vertex_count()) + ")";
  r.pass = ok;
  return r;
}

CheckResult check_section232() {
  CheckResult r{"section232", 2,
                "V=6 E=9 rank=4 infinite index; printed basis from some "
                "spanning tree; all basis words are members",
                "", false};
  Alphabet ab = Alphabet::latin(2);
  LabeledGraph g = LabeledGraph::from_generators(
      parse_words("abAb,BAbAb,AB,BabbbAb", ab), ab);
  bool shape = g.vertex_count() == 6 && g.edge_count() == 9 && g.rank() == 4 &&
               !g.index().has_value();
  std::vector<std::string> printed{"abAb", "BaBab", "BabbbAb", "ba"};
  std::sort(printed.begin(), printed.end());
  bool found = false;
  std::vector<bool> pick(9, false);
  std::fill(pick.begin(), pick.begin() + 5, true);
  do {
    std::vector<std::size_t> tree;
    for (std::size_t i = 0; i < 9; ++i)
      if (pick[i]) tree.push_back(i);
    try {
      SchreierData sd = schreier(g, tree);
      std::vector<std::string> basis;
      for (const Word& w : sd.basis) basis.push_back(w.format(ab));
      std::sort(basis.begin(), basis.end());
      if (basis == printed) found = true;
    } catch (const NotASpanningTree&) {
    }
  } while (!found && std::prev_permutation(pick.begin(), pick.end()));
  bool members = true;
  for (const std::string& w : printed)
    members = members && g.member(Word::parse(w, ab));
  r.pass = shape && found && members;
  std::ostringstream a;
  a << "V=" << g.vertex_count() << " E=" << g.edge_count()
    << " rank=" << g.rank() << (g.index() ? " finite" : " infinite")
    << " index; basis " << (found ? "found" : "not found") << "; members "
    << (members ? "ok" : "bad");
  r.actual = a.str();
  return r;
}

CheckResult check_figure3() {
  CheckResult r{"figure3", 3, "morphism exists and is injective", "", false};
  Alphabet ab = Alphabet::latin(2);
  LabeledGraph h =
      LabeledGraph::from_generators(parse_words("abbAb,abba", ab), ab);
  LabeledGraph k = LabeledGraph::from_generators(
      parse_words("bAbbbb,abbbb,Abb,BBAb", ab), ab);
  auto m = find_morphism(h, k);
  r.pass = m && m->injective;
  r.actual = !m ? "no morphism" : (m->injective ? r.expected : "not injective");
  return r;
}

CheckResult check_figure4() {
  CheckResult r{"figure4", 3,
                "morphism exists, surjective, target in fringe(source)", "",
                false};
  Alphabet ab = Alphabet::latin(2);
  LabeledGraph h =
      LabeledGraph::from_generators(parse_words("abbA,abaaBA,ababa", ab), ab);
  LabeledGraph k =
      LabeledGraph::from_generators(parse_words("aa,abba,ababa", ab), ab);
  auto m = find_morphism(h, k);
  bool in_fringe = false;
  for (const LabeledGraph& member : fringe(h).members)
    if (member == k) in_fringe = true;
  r.pass = m && m->surjective && in_fringe;
  std::ostringstream a;
  a << (m ? "morphism" : "no morphism")
    << (m && m->surjective ? " surjective" : "") << ", target "
    << (in_fringe ? "in" : "not in") << " fringe";
  r.actual = a.str();
  return r;
}

CheckResult check_membership() {
  CheckResult r{"membership", 4,
                "500 random subgroups x 20 words: member matches the re-fold "
                "oracle; intersect respects membership",
                "", false};
  Alphabet ab = Alphabet::latin(2);
  std::mt19937 rng(kSeed);
  int failures = 0;
  for (int it = 0; it < 250; ++it) {
    std::vector<Word> hg = random_subgroup(rng, 2, 4, 8);
    std::vector<Word> kg = random_subgroup(rng, 2, 4, 8);
    LabeledGraph h = LabeledGraph::from_generators(hg, ab);
    LabeledGraph k = LabeledGraph::from_generators(kg, ab);
    LabeledGraph meet = intersect(h, k);
    for (int j = 0; j < 20; ++j) {
      Word w = random_word(rng, 2, 8);
      std::vector<Word> extended = hg;
      extended.push_back(w);
      bool refold = LabeledGraph::from_generators(extended, ab) == h;
      if (h.member(w) != refold) ++failures;
      if (meet.member(w) != (h.member(w) && k.member(w))) ++failures;
    }
  }
  r.pass = failures == 0;
  r.actual = failures == 0 ? "all agree"
                           : std::to_string(failures) + " disagreements";
  return r;
}

CheckResult check_closure_values() {
  CheckResult r{"closure_values", 5,
                "cl_gp(<a2>,2)=<a2> cl_gp(<a2>,3)=<a> cl_hp(<a3>,3)=<a3> "
                "cl_hp(<a3>,5)=<a> cl_su(<a3>)=<a3> cl_su(<a2>)=<a2> "
                "cl_*(F)=F; oracle cross-checks",
                "", false};
  Alphabet a1 = Alphabet::latin(1);
  Alphabet ab = Alphabet::latin(2);
  LabeledGraph a = LabeledGraph::from_generators(parse_words("a", a1), a1);
  LabeledGraph a2 = LabeledGraph::from_generators(parse_words("aa", a1), a1);
  LabeledGraph a3 = LabeledGraph::from_generators(parse_words("aaa", a1), a1);
  LabeledGraph f2 = LabeledGraph::from_generators(parse_words("a,b", ab), ab);
  std::ostringstream bad;

  struct Case {
    const char* label;
    ClosureResult result;
    const LabeledGraph* expected;
    const LabeledGraph* input;
  };
  std::vector<Case> cases;
  cases.push_back({"cl_gp(a2,2)", cl_gp(a2, 2), &a2, &a2});
  cases.push_back({"cl_gp(a2,3)", cl_gp(a2, 3), &a, &a2});
  cases.push_back({"cl_hp(a3,3)", cl_hp(a3, 3), &a3, &a3});
  cases.push_back({"cl_hp(a3,5)", cl_hp(a3, 5), &a, &a3});
  cases.push_back({"cl_su(a3)", cl_su(a3), &a3, &a3});
  cases.push_back({"cl_su(a2)", cl_su(a2), &a2, &a2});
  for (const char* v : {"ab:6", "gp:2", "hp:3", "nil", "su"})
    cases.push_back({"cl_*(F)", closure(f2, VarietySpec::parse(v)), &f2, &f2});

  for (const Case& c : cases) {
    if (!(c.result.graph == *c.expected)) bad << c.label << " value; ";
    if (!contains(*c.input, c.result.graph)) bad << c.label << " chain; ";
    if (!hom_consistent(c.result.graph, *c.input, c.result.variety))
      bad << c.label << " homs; ";
  }

  // Separation oracle: a word the closure excludes must be separable, a word
  // it includes must not be.
  Word wa = Word::parse("a", a1);
  std::vector<Word> g2 = parse_words("aa", a1), g3 = parse_words("aaa", a1);
  if (!separation_status(wa, g2, VarietySpec::parse("gp:2"), 4).separated)
    bad << "sep gp2; ";
  if (separation_status(wa, g2, VarietySpec::parse("gp:3"), 24).separated)
    bad << "sep gp3; ";
  if (!separation_status(wa, g3, VarietySpec::parse("hp:3"), 24).separated)
    bad << "sep hp3; ";
  if (separation_status(wa, g3, VarietySpec::parse("hp:5"), 24).separated)
    bad << "sep hp5; ";
  if (!separation_status(wa, g3, VarietySpec::parse("su"), 24).separated)
    bad << "sep su a3; ";
  if (!separation_status(wa, g2, VarietySpec::parse("su"), 24).separated)
    bad << "sep su a2; ";
  if (separation_status(Word::parse("aa", a1), g2, VarietySpec::parse("su"), 24)
          .separated)
    bad << "sep member; ";
  // The printed witness: some homomorphism to S3 separates a from <a3>.
  FiniteGroup s3 = FiniteGroup::symmetric(3);
  bool s3_witness = false;
  for (std::size_t x = 0; x < s3.order(); ++x) {
    std::vector<std::uint8_t> images{static_cast<std::uint8_t>(x)};
    Subgroup img = subgroup_closure(s3, {s3.eval(g3[0], images)});
    if (!std::binary_search(img.begin(), img.end(), s3.eval(wa, images)))
      s3_witness = true;
  }
  if (!s3_witness) bad << "S3 witness; ";

  std::string b = bad.str();
  r.pass = b.empty();
  r.actual = b.empty() ? "all values and cross-checks agree" : b;
  return r;
}

CheckResult check_hpdense() {
  CheckResult r{"hpdense", 6,
                "rank conditions agree with the Magnus quotient on 100 random "
                "subgroups, p in {3,5}; |F/[N2,N2]N2^3| = 972 by enumeration",
                "", false};
  Alphabet ab = Alphabet::latin(2);
  std::mt19937 rng(kSeed);
  ClosureOptions opt;
  opt.cross_check = true;
  int failures = 0;
  for (int it = 0; it < 100; ++it) {
    std::vector<Word> gens = random_subgroup(rng, 2, 3, 6);
    LabeledGraph h = LabeledGraph::from_generators(gens, ab);
    for (long p : {3L, 5L}) {
      try {
        hp_dense(h, p, opt);
      } catch (const CertificateFailure&) {
        ++failures;
      }
    }
  }
  MagnusQuotient mq(3, 2);
  std::set<MagnusElement> elems{mq.identity()};
  std::vector<MagnusElement> frontier{mq.identity()};
  std::vector<MagnusElement> steps;
  for (std::size_t i = 0; i < 2; ++i) {
    steps.push_back(mq.generator(i));
    steps.push_back(mq.inverse(mq.generator(i)));
  }
  while (!frontier.empty()) {
    std::vector<MagnusElement> next;
    for (const MagnusElement& e : frontier)
      for (const MagnusElement& s : steps) {
        MagnusElement m = mq.multiply(e, s);
        if (elems.insert(m).second) next.push_back(m);
      }
    frontier = std::move(next);
  }
  bool order_ok = elems.size() == 972 && mq.full_image_order() == 972;
  r.pass = failures == 0 && order_ok;
  std::ostringstream a;
  a << failures << " disagreements; enumerated order " << elems.size();
  r.actual = a.str();
  return r;
}

CheckResult check_structural() {
  CheckResult r{"structural", 7,
                "closures lie in fringe(H), contain H, are idempotent; "
                "cl_su inside every cl_hp term",
                "", false};
  Alphabet a1 = Alphabet::latin(1);
  Alphabet ab = Alphabet::latin(2);
  std::vector<LabeledGraph> samples{
      LabeledGraph::from_generators(parse_words("aa", a1), a1),
      LabeledGraph::from_generators(parse_words("aaa", a1), a1),
      LabeledGraph::from_generators(parse_words("aa,b,abA", ab), ab),
      LabeledGraph::from_generators(parse_words("a,bb,baB", ab), ab)};
  std::ostringstream bad;
  for (std::size_t si = 0; si < samples.size(); ++si) {
    const LabeledGraph& h = samples[si];
    Fringe f = fringe(h);
    auto in_fringe = [&](const LabeledGraph& g) {
      for (const LabeledGraph& m : f.members)
        if (m == g) return true;
      return false;
    };
    for (const char* v : {"gp:2", "gp:3", "hp:2", "hp:3"}) {
      VarietySpec spec = VarietySpec::parse(v);
      ClosureResult c = closure(h, spec);
      if (!in_fringe(c.graph)) bad << "s" << si << " " << v << " fringe; ";
      if (!contains(h, c.graph)) bad << "s" << si << " " << v << " chain; ";
      if (!(closure(c.graph, spec).graph == c.graph))
        bad << "s" << si << " " << v << " idem; ";
    }
    ClosureResult su = cl_su(h);
    if (!contains(h, su.graph)) bad << "s" << si << " su chain; ";
    if (!(cl_su(su.graph).graph == su.graph)) bad << "s" << si << " su idem; ";
    for (long p : su.primes_used)
      if (!contains(su.graph, cl_hp(h, p).graph))
        bad << "s" << si << " su<=hp:" << p << "; ";
  }
  std::string b = bad.str();
  r.pass = b.empty();
  r.actual = b.empty() ? "all assertions hold" : b;
  return r;
}

CheckResult check_oracle() {
  CheckResult r{"oracle", 8,
                "lemma verifiers pass on the order<=24 catalog; "
                "supersolvability classifies S3, Z/12, D4, A4, S4",
                "", false};
  std::ostringstream bad;
  for (const FiniteGroup& g : catalog(24, std::nullopt)) {
    if (!verify_lemma_fff(g)) bad << g.name() << " fff; ";
    if (!verify_lemma_ff(g)) bad << g.name() << " ff; ";
    if (is_supersolvable(g) && !verify_lemma_fp(g)) bad << g.name() << " fp; ";
  }
  if (!is_supersolvable(FiniteGroup::symmetric(3))) bad << "S3; ";
  if (!is_supersolvable(FiniteGroup::cyclic(12))) bad << "Z/12; ";
  if (!is_supersolvable(FiniteGroup::dihedral(4))) bad << "D4; ";
  if (is_supersolvable(FiniteGroup::alternating4())) bad << "A4; ";
  if (is_supersolvable(FiniteGroup::symmetric(4))) bad << "S4; ";
  std::string b = bad.str();
  r.pass = b.empty();
  r.actual = b.empty() ? "all pass" : b;
  return r;
}

CheckResult check_finite_generation() {
  CheckResult r{"finite_generation", 9,
                "every cl_su output has a finite graph with basis size "
                "equal to rank E-V+1",
                "", false};
  Alphabet a1 = Alphabet::latin(1);
  Alphabet ab = Alphabet::latin(2);
  std::vector<LabeledGraph> samples{
      LabeledGraph::from_generators(parse_words("aa", a1), a1),
      LabeledGraph::from_generators(parse_words("aaa", a1), a1),
      LabeledGraph::from_generators(parse_words("aa,b,abA", ab), ab),
      LabeledGraph::from_generators(parse_words("a,bb,baB", ab), ab),
      LabeledGraph::from_generators(parse_words("a,b", ab), ab)};
  std::ostringstream bad;
  for (std::size_t si = 0; si < samples.size(); ++si) {
    ClosureResult su = cl_su(samples[si]);
    std::vector<Word> basis = generators(su.graph);
    if (basis.size() != su.graph.rank())
      bad << "s" << si << " basis " << basis.size() << " != rank "
          << su.graph.rank() << "; ";
    if (basis.empty() && su.graph.vertex_count() != 1)
      bad << "s" << si << " empty basis; ";
  }
  std::string b = bad.str();
  r.pass = b.empty();
  r.actual = b.empty() ? "all outputs finitely generated as claimed" : b;
  return r;
}

}  // namespace

std::vector<CheckResult> run_reproduction(const std::string& only) {
  std::vector<CheckResult> out;
  auto want = [&](const char* name) { return only.empty() || only == name; };
  if (want("figure1")) out.push_back(check_figure1());
  if (want("section232")) out.push_back(check_section232());
  if (want("figure3")) out.push_back(check_figure3());
  if (want("figure4")) out.push_back(check_figure4());
  if (want("membership")) out.push_back(check_membership());
  if (want("closure_values")) out.push_back(check_closure_values());
  if (want("hpdense")) out.push_back(check_hpdense());
  if (want("structural")) out.push_back(check_structural());
  if (want("oracle")) out.push_back(check_oracle());
  if (want("finite_generation")) out.push_back(check_finite_generation());
  return out;
}

}  // namespace provar
