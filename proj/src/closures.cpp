#include "provar/closures.hpp"

#include <algorithm>
#include <numeric>

#include "provar/errors.hpp"
#include "provar/magnus.hpp"

namespace provar {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long i = 2; i * i <= p; ++i)
    if (p % i == 0) return false;
  return true;
}

void require_prime(long p) {
  if (!is_prime(p)) throw NotPrime(p);
}

bool contains(const LabeledGraph& big, const LabeledGraph& small) {
  return find_morphism(small, big).has_value();
}

bool is_overgroup(const LabeledGraph& h, const LabeledGraph& k) {
  auto m = find_morphism(h, k);
  return m && m->surjective;
}

// True iff the integer abelianization of <gens> is all of Z^n, i.e. the
// exponent matrix has all elementary divisors 1.
bool integer_abelianization_full(const std::vector<Word>& gens, std::size_t n) {
  std::vector<std::vector<long long>> rows;
  for (const Word& g : gens) {
    std::vector<long long> v(n, 0);
    for (int l : g.letters()) v[std::abs(l) - 1] += l > 0 ? 1 : -1;
    rows.push_back(std::move(v));
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < n; ++col) {
    if (rank >= rows.size()) return false;
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) return false;  // no pivot: not surjective
    std::swap(rows[rank], rows[pivot]);
    // Euclidean elimination below the pivot.
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      while (rows[i][col] != 0) {
        long long q = rows[rank][col] / rows[i][col];
        for (std::size_t j = 0; j < n; ++j) rows[rank][j] -= q * rows[i][j];
        std::swap(rows[rank], rows[i]);
      }
    }
    if (std::abs(rows[rank][col]) != 1) return false;
    ++rank;
  }
  return true;
}

}  // namespace

VarietySpec VarietySpec::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string head = text.substr(0, colon);
  long param = 0;
  if (colon != std::string::npos) param = std::stol(text.substr(colon + 1));
  if (head == "ab") {
    if (param < 1) throw Error("variety ab:d needs d >= 1");
    return {Kind::Ab, param};
  }
  if (head == "gp" || head == "hp") {
    require_prime(param);
    return {head == "gp" ? Kind::Gp : Kind::Hp, param};
  }
  if (head == "nil") return {Kind::Nil, 0};
  if (head == "su") return {Kind::Su, 0};
  throw Error("unknown variety: " + text);
}

std::string VarietySpec::str() const {
  switch (kind) {
    case Kind::Ab: return "ab:" + std::to_string(param);
    case Kind::Gp: return "gp:" + std::to_string(param);
    case Kind::Hp: return "hp:" + std::to_string(param);
    case Kind::Nil: return "nil";
    case Kind::Su: return "su";
  }
  return "?";
}

std::vector<Word> generators(const LabeledGraph& graph) {
  return schreier(graph).basis;
}

bool ab_dense(const LabeledGraph& h, long d) {
  if (d < 1) throw Error("ab_dense: d must be >= 1");
  return abelian_image(generators(h), d, h.label_count()).is_full();
}

ClosureResult cl_ab(const LabeledGraph& h, long d) {
  if (d < 1) throw Error("cl_ab: d must be >= 1");
  ModSubgroup image = abelian_image(generators(h), d, h.label_count());
  ClosureResult result{coset_graph(image, h.alphabet()),
                       {VarietySpec::Kind::Ab, d},
                       ClosureStatus::Exact,
                       {},
                       {}};
  if (!contains(result.graph, h))
    throw CertificateFailure("cl_ab result does not contain H");
  result.certificates.push_back("H maps into the coset graph of its mod-" +
                                std::to_string(d) + " abelian image");
  return result;
}

bool gp_dense(const LabeledGraph& h, long p) {
  require_prime(p);
  return ab_dense(h, p);
}

bool intrinsic_gp_dense(const LabeledGraph& h, const LabeledGraph& k, long p) {
  require_prime(p);
  if (!find_morphism(h, k)) throw NotASubgroup();
  if (k.rank() == 0) return true;
  BasisDictionary dict = basis_dictionary(k);
  std::vector<Word> rewritten;
  for (const Word& g : generators(h))
    rewritten.push_back(rewrite_in_basis(dict, g));
  return abelian_image(rewritten, p, dict.symbols.size()).is_full();
}

ClosureResult cl_gp(const LabeledGraph& h, long p,
                    const ClosureOptions& options) {
  require_prime(p);
  Fringe fr = fringe(h, options.fringe);
  std::vector<const LabeledGraph*> dense_members;
  LabeledGraph acc = h;
  for (const LabeledGraph& k : fr.members) {
    if (intrinsic_gp_dense(h, k, p)) {
      dense_members.push_back(&k);
      acc = join(acc, k);
    }
  }
  ClosureResult result{std::move(acc),
                       {VarietySpec::Kind::Gp, p},
                       ClosureStatus::Exact,
                       {p},
                       {}};
  bool in_fringe = std::any_of(
      fr.members.begin(), fr.members.end(),
      [&](const LabeledGraph& k) { return k == result.graph; });
  if (!in_fringe || !is_overgroup(h, result.graph))
    throw CertificateFailure("cl_gp result is not an overgroup of H");
  if (!intrinsic_gp_dense(h, result.graph, p))
    throw CertificateFailure("H is not p-dense in the cl_gp result");
  for (const LabeledGraph* k : dense_members)
    if (!contains(result.graph, *k))
      throw CertificateFailure("cl_gp result misses a p-dense fringe member");
  result.certificates.push_back("result lies in the fringe of H");
  result.certificates.push_back("H is " + std::to_string(p) +
                                "-dense in the result");
  result.certificates.push_back(
      "result contains every intrinsically dense fringe member");
  result.certificates.push_back(
      "completeness relies on the computability of pro-p closures");
  return result;
}

namespace {

// H cap N_{p-1} together with the data needed to work inside N_{p-1}.
struct HpContext {
  LabeledGraph cayley;       // Gamma(N_{p-1})
  BasisDictionary dict;      // Schreier basis of N_{p-1}
  LabeledGraph intersection; // Gamma(H cap N_{p-1})
  std::vector<Word> rewritten_gens;
};

HpContext hp_context(const LabeledGraph& h, long p) {
  long q = p - 1;
  LabeledGraph cayley = cayley_graph(q, h.alphabet());
  BasisDictionary dict = basis_dictionary(cayley);
  LabeledGraph inter = intersect(h, cayley);
  HpContext ctx{std::move(cayley), std::move(dict), std::move(inter), {}};
  for (const Word& g : generators(ctx.intersection))
    ctx.rewritten_gens.push_back(rewrite_in_basis(ctx.dict, g));
  return ctx;
}

bool hp_dense_magnus(const LabeledGraph& h, long p) {
  MagnusQuotient mq(p, h.label_count());
  std::vector<MagnusElement> images;
  for (const Word& g : generators(h)) images.push_back(mq.image(g));
  return mq.subgroup_order(images) == mq.full_image_order();
}

}  // namespace

bool hp_dense(const LabeledGraph& h, long p, const ClosureOptions& options) {
  require_prime(p);
  bool result;
  if (p == 2) {
    result = gp_dense(h, 2);
  } else {
    bool outer = ab_dense(h, p - 1);
    bool inner = false;
    if (outer) {
      HpContext ctx = hp_context(h, p);
      inner =
          abelian_image(ctx.rewritten_gens, p, ctx.dict.symbols.size())
              .is_full();
    }
    result = outer && inner;
  }
  if (options.cross_check) {
    if (hp_dense_magnus(h, p) != result)
      throw CertificateFailure(
          "H_p denseness: rank conditions disagree with the Magnus quotient");
  }
  return result;
}

ClosureResult cl_hp(const LabeledGraph& h, long p,
                    const ClosureOptions& options) {
  require_prime(p);
  if (p == 2) {
    ClosureResult result = cl_gp(h, 2, options);
    result.variety = {VarietySpec::Kind::Hp, 2};
    result.certificates.push_back("H_2 = G_2: computed as a pro-2 closure");
    return result;
  }
  HpContext ctx = hp_context(h, p);
  LabeledGraph inner_graph =
      LabeledGraph::from_generators(ctx.rewritten_gens, ctx.dict.symbols);
  ClosureResult inner = cl_gp(inner_graph, p, options);
  LabeledGraph lifted = blow_up(inner.graph, ctx.dict);
  ClosureResult result{join(lifted, h),
                       {VarietySpec::Kind::Hp, p},
                       inner.status,
                       {p},
                       {}};
  if (!is_overgroup(h, result.graph))
    throw CertificateFailure("cl_hp result is not an overgroup of H");
  result.certificates.push_back("result is an overgroup of H");
  if (options.cross_check) {
    // result must sit inside Cl_{Ab_p*Ab_{p-1}}(H) = H [N,N]N^p: every
    // generator's Magnus image must lie in the image of H.
    MagnusQuotient mq(p, h.label_count());
    std::vector<MagnusElement> h_images;
    for (const Word& g : generators(h)) h_images.push_back(mq.image(g));
    unsigned long long base_order = mq.subgroup_order(h_images);
    for (const Word& g : generators(result.graph)) {
      std::vector<MagnusElement> extended = h_images;
      extended.push_back(mq.image(g));
      if (mq.subgroup_order(extended) != base_order)
        throw CertificateFailure(
            "cl_hp result escapes the two-step abelian closure");
    }
    result.certificates.push_back(
        "result is contained in the Ab_p*Ab_{p-1} closure (Magnus check)");
  }
  return result;
}

namespace {

ClosureResult iterated_intersection(const LabeledGraph& h,
                                    VarietySpec::Kind kind,
                                    const ClosureOptions& options) {
  const PrimePolicy& policy = options.policy;
  ClosureResult result{h, {kind, 0}, ClosureStatus::SoundUpper, {}, {}};
  std::vector<LabeledGraph> terms;
  LabeledGraph running = h;
  int unchanged = 0;
  bool first = true;
  bool stable = false;
  for (long p = 2; p <= policy.max_prime; ++p) {
    if (!is_prime(p)) continue;
    ClosureResult term = kind == VarietySpec::Kind::Su ? cl_hp(h, p, options)
                                                       : cl_gp(h, p, options);
    result.primes_used.push_back(p);
    terms.push_back(term.graph);
    LabeledGraph next = first ? term.graph : intersect(running, term.graph);
    if (!first && next == running)
      ++unchanged;
    else
      unchanged = 0;
    running = std::move(next);
    first = false;
    bool base_done = std::all_of(
        policy.base_primes.begin(), policy.base_primes.end(),
        [&](long bp) { return bp <= p; });
    if (base_done && unchanged >= policy.stability_window) {
      stable = true;
      break;
    }
  }
  result.graph = std::move(running);
  if (!contains(result.graph, h))
    throw CertificateFailure("iterated closure does not contain H");
  for (const LabeledGraph& t : terms)
    if (!contains(t, result.graph))
      throw CertificateFailure("iterated closure escapes a per-prime term");
  result.certificates.push_back("contains H; contained in every per-prime term");
  result.certificates.push_back(
      "sound upper bound: finite sub-intersection of the per-prime closures");
  if (!stable)
    result.certificates.push_back(
        "PolicyExhausted: max_prime reached without a stability window");
  return result;
}

}  // namespace

ClosureResult cl_nil(const LabeledGraph& h, const ClosureOptions& options) {
  return iterated_intersection(h, VarietySpec::Kind::Nil, options);
}

ClosureResult cl_su(const LabeledGraph& h, const ClosureOptions& options) {
  return iterated_intersection(h, VarietySpec::Kind::Su, options);
}

ClosureResult closure(const LabeledGraph& h, const VarietySpec& variety,
                      const ClosureOptions& options) {
  switch (variety.kind) {
    case VarietySpec::Kind::Ab: return cl_ab(h, variety.param);
    case VarietySpec::Kind::Gp: return cl_gp(h, variety.param, options);
    case VarietySpec::Kind::Hp: return cl_hp(h, variety.param, options);
    case VarietySpec::Kind::Nil: return cl_nil(h, options);
    case VarietySpec::Kind::Su: return cl_su(h, options);
  }
  throw Error("unreachable");
}

bool dense(const LabeledGraph& h, const VarietySpec& variety,
           const ClosureOptions& options) {
  switch (variety.kind) {
    case VarietySpec::Kind::Ab: return ab_dense(h, variety.param);
    case VarietySpec::Kind::Gp: return gp_dense(h, variety.param);
    case VarietySpec::Kind::Hp: return hp_dense(h, variety.param, options);
    case VarietySpec::Kind::Nil:
      // Nil-dense iff Ab_p-dense for every prime p iff the integer
      // abelianization is onto.
      return integer_abelianization_full(generators(h), h.label_count());
    case VarietySpec::Kind::Su: {
      // Su-dense implies H_p-dense for every prime; scanned up to max_prime.
      for (long p = 2; p <= options.policy.max_prime; ++p)
        if (is_prime(p) && !hp_dense(h, p, options)) return false;
      return integer_abelianization_full(generators(h), h.label_count());
    }
  }
  throw Error("unreachable");
}

}  // namespace provar
