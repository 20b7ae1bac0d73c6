#include "provar/oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "provar/errors.hpp"

namespace provar {

namespace {

long power_mod(long b, long e, long m) {
  long r = 1 % m;
  for (long i = 0; i < e; ++i) r = (r * b) % m;
  return r;
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name,
                         std::vector<std::vector<std::uint8_t>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  const std::size_t m = table_.size();
  if (m == 0 || m > 255) throw Error("group order out of range");
  for (const auto& row : table_)
    if (row.size() != m) throw Error("multiplication table not square");
  for (std::size_t a = 0; a < m; ++a)
    if (table_[0][a] != a || table_[a][0] != a)
      throw Error("element 0 is not an identity");
  inverse_.assign(m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    bool found = false;
    for (std::size_t b = 0; b < m; ++b)
      if (table_[a][b] == 0 && table_[b][a] == 0) {
        inverse_[a] = static_cast<std::uint8_t>(b);
        found = true;
      }
    if (!found) throw Error("element without inverse");
  }
  if (m <= 64) {
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = 0; b < m; ++b)
        for (std::size_t c = 0; c < m; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
            throw Error("multiplication table not associative");
  }
}

FiniteGroup FiniteGroup::trivial() { return cyclic(1); }

FiniteGroup FiniteGroup::cyclic(std::size_t m) {
  std::vector<std::vector<std::uint8_t>> t(m, std::vector<std::uint8_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      t[a][b] = static_cast<std::uint8_t>((a + b) % m);
  return FiniteGroup(m == 1 ? "1" : "Z/" + std::to_string(m), std::move(t));
}

FiniteGroup FiniteGroup::dihedral(std::size_t m) {
  const std::size_t n = 2 * m;
  auto idx = [m](std::size_t rot, std::size_t flip) { return rot + m * flip; };
  std::vector<std::vector<std::uint8_t>> t(n, std::vector<std::uint8_t>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          std::size_t rot = j == 0 ? (i + k) % m : (i + m - k % m) % m;
          t[idx(i, j)][idx(k, l)] =
              static_cast<std::uint8_t>(idx(rot, (j + l) % 2));
        }
  return FiniteGroup("D" + std::to_string(m), std::move(t));
}

namespace {

FiniteGroup permutation_group(const std::string& name,
                              std::vector<std::vector<int>> perms) {
  std::sort(perms.begin(), perms.end());
  std::map<std::vector<int>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  const std::size_t m = perms.size();
  std::vector<std::vector<std::uint8_t>> t(m, std::vector<std::uint8_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      std::vector<int> prod(perms[a].size());
      for (std::size_t i = 0; i < prod.size(); ++i)
        prod[i] = perms[a][perms[b][i]];
      t[a][b] = static_cast<std::uint8_t>(index.at(prod));
    }
  return FiniteGroup(name, std::move(t));
}

std::vector<std::vector<int>> permutations(std::size_t n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> all;
  do {
    all.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return all;
}

bool is_even_permutation(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inversions;
  return inversions % 2 == 0;
}

}  // namespace

FiniteGroup FiniteGroup::symmetric(std::size_t n) {
  if (n < 1 || n > 4) throw Error("symmetric(n) supports n <= 4");
  return permutation_group("S" + std::to_string(n), permutations(n));
}

FiniteGroup FiniteGroup::alternating4() {
  std::vector<std::vector<int>> evens;
  for (auto& p : permutations(4))
    if (is_even_permutation(p)) evens.push_back(p);
  return permutation_group("A4", std::move(evens));
}

FiniteGroup FiniteGroup::quaternion8() {
  // Elements: axis 0..3 (1, i, j, k) with a sign; index = 2*axis + (sign<0).
  auto mul = [](int a1, int s1, int a2, int s2) {
    int axis, sign = s1 * s2;
    if (a1 == 0)
      axis = a2;
    else if (a2 == 0)
      axis = a1;
    else if (a1 == a2) {
      axis = 0;
      sign = -sign;
    } else {
      axis = 6 - a1 - a2;
      bool cyclic = (a1 == 1 && a2 == 2) || (a1 == 2 && a2 == 3) ||
                    (a1 == 3 && a2 == 1);
      if (!cyclic) sign = -sign;
    }
    return 2 * axis + (sign < 0 ? 1 : 0);
  };
  std::vector<std::vector<std::uint8_t>> t(8, std::vector<std::uint8_t>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b)
      t[a][b] = static_cast<std::uint8_t>(
          mul(a / 2, a % 2 ? -1 : 1, b / 2, b % 2 ? -1 : 1));
  return FiniteGroup("Q8", std::move(t));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a,
                                        const FiniteGroup& b) {
  const std::size_t m = a.order() * b.order();
  if (m > 255) throw OrderCapExceeded(255);
  std::vector<std::vector<std::uint8_t>> t(m, std::vector<std::uint8_t>(m));
  auto idx = [&](std::size_t x, std::size_t y) { return x * b.order() + y; };
  for (std::size_t x1 = 0; x1 < a.order(); ++x1)
    for (std::size_t y1 = 0; y1 < b.order(); ++y1)
      for (std::size_t x2 = 0; x2 < a.order(); ++x2)
        for (std::size_t y2 = 0; y2 < b.order(); ++y2)
          t[idx(x1, y1)][idx(x2, y2)] = static_cast<std::uint8_t>(idx(
              a.mul(static_cast<std::uint8_t>(x1), static_cast<std::uint8_t>(x2)),
              b.mul(static_cast<std::uint8_t>(y1),
                    static_cast<std::uint8_t>(y2))));
  return FiniteGroup(a.name() + "x" + b.name(), std::move(t));
}

FiniteGroup FiniteGroup::semidirect_cyclic(long pk, long d, long u) {
  if (power_mod(u, d, pk) != 1 % pk)
    throw Error("semidirect action is not well defined");
  const std::size_t m = static_cast<std::size_t>(pk * d);
  if (m > 255) throw OrderCapExceeded(255);
  auto idx = [&](long x, long t) { return static_cast<std::size_t>(x + pk * t); };
  std::vector<std::vector<std::uint8_t>> t(m, std::vector<std::uint8_t>(m));
  for (long x1 = 0; x1 < pk; ++x1)
    for (long t1 = 0; t1 < d; ++t1)
      for (long x2 = 0; x2 < pk; ++x2)
        for (long t2 = 0; t2 < d; ++t2)
          t[idx(x1, t1)][idx(x2, t2)] = static_cast<std::uint8_t>(
              idx((x1 + power_mod(u, t1, pk) * x2) % pk, (t1 + t2) % d));
  return FiniteGroup("Z/" + std::to_string(pk) + ":" + std::to_string(d) + "u" +
                         std::to_string(u),
                     std::move(t));
}

std::size_t FiniteGroup::element_order(std::uint8_t a) const {
  std::size_t n = 1;
  std::uint8_t x = a;
  while (x != 0) {
    x = mul(x, a);
    ++n;
  }
  return n;
}

std::uint8_t FiniteGroup::eval(const Word& w,
                               const std::vector<std::uint8_t>& images) const {
  std::uint8_t r = 0;
  for (int l : w.letters()) {
    std::size_t i = static_cast<std::size_t>(l > 0 ? l : -l) - 1;
    if (i >= images.size()) throw DimensionMismatch();
    r = mul(r, l > 0 ? images[i] : inv(images[i]));
  }
  return r;
}

std::string FiniteGroup::fingerprint() const {
  std::vector<std::size_t> orders;
  for (std::size_t a = 0; a < order(); ++a)
    orders.push_back(element_order(static_cast<std::uint8_t>(a)));
  std::sort(orders.begin(), orders.end());
  std::string fp = std::to_string(order());
  fp += is_abelian(*this) ? "a" : "n";
  for (std::size_t o : orders) fp += "." + std::to_string(o);
  return fp;
}

Subgroup subgroup_closure(const FiniteGroup& g, Subgroup generators) {
  std::set<std::uint8_t> elems{0};
  for (std::uint8_t x : generators) elems.insert(x);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::uint8_t> cur(elems.begin(), elems.end());
    for (std::uint8_t a : cur)
      for (std::uint8_t b : cur)
        if (elems.insert(g.mul(a, b)).second) grew = true;
  }
  return Subgroup(elems.begin(), elems.end());
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g) {
  std::set<Subgroup> seen;
  seen.insert(Subgroup{0});
  std::vector<Subgroup> queue{Subgroup{0}};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Subgroup s = queue[head];
    for (std::size_t x = 1; x < g.order(); ++x) {
      if (std::binary_search(s.begin(), s.end(), static_cast<std::uint8_t>(x)))
        continue;
      Subgroup extended = s;
      extended.push_back(static_cast<std::uint8_t>(x));
      Subgroup grown = subgroup_closure(g, extended);
      if (seen.insert(grown).second) queue.push_back(std::move(grown));
    }
  }
  return queue;
}

bool is_normal(const FiniteGroup& g, const Subgroup& s) {
  for (std::size_t x = 0; x < g.order(); ++x)
    for (std::uint8_t a : s) {
      std::uint8_t conj = g.mul(g.mul(static_cast<std::uint8_t>(x), a),
                                g.inv(static_cast<std::uint8_t>(x)));
      if (!std::binary_search(s.begin(), s.end(), conj)) return false;
    }
  return true;
}

FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n) {
  if (!is_normal(g, n)) throw NotNormal();
  std::vector<int> coset(g.order(), -1);
  std::vector<std::uint8_t> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coset[x] != -1) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(static_cast<std::uint8_t>(x));
    for (std::uint8_t a : n) coset[g.mul(static_cast<std::uint8_t>(x), a)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<std::vector<std::uint8_t>> t(m, std::vector<std::uint8_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b)
      t[a][b] = static_cast<std::uint8_t>(coset[g.mul(reps[a], reps[b])]);
  return FiniteGroup(g.name() + "/N" + std::to_string(n.size()), std::move(t));
}

bool is_abelian(const FiniteGroup& g) {
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a + 1; b < g.order(); ++b)
      if (g.mul(static_cast<std::uint8_t>(a), static_cast<std::uint8_t>(b)) !=
          g.mul(static_cast<std::uint8_t>(b), static_cast<std::uint8_t>(a)))
        return false;
  return true;
}

bool is_p_group(const FiniteGroup& g, long p) {
  std::size_t m = g.order();
  while (m % p == 0) m /= p;
  return m == 1;
}

namespace {

Subgroup commutator_subgroup(const FiniteGroup& g, const Subgroup& h) {
  Subgroup gens;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::uint8_t b : h) {
      std::uint8_t x = static_cast<std::uint8_t>(a);
      gens.push_back(
          g.mul(g.mul(g.mul(x, b), g.inv(x)), g.inv(b)));
    }
  return subgroup_closure(g, gens);
}

std::size_t exponent(const FiniteGroup& g) {
  std::size_t e = 1;
  for (std::size_t a = 0; a < g.order(); ++a)
    e = std::lcm(e, g.element_order(static_cast<std::uint8_t>(a)));
  return e;
}

}  // namespace

bool is_nilpotent(const FiniteGroup& g) {
  Subgroup full;
  for (std::size_t a = 0; a < g.order(); ++a)
    full.push_back(static_cast<std::uint8_t>(a));
  Subgroup term = full;
  while (term.size() > 1) {
    Subgroup next = commutator_subgroup(g, term);
    if (next == term) return false;
    term = std::move(next);
  }
  return true;
}

bool is_supersolvable(const FiniteGroup& g) {
  if (g.order() == 1) return true;
  std::set<Subgroup> candidates;
  for (std::size_t a = 1; a < g.order(); ++a) {
    std::size_t o = g.element_order(static_cast<std::uint8_t>(a));
    bool prime = o >= 2;
    for (std::size_t i = 2; i * i <= o; ++i)
      if (o % i == 0) prime = false;
    if (prime) candidates.insert(subgroup_closure(g, {static_cast<std::uint8_t>(a)}));
  }
  for (const Subgroup& n : candidates)
    if (is_normal(g, n) && is_supersolvable(quotient(g, n))) return true;
  return false;
}

bool in_hp(const FiniteGroup& g, long p) {
  for (const Subgroup& s : all_subgroups(g)) {
    bool p_power = true;
    std::size_t m = s.size();
    while (m % p == 0) m /= p;
    if (m != 1) p_power = false;
    if (!p_power || !is_normal(g, s)) continue;
    FiniteGroup q = quotient(g, s);
    if (is_abelian(q) && (p - 1) % static_cast<long>(exponent(q)) == 0)
      return true;
  }
  return false;
}

bool in_variety(const FiniteGroup& g, const VarietySpec& v) {
  switch (v.kind) {
    case VarietySpec::Kind::Ab:
      return is_abelian(g) && v.param % static_cast<long>(exponent(g)) == 0;
    case VarietySpec::Kind::Gp: return is_p_group(g, v.param);
    case VarietySpec::Kind::Hp: return in_hp(g, v.param);
    case VarietySpec::Kind::Nil: return is_nilpotent(g);
    case VarietySpec::Kind::Su: return is_supersolvable(g);
  }
  return false;
}

std::vector<long> prime_divisors(std::size_t n) {
  std::vector<long> primes;
  for (std::size_t p = 2; p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(static_cast<long>(p));
      while (n % p == 0) n /= p;
    }
  }
  return primes;
}

Subgroup p_prime_core(const FiniteGroup& g, long p) {
  std::vector<Subgroup> cores;
  for (const Subgroup& s : all_subgroups(g))
    if (s.size() % p != 0 && is_normal(g, s)) cores.push_back(s);
  Subgroup best{0};
  for (const Subgroup& s : cores)
    if (s.size() > best.size()) best = s;
  for (const Subgroup& s : cores)
    for (std::uint8_t x : s)
      if (!std::binary_search(best.begin(), best.end(), x))
        throw CertificateFailure("p'-core is not unique-maximal");
  return best;
}

std::vector<FiniteGroup> catalog(std::size_t max_order,
                                 const std::optional<VarietySpec>& filter) {
  if (max_order > 64) throw OrderCapExceeded(64);
  std::vector<FiniteGroup> seeds;
  for (std::size_t m = 1; m <= max_order; ++m) seeds.push_back(FiniteGroup::cyclic(m));
  for (std::size_t m = 3; 2 * m <= max_order; ++m)
    seeds.push_back(FiniteGroup::dihedral(m));
  if (max_order >= 6) seeds.push_back(FiniteGroup::symmetric(3));
  if (max_order >= 12) seeds.push_back(FiniteGroup::alternating4());
  if (max_order >= 24) seeds.push_back(FiniteGroup::symmetric(4));
  if (max_order >= 8) seeds.push_back(FiniteGroup::quaternion8());
  for (long p : {3L, 5L, 7L, 11L, 13L}) {
    for (long pk = p; pk <= static_cast<long>(max_order); pk *= p) {
      for (long d = 2; d < p; ++d) {
        if ((p - 1) % d != 0 || pk * d > static_cast<long>(max_order)) continue;
        for (long u = 2; u < pk; ++u) {
          if (power_mod(u, d, pk) != 1) continue;
          bool exact_order = true;
          for (long e = 1; e < d; ++e)
            if (power_mod(u, e, pk) == 1) exact_order = false;
          if (exact_order)
            seeds.push_back(FiniteGroup::semidirect_cyclic(pk, d, u));
        }
      }
    }
  }
  std::vector<FiniteGroup> pool = seeds;
  for (std::size_t i = 0; i < seeds.size(); ++i)
    for (std::size_t j = i; j < seeds.size(); ++j)
      if (seeds[i].order() > 1 && seeds[j].order() > 1 &&
          seeds[i].order() * seeds[j].order() <= max_order)
        pool.push_back(FiniteGroup::direct_product(seeds[i], seeds[j]));

  std::set<std::string> fingerprints;
  std::vector<FiniteGroup> out;
  std::sort(pool.begin(), pool.end(),
            [](const FiniteGroup& a, const FiniteGroup& b) {
              return a.order() != b.order() ? a.order() < b.order()
                                            : a.name() < b.name();
            });
  for (FiniteGroup& g : pool) {
    if (g.order() > max_order) continue;
    if (filter && !in_variety(g, *filter)) continue;
    if (fingerprints.insert(g.fingerprint()).second) out.push_back(std::move(g));
  }
  return out;
}

SeparationStatus separation_status(const Word& w,
                                   const std::vector<Word>& h_gens,
                                   const std::optional<VarietySpec>& variety,
                                   std::size_t max_order) {
  std::size_t n = w.alphabet_size();
  for (const Word& g : h_gens) n = std::max(n, g.alphabet_size());
  SeparationStatus status{false, max_order, std::nullopt};
  for (const FiniteGroup& g : catalog(max_order, variety)) {
    std::vector<std::uint8_t> images(n, 0);
    while (true) {
      Subgroup image_gens;
      for (const Word& h : h_gens) image_gens.push_back(g.eval(h, images));
      Subgroup sub = subgroup_closure(g, image_gens);
      std::uint8_t wi = g.eval(w, images);
      if (!std::binary_search(sub.begin(), sub.end(), wi)) {
        status.separated = true;
        status.witness = SeparationWitness{g.name(), g.order(), images};
        return status;
      }
      // Next image tuple in lexicographic order.
      std::size_t i = n;
      while (i > 0 && images[i - 1] == g.order() - 1) images[--i] = 0;
      if (i == 0) break;
      images[i - 1]++;
    }
  }
  return status;
}

bool verify_lemma_fff(const FiniteGroup& g) {
  std::vector<long> primes = prime_divisors(g.order());
  std::vector<Subgroup> cores;
  for (long p : primes) cores.push_back(p_prime_core(g, p));
  for (const Subgroup& m : all_subgroups(g)) {
    std::set<std::uint8_t> meet;
    for (std::size_t x = 0; x < g.order(); ++x)
      meet.insert(static_cast<std::uint8_t>(x));
    for (const Subgroup& core : cores) {
      std::set<std::uint8_t> product;
      for (std::uint8_t a : m)
        for (std::uint8_t b : core) product.insert(g.mul(a, b));
      std::set<std::uint8_t> next;
      for (std::uint8_t x : meet)
        if (product.count(x)) next.insert(x);
      meet = std::move(next);
    }
    if (Subgroup(meet.begin(), meet.end()) != m) return false;
  }
  return true;
}

bool verify_lemma_fp(const FiniteGroup& g) {
  for (long p : prime_divisors(g.order()))
    if (!in_hp(quotient(g, p_prime_core(g, p)), p)) return false;
  return true;
}

bool verify_lemma_ff(const FiniteGroup& g) {
  std::set<std::uint8_t> meet;
  for (std::size_t x = 0; x < g.order(); ++x)
    meet.insert(static_cast<std::uint8_t>(x));
  for (long p : prime_divisors(g.order())) {
    Subgroup core = p_prime_core(g, p);
    std::set<std::uint8_t> next;
    for (std::uint8_t x : meet)
      if (std::binary_search(core.begin(), core.end(), x)) next.insert(x);
    meet = std::move(next);
  }
  return meet.size() == 1;
}

}  // namespace provar
