#ifndef PROVAR_ORACLE_HPP
#define PROVAR_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "provar/closures.hpp"
#include "provar/words.hpp"

namespace provar {

/// An explicit finite group as a multiplication table.  The table is fully
/// validated at construction (identity, inverses, associativity).
class FiniteGroup {
 public:
  FiniteGroup(std::string name, std::vector<std::vector<std::uint8_t>> table);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(std::size_t m);
  static FiniteGroup dihedral(std::size_t m);  // order 2m
  static FiniteGroup symmetric(std::size_t n); // n <= 4
  static FiniteGroup alternating4();
  static FiniteGroup quaternion8();
  static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);
  /// Z/(p^k)Z ⋊ Z/dZ with the generator of Z/dZ acting as multiplication
  /// by the unit u.  Requires u^d = 1 mod p^k.
  static FiniteGroup semidirect_cyclic(long pk, long d, long u);

  const std::string& name() const { return name_; }
  std::size_t order() const { return table_.size(); }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return table_[a][b]; }
  std::uint8_t identity() const { return 0; }
  std::uint8_t inv(std::uint8_t a) const { return inverse_[a]; }
  std::size_t element_order(std::uint8_t a) const;

  std::uint8_t eval(const Word& w, const std::vector<std::uint8_t>& images) const;

  /// Coarse isomorphism-invariant fingerprint (order, abelianness,
  /// element-order multiset).  Collisions are harmless for the catalog.
  std::string fingerprint() const;

 private:
  std::string name_;
  std::vector<std::vector<std::uint8_t>> table_;
  std::vector<std::uint8_t> inverse_;
};

using Subgroup = std::vector<std::uint8_t>;  // sorted element indices

Subgroup subgroup_closure(const FiniteGroup& g, Subgroup generators);
/// Complete subgroup list, by closure under extending generating sets.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);
bool is_normal(const FiniteGroup& g, const Subgroup& s);
FiniteGroup quotient(const FiniteGroup& g, const Subgroup& n);

bool is_abelian(const FiniteGroup& g);
bool is_p_group(const FiniteGroup& g, long p);
bool is_nilpotent(const FiniteGroup& g);
bool is_supersolvable(const FiniteGroup& g);
/// Membership in H_p = G_p * Ab_{p-1}: a normal p-subgroup with quotient
/// abelian of exponent dividing p-1.
bool in_hp(const FiniteGroup& g, long p);
bool in_variety(const FiniteGroup& g, const VarietySpec& v);

/// Largest normal subgroup of order coprime to p.
Subgroup p_prime_core(const FiniteGroup& g, long p);
std::vector<long> prime_divisors(std::size_t n);

/// Witness pool: standard small groups and their products up to max_order,
/// filtered by the variety predicate, deduplicated by fingerprint.
std::vector<FiniteGroup> catalog(std::size_t max_order,
                                 const std::optional<VarietySpec>& filter);

struct SeparationWitness {
  std::string group_name;
  std::size_t group_order;
  std::vector<std::uint8_t> images;  // generator images
};

struct SeparationStatus {
  bool separated;
  std::size_t max_order;
  std::optional<SeparationWitness> witness;
};

/// Searches all homomorphisms into the catalog for one with
/// phi(w) outside <phi(H)>.  SEPARATED certifies w outside Cl_V(H);
/// NOT_SEPARATED_UP_TO is inconclusive by design.
SeparationStatus separation_status(const Word& w,
                                   const std::vector<Word>& h_gens,
                                   const std::optional<VarietySpec>& variety,
                                   std::size_t max_order);

/// For every subgroup M: M equals the intersection of M·O_{p'}(G) over
/// p dividing |G|.
bool verify_lemma_fff(const FiniteGroup& g);
/// For supersolvable G: G/O_{p'}(G) lies in H_p for every p dividing |G|.
bool verify_lemma_fp(const FiniteGroup& g);
/// The intersection of the p'-cores over p dividing |G| is trivial.
bool verify_lemma_ff(const FiniteGroup& g);

}  // namespace provar

#endif  // PROVAR_ORACLE_HPP
