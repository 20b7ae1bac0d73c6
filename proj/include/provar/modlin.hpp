#ifndef PROVAR_MODLIN_HPP
#define PROVAR_MODLIN_HPP

#include <span>
#include <vector>

#include "provar/graph.hpp"
#include "provar/words.hpp"

namespace provar {

/// A subgroup of (Z/dZ)^n held as its Howell-form generating matrix, the
/// unique canonical form of the generated subgroup for a composite or prime
/// modulus alike.  Membership, order and equality are decided from it alone.
class ModSubgroup {
 public:
  static ModSubgroup from_vectors(long modulus, std::size_t dim,
                                  std::vector<std::vector<long>> rows);
  static ModSubgroup zero(long modulus, std::size_t dim) {
    return from_vectors(modulus, dim, {});
  }

  long modulus() const { return modulus_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::vector<long>>& rows() const { return rows_; }

  bool member(std::span<const long> v) const;
  bool is_full() const;
  unsigned long long order() const;
  /// Canonical coset representative of v modulo this subgroup.
  std::vector<long> reduce(std::span<const long> v) const;

  friend bool operator==(const ModSubgroup& a, const ModSubgroup& b) {
    return a.modulus_ == b.modulus_ && a.dim_ == b.dim_ && a.rows_ == b.rows_;
  }

 private:
  ModSubgroup(long modulus, std::size_t dim) : modulus_(modulus), dim_(dim) {}
  long modulus_;
  std::size_t dim_;
  std::vector<std::vector<long>> rows_;    // Howell form, no zero rows
  std::vector<std::size_t> pivot_cols_;
  std::vector<long> pivots_;               // divisors of modulus
};

/// Exponent-sum vector of a word, mod d.
std::vector<long> exponent_vector(const Word& w, long d, std::size_t dim);

/// Image of <gens> under abelianization mod d.
ModSubgroup abelian_image(std::span<const Word> gens, long d, std::size_t dim);
inline ModSubgroup abelian_image(const std::vector<Word>& gens, long d,
                                 std::size_t dim) {
  return abelian_image(std::span<const Word>(gens), d, dim);
}

/// Coset graph of s in (Z/dZ)^n over the given alphabet (n = alphabet size);
/// represents H·[F,F]F^d when s is the abelian image of H mod d.
LabeledGraph coset_graph(const ModSubgroup& s, const Alphabet& alphabet);

}  // namespace provar

#endif  // PROVAR_MODLIN_HPP
