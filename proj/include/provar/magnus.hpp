#ifndef PROVAR_MAGNUS_HPP
#define PROVAR_MAGNUS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "provar/words.hpp"

namespace provar {

/// Element of the wreath-style product (Z/pZ)[Q]^n ⋊ Q with Q = (Z/(p-1)Z)^n:
/// a derivative vector (n blocks of |Q| values mod p) and a tail in Q.
/// Multiplication: (f, q)·(g, r) = (f + q·g, q + r) with (q·g)(x) = g(x - q).
struct MagnusElement {
  std::vector<std::uint8_t> deriv;  // n * |Q| entries mod p
  std::size_t tail = 0;             // index into Q
  friend bool operator==(const MagnusElement&, const MagnusElement&) = default;
  friend bool operator<(const MagnusElement& a, const MagnusElement& b) {
    return a.tail != b.tail ? a.tail < b.tail : a.deriv < b.deriv;
  }
};

/// The finite quotient F/[N_{p-1},N_{p-1}]N_{p-1}^p realized through the
/// Magnus (Fox-derivative) embedding.  The generator a_i maps to the element
/// with derivative δ_i at 0 and tail e_i; the map is a homomorphism whose
/// kernel is validated empirically by the test suite.
class MagnusQuotient {
 public:
  MagnusQuotient(long p, std::size_t n);

  long p() const { return p_; }
  long q() const { return q_; }  // p - 1
  std::size_t n() const { return n_; }
  std::size_t group_size() const { return q_size_; }  // |Q| = (p-1)^n

  MagnusElement identity() const;
  MagnusElement generator(std::size_t i) const;
  MagnusElement multiply(const MagnusElement& a, const MagnusElement& b) const;
  MagnusElement inverse(const MagnusElement& a) const;
  MagnusElement image(const Word& w) const;

  /// Order of the subgroup generated inside the wreath product, via
  /// Schreier generators for the intersection with the base vector space
  /// and Gaussian elimination mod p.
  unsigned long long subgroup_order(std::span<const MagnusElement> gens) const;
  /// Order of the image of the whole free group, i.e. of the quotient.
  unsigned long long full_image_order() const;

 private:
  std::size_t q_add(std::size_t a, std::size_t b) const;
  std::size_t q_neg(std::size_t a) const;

  long p_, q_;
  std::size_t n_, q_size_;
};

}  // namespace provar

#endif  // PROVAR_MAGNUS_HPP
