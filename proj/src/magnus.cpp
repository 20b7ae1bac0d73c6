#include "provar/magnus.hpp"

#include <map>
#include <stdexcept>

#include "provar/errors.hpp"

namespace provar {

namespace {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long i = 2; i * i <= p; ++i)
    if (p % i == 0) return false;
  return true;
}

// Rank of a set of vectors over F_p.
std::size_t fp_rank(std::vector<std::vector<std::uint8_t>> rows, long p) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t dim = rows[0].size();
  for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    long inv = 1;
    for (long u = 1; u < p; ++u)
      if ((u * rows[rank][col]) % p == 1) inv = u;
    for (std::size_t j = col; j < dim; ++j)
      rows[rank][j] = static_cast<std::uint8_t>((rows[rank][j] * inv) % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col] == 0) continue;
      long c = rows[i][col];
      for (std::size_t j = col; j < dim; ++j)
        rows[i][j] = static_cast<std::uint8_t>(
            ((rows[i][j] + (p - c) * rows[rank][j]) % p));
    }
    ++rank;
  }
  return rank;
}

}  // namespace

MagnusQuotient::MagnusQuotient(long p, std::size_t n) : p_(p), q_(p - 1), n_(n) {
  if (!is_prime(p)) throw NotPrime(p);
  q_size_ = 1;
  for (std::size_t i = 0; i < n; ++i) {
    q_size_ *= static_cast<std::size_t>(q_);
    if (q_size_ > 100000) throw OrderCapExceeded(100000);
  }
}

std::size_t MagnusQuotient::q_add(std::size_t a, std::size_t b) const {
  std::size_t out = 0, stride = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    std::size_t da = (a / stride) % q_, db = (b / stride) % q_;
    out += ((da + db) % q_) * stride;
    stride *= static_cast<std::size_t>(q_);
  }
  return out;
}

std::size_t MagnusQuotient::q_neg(std::size_t a) const {
  std::size_t out = 0, stride = 1;
  for (std::size_t i = 0; i < n_; ++i) {
    std::size_t da = (a / stride) % q_;
    out += ((q_ - da) % q_) * stride;
    stride *= static_cast<std::size_t>(q_);
  }
  return out;
}

MagnusElement MagnusQuotient::identity() const {
  return {std::vector<std::uint8_t>(n_ * q_size_, 0), 0};
}

MagnusElement MagnusQuotient::generator(std::size_t i) const {
  MagnusElement e = identity();
  e.deriv[i * q_size_ + 0] = 1;  // delta_i supported at 0 in Q
  if (q_ > 1) {
    std::size_t stride = 1;
    for (std::size_t j = 0; j < i; ++j) stride *= static_cast<std::size_t>(q_);
    e.tail = stride;  // e_i
  }
  return e;
}

MagnusElement MagnusQuotient::multiply(const MagnusElement& a,
                                       const MagnusElement& b) const {
  MagnusElement out = identity();
  out.tail = q_add(a.tail, b.tail);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t x = 0; x < q_size_; ++x) {
      // (a.tail · b)(x) = b(x - a.tail)
      std::size_t shifted = q_add(x, q_neg(a.tail));
      out.deriv[i * q_size_ + x] = static_cast<std::uint8_t>(
          (a.deriv[i * q_size_ + x] + b.deriv[i * q_size_ + shifted]) % p_);
    }
  }
  return out;
}

MagnusElement MagnusQuotient::inverse(const MagnusElement& a) const {
  MagnusElement out = identity();
  out.tail = q_neg(a.tail);
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t x = 0; x < q_size_; ++x) {
      std::size_t shifted = q_add(x, a.tail);
      out.deriv[i * q_size_ + x] = static_cast<std::uint8_t>(
          (p_ - a.deriv[i * q_size_ + shifted]) % p_);
    }
  }
  return out;
}

MagnusElement MagnusQuotient::image(const Word& w) const {
  if (!w.empty() && w.alphabet_size() != n_) throw AlphabetMismatch();
  MagnusElement out = identity();
  for (int l : w.letters()) {
    std::size_t i = static_cast<std::size_t>(l > 0 ? l : -l) - 1;
    MagnusElement g = generator(i);
    out = multiply(out, l > 0 ? g : inverse(g));
  }
  return out;
}

unsigned long long MagnusQuotient::subgroup_order(
    std::span<const MagnusElement> gens) const {
  if (gens.empty()) return 1;
  // Image of the tails: the projection of the subgroup to Q.
  std::map<std::size_t, MagnusElement> transversal;  // tail -> representative
  transversal.emplace(0, identity());
  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t t : frontier) {
      for (const MagnusElement& g : gens) {
        MagnusElement u = multiply(transversal.at(t), g);
        if (!transversal.count(u.tail)) {
          transversal.emplace(u.tail, u);
          next.push_back(u.tail);
        }
      }
    }
    frontier = std::move(next);
  }
  // Schreier generators of the intersection with the base vector space.
  std::vector<std::vector<std::uint8_t>> vectors;
  for (const auto& [t, rep] : transversal) {
    for (const MagnusElement& g : gens) {
      MagnusElement u = multiply(rep, g);
      MagnusElement s = multiply(u, inverse(transversal.at(u.tail)));
      vectors.push_back(s.deriv);
    }
  }
  std::size_t rank = fp_rank(std::move(vectors), p_);
  unsigned long long order = transversal.size();
  for (std::size_t i = 0; i < rank; ++i)
    order *= static_cast<unsigned long long>(p_);
  return order;
}

unsigned long long MagnusQuotient::full_image_order() const {
  std::vector<MagnusElement> gens;
  for (std::size_t i = 0; i < n_; ++i) gens.push_back(generator(i));
  return subgroup_order(gens);
}

}  // namespace provar
