#include "provar/modlin.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "provar/errors.hpp"

namespace provar {

namespace {

long mod(long x, long d) {
  long r = x % d;
  return r < 0 ? r + d : r;
}

// x, y with x*a + y*b = gcd(a, b).
long xgcd(long a, long b, long& x, long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long x1, y1;
  long g = xgcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

std::vector<long> scaled_sum(const std::vector<long>& r1, long c1,
                             const std::vector<long>& r2, long c2, long d) {
  std::vector<long> out(r1.size());
  for (std::size_t i = 0; i < r1.size(); ++i)
    out[i] = mod(c1 * r1[i] + c2 * r2[i], d);
  return out;
}

// Unit u mod d with u*a == gcd(a, d) (mod d).
long normalizing_unit(long a, long d) {
  long g = std::gcd(a, d);
  for (long u = 1; u < d; ++u)
    if (std::gcd(u, d) == 1 && mod(u * a, d) == g) return u;
  return 1;  // d == 1
}

}  // namespace

ModSubgroup ModSubgroup::from_vectors(long modulus, std::size_t dim,
                                      std::vector<std::vector<long>> rows) {
  if (modulus < 1) throw Error("modulus must be >= 1");
  ModSubgroup s(modulus, dim);
  const long d = modulus;
  std::vector<std::vector<long>> work;
  for (auto& r : rows) {
    if (r.size() != dim) throw DimensionMismatch();
    for (long& x : r) x = mod(x, d);
    work.push_back(std::move(r));
  }

  for (std::size_t col = 0; col < dim; ++col) {
    // Combine all rows with a nonzero entry in this column into one.
    std::vector<std::vector<long>> nonzero, rest;
    for (auto& r : work)
      (r[col] != 0 ? nonzero : rest).push_back(std::move(r));
    work = std::move(rest);
    while (nonzero.size() > 1) {
      auto r2 = std::move(nonzero.back());
      nonzero.pop_back();
      auto r1 = std::move(nonzero.back());
      nonzero.pop_back();
      long a = r1[col], b = r2[col], x, y;
      long g = xgcd(a, b, x, y);
      auto combined = scaled_sum(r1, x, r2, y, d);
      auto eliminated = scaled_sum(r1, b / g, r2, -(a / g), d);
      nonzero.push_back(std::move(combined));
      if (std::any_of(eliminated.begin(), eliminated.end(),
                      [](long v) { return v != 0; }))
        work.push_back(std::move(eliminated));
    }
    if (nonzero.empty()) continue;
    auto r = std::move(nonzero.front());
    long g = std::gcd(r[col], d);
    long u = normalizing_unit(r[col], d);
    for (long& v : r) v = mod(u * v, d);
    // Howell closure: (d/g)*r has a zero pivot but may act later.
    auto tail = scaled_sum(r, d / g, r, 0, d);
    if (std::any_of(tail.begin(), tail.end(), [](long v) { return v != 0; }))
      work.push_back(std::move(tail));
    s.pivot_cols_.push_back(col);
    s.pivots_.push_back(g);
    s.rows_.push_back(std::move(r));
  }

  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = 0; i < s.rows_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      long q = s.rows_[j][s.pivot_cols_[i]] / s.pivots_[i];
      if (q != 0) s.rows_[j] = scaled_sum(s.rows_[j], 1, s.rows_[i], -q, d);
    }
  }
  return s;
}

std::vector<long> ModSubgroup::reduce(std::span<const long> v) const {
  if (v.size() != dim_) throw DimensionMismatch();
  std::vector<long> r(v.begin(), v.end());
  for (long& x : r) x = mod(x, modulus_);
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    long e = r[pivot_cols_[i]];
    long q = e / pivots_[i];
    if (q != 0) r = scaled_sum(r, 1, rows_[i], -q, modulus_);
  }
  return r;
}

bool ModSubgroup::member(std::span<const long> v) const {
  auto r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](long x) { return x == 0; });
}

unsigned long long ModSubgroup::order() const {
  unsigned long long o = 1;
  for (long g : pivots_) o *= static_cast<unsigned long long>(modulus_ / g);
  return o;
}

bool ModSubgroup::is_full() const {
  unsigned long long full = 1;
  for (std::size_t i = 0; i < dim_; ++i)
    full *= static_cast<unsigned long long>(modulus_);
  return order() == full;
}

std::vector<long> exponent_vector(const Word& w, long d, std::size_t dim) {
  std::vector<long> v(dim, 0);
  for (int l : w.letters()) {
    std::size_t i = static_cast<std::size_t>(l > 0 ? l : -l) - 1;
    if (i >= dim) throw DimensionMismatch();
    v[i] = mod(v[i] + (l > 0 ? 1 : -1), d);
  }
  return v;
}

ModSubgroup abelian_image(std::span<const Word> gens, long d, std::size_t dim) {
  std::vector<std::vector<long>> rows;
  for (const Word& g : gens) rows.push_back(exponent_vector(g, d, dim));
  return ModSubgroup::from_vectors(d, dim, std::move(rows));
}

LabeledGraph coset_graph(const ModSubgroup& s, const Alphabet& alphabet) {
  if (alphabet.size() != s.dim()) throw DimensionMismatch();
  const long d = s.modulus();
  std::map<std::vector<long>, int> id;
  std::vector<std::vector<long>> reps;
  auto vertex = [&](const std::vector<long>& rep) {
    auto [it, inserted] = id.try_emplace(rep, static_cast<int>(reps.size()));
    if (inserted) reps.push_back(rep);
    return it->second;
  };
  RawGraph raw{alphabet, 0, 0, {}};
  vertex(s.reduce(std::vector<long>(s.dim(), 0)));
  for (std::size_t head = 0; head < reps.size(); ++head) {
    std::vector<long> cur = reps[head];
    for (std::size_t i = 0; i < s.dim(); ++i) {
      std::vector<long> next = cur;
      next[i] = mod(next[i] + 1, d);
      raw.edges.push_back({static_cast<int>(head), static_cast<int>(i),
                           vertex(s.reduce(next))});
    }
  }
  raw.vertex_count = reps.size();
  return fold(raw);
}

}  // namespace provar
