#ifndef PROVAR_CLOSURES_HPP
#define PROVAR_CLOSURES_HPP

#include <string>
#include <vector>

#include "provar/lattice.hpp"
#include "provar/modlin.hpp"

namespace provar {

struct VarietySpec {
  enum class Kind { Ab, Gp, Hp, Nil, Su };
  Kind kind;
  long param = 0;  // d for Ab, p for Gp/Hp

  /// Parses "ab:d", "gp:p", "hp:p", "nil", "su".
  static VarietySpec parse(const std::string& text);
  std::string str() const;
};

enum class ClosureStatus { Exact, SoundUpper };

struct ClosureResult {
  LabeledGraph graph;
  VarietySpec variety;
  ClosureStatus status;
  std::vector<long> primes_used;
  std::vector<std::string> certificates;
};

struct PrimePolicy {
  std::vector<long> base_primes{2, 3, 5, 7};
  int stability_window = 3;
  long max_prime = 31;
};

struct ClosureOptions {
  FringeOptions fringe;
  bool cross_check = false;  // recompute H_p-denseness via the Magnus quotient
  PrimePolicy policy;
};

/// Schreier basis generators of the subgroup (BFS spanning tree).
std::vector<Word> generators(const LabeledGraph& graph);

bool ab_dense(const LabeledGraph& h, long d);
ClosureResult cl_ab(const LabeledGraph& h, long d);

bool gp_dense(const LabeledGraph& h, long p);
/// H is Ab_p-dense inside K, K viewed as a free group on its Schreier basis.
/// Requires H <= K; rank-0 K counts as dense.
bool intrinsic_gp_dense(const LabeledGraph& h, const LabeledGraph& k, long p);
ClosureResult cl_gp(const LabeledGraph& h, long p,
                    const ClosureOptions& options = {});

bool hp_dense(const LabeledGraph& h, long p, const ClosureOptions& options = {});
ClosureResult cl_hp(const LabeledGraph& h, long p,
                    const ClosureOptions& options = {});

ClosureResult cl_nil(const LabeledGraph& h, const ClosureOptions& options = {});
ClosureResult cl_su(const LabeledGraph& h, const ClosureOptions& options = {});

ClosureResult closure(const LabeledGraph& h, const VarietySpec& variety,
                      const ClosureOptions& options = {});
bool dense(const LabeledGraph& h, const VarietySpec& variety,
           const ClosureOptions& options = {});

}  // namespace provar

#endif  // PROVAR_CLOSURES_HPP
