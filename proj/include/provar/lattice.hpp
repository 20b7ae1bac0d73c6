#ifndef PROVAR_LATTICE_HPP
#define PROVAR_LATTICE_HPP

#include <vector>

#include "provar/graph.hpp"

namespace provar {

/// Pullback: L(result) = L(a) ∩ L(b).  Product graph on vertex pairs
/// reachable from (base, base), core-pruned at the base.
LabeledGraph intersect(const LabeledGraph& a, const LabeledGraph& b);

/// Wedge at the base points followed by fold: L(result) = <L(a) ∪ L(b)>.
LabeledGraph join(const LabeledGraph& a, const LabeledGraph& b);

struct FringeOptions {
  std::size_t max_vertices = 12;  // exhaustive-mode input cap
  std::size_t max_members = 20000;
};

/// All overgroups of the origin: canonical graphs admitting a surjective
/// morphism from it.  origin is always a member.
struct Fringe {
  LabeledGraph origin;
  std::vector<LabeledGraph> members;
};

/// Merge-pair BFS over quotients with canonical-form deduplication.
/// Throws FringeCapExceeded when a cap is hit.
Fringe fringe(const LabeledGraph& origin, const FringeOptions& options = {});

/// Identifies a subgroup K with the free group on its Schreier basis.
/// Symbols are x1, x2, ... in non-tree-edge canonical order.
struct BasisDictionary {
  SchreierData ambient;
  Alphabet symbols;             // anonymous, size = rank(K)
  std::vector<Word> to_ambient; // symbol index -> Schreier basis word over A
};

BasisDictionary basis_dictionary(const LabeledGraph& graph);

/// Expresses a member of the ambient subgroup in its Schreier basis.
/// Throws NotAMember when the trace fails.
Word rewrite_in_basis(const BasisDictionary& dict, const Word& w);

/// Inverse of rewrite_in_basis on subgroups: substitutes to_ambient into
/// every edge of a graph over dict.symbols and folds.
LabeledGraph blow_up(const LabeledGraph& graph, const BasisDictionary& dict);

}  // namespace provar

#endif  // PROVAR_LATTICE_HPP
