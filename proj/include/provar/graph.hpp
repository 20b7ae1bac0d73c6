#ifndef PROVAR_GRAPH_HPP
#define PROVAR_GRAPH_HPP

#include <optional>
#include <span>
#include <vector>

#include "provar/words.hpp"

namespace provar {

struct Edge {
  int from;
  int label;  // symbol index, 0-based
  int to;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Mutable pre-fold graph.  May violate determinism/codeterminism and carry
/// valence-1 vertices; fold() turns it into a canonical LabeledGraph.
struct RawGraph {
  Alphabet alphabet;
  std::size_t vertex_count = 0;
  int base = 0;
  std::vector<Edge> edges;
};

/// A reduced A-labeled graph in canonical form: deterministic and
/// codeterministic, core at the base vertex, vertices numbered by BFS from
/// the base (base = 0, per-vertex exploration by ascending label, outgoing
/// before incoming).  Two graphs represent the same subgroup iff they
/// compare equal.  Immutable.
class LabeledGraph {
 public:
  static constexpr int kNone = -1;

  /// Empty placeholder over an empty alphabet; assign before use.
  LabeledGraph() : alphabet_(0) {}

  static LabeledGraph trivial(const Alphabet& alphabet);
  static LabeledGraph from_generators(std::span<const Word> gens,
                                      const Alphabet& alphabet);
  static LabeledGraph from_generators(const std::vector<Word>& gens,
                                      const Alphabet& alphabet) {
    return from_generators(std::span<const Word>(gens), alphabet);
  }

  const Alphabet& alphabet() const { return alphabet_; }
  std::size_t label_count() const { return alphabet_.size(); }
  std::size_t vertex_count() const { return vertex_count_; }
  int base() const { return 0; }
  int out(int v, int label) const { return out_[v][label]; }
  int in(int v, int label) const { return in_[v][label]; }
  /// Edges sorted by (from, label, to).
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool member(const Word& w) const;
  std::size_t rank() const { return edges_.size() - vertex_count_ + 1; }
  /// Vertex count when the graph is complete, otherwise nullopt (infinite).
  std::optional<std::size_t> index() const;

  friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
    return a.alphabet_ == b.alphabet_ && a.out_ == b.out_ && a.in_ == b.in_;
  }
  std::size_t hash() const;

  friend LabeledGraph fold(const RawGraph& raw);

 private:
  Alphabet alphabet_;
  std::size_t vertex_count_ = 0;
  std::vector<std::vector<int>> out_, in_;  // [vertex][label], kNone if absent
  std::vector<Edge> edges_;
};

struct GraphHash {
  std::size_t operator()(const LabeledGraph& g) const { return g.hash(); }
};

/// Folds a raw graph: identifies equal-label edges sharing an origin or a
/// terminus until none remain, prunes valence-1 non-base vertices, and
/// canonicalizes.  The result is independent of identification order.
LabeledGraph fold(const RawGraph& raw);

/// Base-point and label preserving map between reduced graphs.
struct GraphMorphism {
  std::vector<int> vertex_map;  // source vertex -> target vertex
  bool injective = false;
  bool surjective = false;
};

/// The unique morphism source -> target, or nullopt iff L(source) is not
/// contained in L(target).
std::optional<GraphMorphism> find_morphism(const LabeledGraph& source,
                                           const LabeledGraph& target);

enum class TreeStrategy { Bfs };

/// Edge indices (into graph.edges()) of a spanning tree.
std::vector<std::size_t> spanning_tree(const LabeledGraph& graph,
                                       TreeStrategy strategy = TreeStrategy::Bfs);

/// Schreier transversal and basis attached to a spanning tree.
struct SchreierData {
  LabeledGraph graph;
  std::vector<std::size_t> tree_edges;     // sorted edge indices
  std::vector<Word> transversal;           // per vertex, tree path from base
  std::vector<std::size_t> nontree_edges;  // sorted edge indices
  std::vector<Word> basis;                 // parallel to nontree_edges
};

SchreierData schreier(const LabeledGraph& graph,
                      std::vector<std::size_t> tree_edges);
inline SchreierData schreier(const LabeledGraph& graph) {
  return schreier(graph, spanning_tree(graph));
}

/// Cayley graph of (Z/dZ)^n over an alphabet of size n; represents the
/// subgroup N_d = [F,F]F^d.  d = 1 gives the one-vertex complete bouquet.
LabeledGraph cayley_graph(long d, const Alphabet& alphabet);

}  // namespace provar

#endif  // PROVAR_GRAPH_HPP
