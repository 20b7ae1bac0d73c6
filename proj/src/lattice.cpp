#include "provar/lattice.hpp"

#include <deque>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "provar/errors.hpp"

namespace provar {

LabeledGraph intersect(const LabeledGraph& a, const LabeledGraph& b) {
  if (!(a.alphabet() == b.alphabet())) throw AlphabetMismatch();
  const std::size_t n = a.label_count();
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> pairs;
  auto vertex = [&](int u, int v) {
    auto [it, inserted] = id.try_emplace({u, v}, static_cast<int>(pairs.size()));
    if (inserted) pairs.push_back({u, v});
    return it->second;
  };
  RawGraph raw{a.alphabet(), 0, 0, {}};
  vertex(0, 0);
  for (std::size_t head = 0; head < pairs.size(); ++head) {
    auto [u, v] = pairs[head];
    for (std::size_t l = 0; l < n; ++l) {
      int u2 = a.out(u, static_cast<int>(l));
      int v2 = b.out(v, static_cast<int>(l));
      if (u2 != LabeledGraph::kNone && v2 != LabeledGraph::kNone)
        raw.edges.push_back({vertex(u, v), static_cast<int>(l), vertex(u2, v2)});
      int u3 = a.in(u, static_cast<int>(l));
      int v3 = b.in(v, static_cast<int>(l));
      if (u3 != LabeledGraph::kNone && v3 != LabeledGraph::kNone)
        raw.edges.push_back({vertex(u3, v3), static_cast<int>(l), vertex(u, v)});
    }
  }
  raw.vertex_count = pairs.size();
  return fold(raw);
}

LabeledGraph join(const LabeledGraph& a, const LabeledGraph& b) {
  if (!(a.alphabet() == b.alphabet())) throw AlphabetMismatch();
  RawGraph raw{a.alphabet(), a.vertex_count() + b.vertex_count(), 0, {}};
  for (const Edge& e : a.edges()) raw.edges.push_back(e);
  const int offset = static_cast<int>(a.vertex_count());
  auto shift = [&](int v) { return v == 0 ? 0 : v + offset - 1; };
  for (const Edge& e : b.edges())
    raw.edges.push_back({shift(e.from), e.label, shift(e.to)});
  raw.vertex_count = a.vertex_count() + b.vertex_count() - 1;
  return fold(raw);
}

Fringe fringe(const LabeledGraph& origin, const FringeOptions& options) {
  if (origin.vertex_count() > options.max_vertices)
    throw FringeCapExceeded(options.max_vertices);
  Fringe result;
  result.origin = origin;
  std::unordered_set<LabeledGraph, GraphHash> seen;
  seen.insert(origin);
  result.members.push_back(origin);
  for (std::size_t head = 0; head < result.members.size(); ++head) {
    // Copy: result.members may reallocate while we append.
    LabeledGraph g = result.members[head];
    const std::size_t vc = g.vertex_count();
    for (std::size_t u = 0; u + 1 < vc; ++u) {
      for (std::size_t v = u + 1; v < vc; ++v) {
        RawGraph raw{g.alphabet(), vc, 0, g.edges()};
        for (Edge& e : raw.edges) {
          if (e.from == static_cast<int>(v)) e.from = static_cast<int>(u);
          if (e.to == static_cast<int>(v)) e.to = static_cast<int>(u);
        }
        LabeledGraph merged = fold(raw);
        if (seen.insert(merged).second) {
          if (result.members.size() >= options.max_members)
            throw FringeCapExceeded(options.max_members);
          result.members.push_back(std::move(merged));
        }
      }
    }
  }
  return result;
}

BasisDictionary basis_dictionary(const LabeledGraph& graph) {
  BasisDictionary dict{schreier(graph), Alphabet(0), {}};
  dict.symbols = Alphabet(dict.ambient.basis.size());
  dict.to_ambient = dict.ambient.basis;
  return dict;
}

Word rewrite_in_basis(const BasisDictionary& dict, const Word& w) {
  const LabeledGraph& g = dict.ambient.graph;
  if (!w.empty() && w.alphabet_size() != g.label_count())
    throw AlphabetMismatch();
  std::unordered_map<long long, int> nontree_symbol;  // edge key -> symbol
  auto key = [&](const Edge& e) {
    return (static_cast<long long>(e.from) * g.label_count() + e.label) *
               static_cast<long long>(g.vertex_count()) +
           e.to;
  };
  for (std::size_t i = 0; i < dict.ambient.nontree_edges.size(); ++i)
    nontree_symbol[key(g.edges()[dict.ambient.nontree_edges[i]])] =
        static_cast<int>(i) + 1;
  std::vector<int> out;
  int v = 0;
  for (int l : w.letters()) {
    Edge e;
    int next;
    if (l > 0) {
      next = g.out(v, l - 1);
      if (next == LabeledGraph::kNone) throw NotAMember();
      e = {v, l - 1, next};
    } else {
      next = g.in(v, -l - 1);
      if (next == LabeledGraph::kNone) throw NotAMember();
      e = {next, -l - 1, v};
    }
    auto it = nontree_symbol.find(key(e));
    if (it != nontree_symbol.end()) out.push_back(l > 0 ? it->second : -it->second);
    v = next;
  }
  if (v != 0) throw NotAMember();
  return Word::from_letters(dict.symbols.size(), std::move(out));
}

LabeledGraph blow_up(const LabeledGraph& graph, const BasisDictionary& dict) {
  if (graph.label_count() != dict.symbols.size()) throw AlphabetMismatch();
  RawGraph raw{dict.ambient.graph.alphabet(), graph.vertex_count(), 0, {}};
  if (raw.vertex_count == 0) raw.vertex_count = 1;
  for (const Edge& e : graph.edges()) {
    const Word& path = dict.to_ambient[e.label];
    int cur = e.from;
    for (std::size_t i = 0; i < path.letters().size(); ++i) {
      int l = path.letters()[i];
      int next = i + 1 == path.letters().size()
                     ? e.to
                     : static_cast<int>(raw.vertex_count++);
      if (l > 0)
        raw.edges.push_back({cur, l - 1, next});
      else
        raw.edges.push_back({next, -l - 1, cur});
      cur = next;
    }
  }
  return fold(raw);
}

}  // namespace provar
