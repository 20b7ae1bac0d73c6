#include "provar/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <set>
#include <unordered_map>

#include "provar/errors.hpp"

namespace provar {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool merge(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

LabeledGraph LabeledGraph::trivial(const Alphabet& alphabet) {
  RawGraph raw{alphabet, 1, 0, {}};
  return fold(raw);
}

LabeledGraph LabeledGraph::from_generators(std::span<const Word> gens,
                                           const Alphabet& alphabet) {
  RawGraph raw{alphabet, 1, 0, {}};
  for (const Word& g : gens) {
    if (g.empty()) continue;
    if (g.alphabet_size() != alphabet.size()) throw AlphabetMismatch();
    int cur = 0;
    for (std::size_t i = 0; i < g.letters().size(); ++i) {
      int l = g.letters()[i];
      int next = i + 1 == g.letters().size()
                     ? 0
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

LabeledGraph fold(const RawGraph& raw) {
  const std::size_t n_labels = raw.alphabet.size();
  UnionFind uf(raw.vertex_count);

  // Identify equal-label edges sharing an origin or terminus, to fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    std::unordered_map<long long, int> by_origin, by_terminus;
    for (const Edge& e : raw.edges) {
      int u = uf.find(e.from), v = uf.find(e.to);
      long long okey = static_cast<long long>(u) * n_labels + e.label;
      long long tkey = static_cast<long long>(v) * n_labels + e.label;
      auto [oit, onew] = by_origin.try_emplace(okey, v);
      if (!onew && uf.find(oit->second) != v) {
        uf.merge(oit->second, v);
        changed = true;
        break;
      }
      auto [tit, tnew] = by_terminus.try_emplace(tkey, u);
      if (!tnew && uf.find(tit->second) != u) {
        uf.merge(tit->second, u);
        changed = true;
        break;
      }
    }
  }

  // Collapse to root vertices, dedup edges.
  std::set<Edge> edge_set;
  for (const Edge& e : raw.edges)
    edge_set.insert({uf.find(e.from), e.label, uf.find(e.to)});
  int base = raw.vertex_count == 0 ? 0 : uf.find(raw.base);

  // Keep only the component of the base vertex.
  std::vector<std::vector<Edge>> incident;
  auto rebuild_incident = [&]() {
    incident.assign(raw.vertex_count == 0 ? 1 : raw.vertex_count, {});
    for (const Edge& e : edge_set) {
      incident[e.from].push_back(e);
      if (e.to != e.from) incident[e.to].push_back(e);
    }
  };
  rebuild_incident();
  {
    std::vector<char> seen(incident.size(), 0);
    std::deque<int> queue{base};
    seen[base] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const Edge& e : incident[v]) {
        for (int w : {e.from, e.to})
          if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
      }
    }
    for (auto it = edge_set.begin(); it != edge_set.end();)
      it = seen[it->from] ? std::next(it) : edge_set.erase(it);
  }

  // Prune valence-1 (and isolated) non-base vertices.
  bool pruned = true;
  while (pruned) {
    pruned = false;
    rebuild_incident();
    std::vector<int> valence(incident.size(), 0);
    for (const Edge& e : edge_set) {
      valence[e.from]++;
      valence[e.to]++;
    }
    std::vector<char> alive(incident.size(), 0);
    alive[base] = 1;
    for (const Edge& e : edge_set) alive[e.from] = alive[e.to] = 1;
    for (std::size_t v = 0; v < incident.size(); ++v) {
      if (static_cast<int>(v) == base || !alive[v]) continue;
      if (valence[v] <= 1) {
        for (const Edge& e : incident[v]) edge_set.erase(e);
        pruned = true;
      }
    }
  }

  // Canonical BFS numbering: per vertex by ascending label, outgoing first.
  std::unordered_map<long long, int> out_map, in_map;
  for (const Edge& e : edge_set) {
    out_map[static_cast<long long>(e.from) * n_labels + e.label] = e.to;
    in_map[static_cast<long long>(e.to) * n_labels + e.label] = e.from;
  }
  auto lookup = [&](std::unordered_map<long long, int>& m, int v, int l) {
    auto it = m.find(static_cast<long long>(v) * n_labels + l);
    return it == m.end() ? LabeledGraph::kNone : it->second;
  };
  std::unordered_map<int, int> number;
  std::vector<int> order;
  number[base] = 0;
  order.push_back(base);
  for (std::size_t head = 0; head < order.size(); ++head) {
    int v = order[head];
    for (std::size_t l = 0; l < n_labels; ++l) {
      for (int w : {lookup(out_map, v, static_cast<int>(l)),
                    lookup(in_map, v, static_cast<int>(l))}) {
        if (w != LabeledGraph::kNone && !number.count(w)) {
          number[w] = static_cast<int>(order.size());
          order.push_back(w);
        }
      }
    }
  }

  LabeledGraph g;
  g.alphabet_ = raw.alphabet;
  g.vertex_count_ = order.size();
  g.out_.assign(g.vertex_count_, std::vector<int>(n_labels, LabeledGraph::kNone));
  g.in_.assign(g.vertex_count_, std::vector<int>(n_labels, LabeledGraph::kNone));
  for (const Edge& e : edge_set) {
    int u = number.at(e.from), v = number.at(e.to);
    g.out_[u][e.label] = v;
    g.in_[v][e.label] = u;
    g.edges_.push_back({u, e.label, v});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  return g;
}

bool LabeledGraph::member(const Word& w) const {
  if (w.empty()) return true;
  if (w.alphabet_size() != alphabet_.size()) throw AlphabetMismatch();
  int v = 0;
  for (int l : w.letters()) {
    v = l > 0 ? out_[v][l - 1] : in_[v][-l - 1];
    if (v == kNone) return false;
  }
  return v == 0;
}

std::optional<std::size_t> LabeledGraph::index() const {
  for (std::size_t v = 0; v < vertex_count_; ++v)
    for (std::size_t l = 0; l < label_count(); ++l)
      if (out_[v][l] == kNone || in_[v][l] == kNone) return std::nullopt;
  return vertex_count_;
}

std::size_t LabeledGraph::hash() const {
  std::size_t h = vertex_count_ * 1000003 + label_count();
  auto mix = [&h](std::size_t x) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  };
  for (const Edge& e : edges_) {
    mix(static_cast<std::size_t>(e.from));
    mix(static_cast<std::size_t>(e.label));
    mix(static_cast<std::size_t>(e.to));
  }
  return h;
}

std::optional<GraphMorphism> find_morphism(const LabeledGraph& source,
                                           const LabeledGraph& target) {
  if (!(source.alphabet() == target.alphabet())) throw AlphabetMismatch();
  const std::size_t n = source.label_count();
  std::vector<int> map(source.vertex_count(), LabeledGraph::kNone);
  map[0] = 0;
  std::deque<int> queue{0};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (std::size_t l = 0; l < n; ++l) {
      int w = source.out(v, static_cast<int>(l));
      if (w != LabeledGraph::kNone) {
        int tw = target.out(map[v], static_cast<int>(l));
        if (tw == LabeledGraph::kNone) return std::nullopt;
        if (map[w] == LabeledGraph::kNone) {
          map[w] = tw;
          queue.push_back(w);
        } else if (map[w] != tw) {
          return std::nullopt;
        }
      }
      int u = source.in(v, static_cast<int>(l));
      if (u != LabeledGraph::kNone) {
        int tu = target.in(map[v], static_cast<int>(l));
        if (tu == LabeledGraph::kNone) return std::nullopt;
        if (map[u] == LabeledGraph::kNone) {
          map[u] = tu;
          queue.push_back(u);
        } else if (map[u] != tu) {
          return std::nullopt;
        }
      }
    }
  }
  GraphMorphism m;
  m.vertex_map = map;
  std::vector<char> hit(target.vertex_count(), 0);
  bool injective = true;
  for (int t : map) {
    if (hit[t]) injective = false;
    hit[t] = 1;
  }
  m.injective = injective;
  bool onto_vertices =
      std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
  std::set<Edge> image_edges;
  for (const Edge& e : source.edges())
    image_edges.insert({map[e.from], e.label, map[e.to]});
  m.surjective = onto_vertices && image_edges.size() == target.edge_count();
  return m;
}

std::vector<std::size_t> spanning_tree(const LabeledGraph& graph,
                                       TreeStrategy) {
  auto edge_index = [&](Edge e) {
    auto it = std::lower_bound(graph.edges().begin(), graph.edges().end(), e);
    return static_cast<std::size_t>(it - graph.edges().begin());
  };
  std::vector<char> visited(graph.vertex_count(), 0);
  std::vector<std::size_t> tree;
  std::deque<int> queue{0};
  visited[0] = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (std::size_t l = 0; l < graph.label_count(); ++l) {
      int w = graph.out(v, static_cast<int>(l));
      if (w != LabeledGraph::kNone && !visited[w]) {
        visited[w] = 1;
        tree.push_back(edge_index({v, static_cast<int>(l), w}));
        queue.push_back(w);
      }
      int u = graph.in(v, static_cast<int>(l));
      if (u != LabeledGraph::kNone && !visited[u]) {
        visited[u] = 1;
        tree.push_back(edge_index({u, static_cast<int>(l), v}));
        queue.push_back(u);
      }
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

SchreierData schreier(const LabeledGraph& graph,
                      std::vector<std::size_t> tree_edges) {
  std::sort(tree_edges.begin(), tree_edges.end());
  if (tree_edges.size() != graph.vertex_count() - 1) throw NotASpanningTree();
  for (std::size_t i = 0; i < tree_edges.size(); ++i) {
    if (tree_edges[i] >= graph.edge_count()) throw NotASpanningTree();
    if (i > 0 && tree_edges[i] == tree_edges[i - 1]) throw NotASpanningTree();
  }

  SchreierData data;
  data.graph = graph;
  data.tree_edges = tree_edges;
  data.transversal.assign(graph.vertex_count(), Word(graph.label_count()));

  std::vector<std::vector<std::pair<int, int>>> adj(graph.vertex_count());
  for (std::size_t idx : tree_edges) {
    const Edge& e = graph.edges()[idx];
    adj[e.from].push_back({e.to, e.label + 1});
    adj[e.to].push_back({e.from, -(e.label + 1)});
  }
  std::vector<char> visited(graph.vertex_count(), 0);
  std::deque<int> queue{0};
  visited[0] = 1;
  std::size_t reached = 1;
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (auto [w, l] : adj[v]) {
      if (visited[w]) continue;
      visited[w] = 1;
      ++reached;
      std::vector<int> letters = data.transversal[v].letters();
      letters.push_back(l);
      data.transversal[w] =
          Word::from_letters(graph.label_count(), std::move(letters));
      queue.push_back(w);
    }
  }
  if (reached != graph.vertex_count()) throw NotASpanningTree();

  std::vector<char> in_tree(graph.edge_count(), 0);
  for (std::size_t idx : tree_edges) in_tree[idx] = 1;
  for (std::size_t idx = 0; idx < graph.edge_count(); ++idx) {
    if (in_tree[idx]) continue;
    const Edge& e = graph.edges()[idx];
    Word w = multiply(
        multiply(data.transversal[e.from],
                 Word::from_letters(graph.label_count(), {e.label + 1})),
        invert(data.transversal[e.to]));
    if (w.empty())
      throw CertificateFailure("empty Schreier basis word; graph not reduced");
    data.nontree_edges.push_back(idx);
    data.basis.push_back(std::move(w));
  }
  return data;
}

LabeledGraph cayley_graph(long d, const Alphabet& alphabet) {
  if (d < 1) throw Error("cayley_graph: d must be >= 1");
  const std::size_t n = alphabet.size();
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) {
    count *= static_cast<std::size_t>(d);
    if (count > 2000000) throw OrderCapExceeded(2000000);
  }
  RawGraph raw{alphabet, count, 0, {}};
  for (std::size_t v = 0; v < count; ++v) {
    std::size_t stride = 1;
    for (std::size_t i = 0; i < n; ++i) {
      std::size_t digit = (v / stride) % d;
      std::size_t w = v - digit * stride + ((digit + 1) % d) * stride;
      raw.edges.push_back({static_cast<int>(v), static_cast<int>(i),
                           static_cast<int>(w)});
      stride *= static_cast<std::size_t>(d);
    }
  }
  return fold(raw);
}

}  // namespace provar
