#include "isolation/graph.hpp"

#include <algorithm>
#include <limits>

namespace isolation {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw Error("graph order " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
  }
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw Error("edge endpoint out of range: " + std::to_string(u) + " " + std::to_string(v));
    }
    if (u == v) throw Error("self-loop at vertex " + std::to_string(u));
    g.adj_[u].insert(v);
    g.adj_[v].insert(u);
  }
  return g;
}

Graph Graph::from_adjacency(int n, const std::array<VertexSet, kMaxVertices>& rows) {
  Graph g(n);
  const VertexSet all = VertexSet::range(n);
  for (Vertex v = 0; v < kMaxVertices; ++v) {
    if (v >= n) {
      if (!rows[v].empty()) throw Error("adjacency row beyond graph order");
      continue;
    }
    if (!rows[v].is_subset_of(all)) throw Error("neighbor out of range");
    if (rows[v].contains(v)) throw Error("self-loop at vertex " + std::to_string(v));
    for (Vertex u : rows[v]) {
      if (!rows[u].contains(v)) throw Error("asymmetric adjacency");
    }
  }
  g.adj_ = rows;
  return g;
}

int Graph::max_degree() const {
  int best = 0;
  for (Vertex v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

int Graph::edge_count() const { return isolation::edge_count(*this, vertices()); }

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : adj_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
  }
  return out;
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_) return false;
  for (Vertex v = 0; v < n_; ++v) {
    if (adj_[v] != other.adj_[v]) return false;
  }
  return true;
}

VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
  VertexSet out = s;
  for (Vertex v : s) out |= g.neighbors(v);
  return out;
}

VertexSet closed_neighborhood(const Graph& g, Vertex v) {
  return g.neighbors(v) | VertexSet::single(v);
}

int edge_count(const Graph& g, VertexSet within) {
  int twice = 0;
  for (Vertex v : within) twice += (g.neighbors(v) & within).size();
  return twice / 2;
}

int edges_between(const Graph& g, VertexSet part, VertexSet outside) {
  int count = 0;
  for (Vertex v : part) count += (g.neighbors(v) & (outside - part)).size();
  return count;
}

VertexSet reach(const Graph& g, Vertex start, VertexSet within) {
  VertexSet seen = VertexSet::single(start);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbors(v);
    next = (next & within) - seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

bool is_connected(const Graph& g, VertexSet within) {
  if (within.empty()) return true;
  return reach(g, within.first(), within) == within;
}

std::vector<VertexSet> components(const Graph& g) { return components(g, g.vertices()); }

std::vector<VertexSet> components(const Graph& g, VertexSet within) {
  std::vector<VertexSet> out;
  VertexSet rest = within;
  while (!rest.empty()) {
    VertexSet comp = reach(g, rest.first(), within);
    out.push_back(comp);
    rest -= comp;
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
  InducedSubgraph out;
  out.to_original = s.to_vector();
  out.from_original.assign(g.order(), -1);
  for (std::size_t i = 0; i < out.to_original.size(); ++i) {
    out.from_original[out.to_original[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) {
    if (s.contains(u) && s.contains(v)) edges.emplace_back(out.from_original[u], out.from_original[v]);
  }
  out.graph = Graph::from_edges(static_cast<int>(out.to_original.size()), edges);
  return out;
}

namespace {

// Extends `chosen` by vertices of `candidates` (all adjacent to every chosen
// vertex) in increasing order. Returns false when the visitor asks to stop.
template <typename Visit>
bool extend_clique(const Graph& g, int k, VertexSet chosen, VertexSet candidates, Visit& visit) {
  if (chosen.size() == k) return visit(chosen);
  const int missing = k - chosen.size();
  while (candidates.size() >= missing) {
    Vertex v = candidates.first();
    candidates.erase(v);
    VertexSet grown = chosen;
    grown.insert(v);
    if (!extend_clique(g, k, grown, candidates & g.neighbors(v), visit)) return false;
  }
  return true;
}

}  // namespace

std::optional<VertexSet> find_k_clique(const Graph& g, int k) {
  return find_k_clique(g, k, g.vertices());
}

std::optional<VertexSet> find_k_clique(const Graph& g, int k, VertexSet within) {
  if (k < 1) throw Error("clique size must be positive");
  std::optional<VertexSet> found;
  auto visit = [&](VertexSet clique) {
    found = clique;
    return false;
  };
  extend_clique(g, k, VertexSet{}, within, visit);
  return found;
}

std::vector<VertexSet> all_k_cliques(const Graph& g, int k, VertexSet within) {
  if (k < 1) throw Error("clique size must be positive");
  std::vector<VertexSet> out;
  auto visit = [&](VertexSet clique) {
    out.push_back(clique);
    return true;
  };
  extend_clique(g, k, VertexSet{}, within, visit);
  return out;
}

std::optional<std::vector<Vertex>> find_cycle(const Graph& g) { return find_cycle(g, g.vertices()); }

std::optional<std::vector<Vertex>> find_cycle(const Graph& g, VertexSet within) {
  std::array<Vertex, kMaxVertices> parent{};
  std::array<VertexSet, kMaxVertices> pending{};
  VertexSet visited;
  std::vector<Vertex> stack;
  for (Vertex root : within) {
    if (visited.contains(root)) continue;
    visited.insert(root);
    parent[root] = -1;
    pending[root] = g.neighbors(root) & within;
    stack.assign(1, root);
    while (!stack.empty()) {
      Vertex v = stack.back();
      if (pending[v].empty()) {
        stack.pop_back();
        continue;
      }
      Vertex w = pending[v].first();
      pending[v].erase(w);
      if (w == parent[v]) continue;
      if (visited.contains(w)) {
        // w is an ancestor of v on the stack.
        auto it = std::find(stack.begin(), stack.end(), w);
        return std::vector<Vertex>(it, stack.end());
      }
      visited.insert(w);
      parent[w] = v;
      pending[w] = g.neighbors(w) & within;
      stack.push_back(w);
    }
  }
  return std::nullopt;
}

bool is_forest(const Graph& g, VertexSet within) {
  return edge_count(g, within) == within.size() - static_cast<int>(components(g, within).size());
}

bool is_claw_center(const Graph& g, Vertex v, VertexSet within) {
  const VertexSet nbrs = g.neighbors(v) & within;
  if (nbrs.size() < 3) return false;
  for (Vertex a : nbrs) {
    VertexSet after_a = nbrs - VertexSet::range(a + 1) - g.neighbors(a);
    for (Vertex b : after_a) {
      VertexSet third = after_a - VertexSet::range(b + 1) - g.neighbors(b);
      if (!third.empty()) return true;
    }
  }
  return false;
}

bool is_claw_free(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (is_claw_center(g, v, g.vertices())) return false;
  }
  return true;
}

std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g, VertexSet within) {
  int best = std::numeric_limits<int>::max();
  std::vector<Vertex> best_cycle;
  std::array<int, kMaxVertices> dist{};
  std::array<Vertex, kMaxVertices> parent{};
  for (Vertex s : within) {
    dist.fill(-1);
    dist[s] = 0;
    parent[s] = -1;
    std::vector<Vertex> queue{s};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      if (2 * dist[x] + 1 >= best) break;
      for (Vertex y : g.neighbors(x) & within) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (y != parent[x] && dist[y] >= dist[x]) {
          int length = dist[x] + dist[y] + 1;
          if (length < best) {
            best = length;
            std::vector<Vertex> left, right;
            for (Vertex t = x; t != -1; t = parent[t]) left.push_back(t);
            for (Vertex t = y; t != s; t = parent[t]) right.push_back(t);
            std::reverse(left.begin(), left.end());
            left.insert(left.end(), right.begin(), right.end());
            best_cycle = std::move(left);
          }
        }
      }
    }
  }
  if (best_cycle.empty()) return std::nullopt;
  return best_cycle;
}

std::string to_string(GraphFamily family) {
  switch (family) {
    case GraphFamily::Path: return "path";
    case GraphFamily::Cycle: return "cycle";
    case GraphFamily::CompleteGraph: return "complete";
    case GraphFamily::Star: return "star";
    case GraphFamily::Tree: return "tree";
    case GraphFamily::Other: return "other";
  }
  return "other";
}

bool is_complete(const Graph& g, VertexSet within) {
  for (Vertex v : within) {
    if ((g.neighbors(v) & within) != within - VertexSet::single(v)) return false;
  }
  return true;
}

bool is_cycle_graph(const Graph& g, VertexSet within) {
  if (within.size() < 3) return false;
  for (Vertex v : within) {
    if ((g.neighbors(v) & within).size() != 2) return false;
  }
  return is_connected(g, within);
}

GraphFamilyTag recognize(const Graph& g) {
  const int n = g.order();
  GraphFamilyTag tag{GraphFamily::Other, n, false};
  if (n == 0 || !is_connected(g)) return tag;
  const VertexSet all = g.vertices();
  if (n == 1) {
    tag.family = GraphFamily::Tree;
    return tag;
  }
  if (n >= 3 && is_complete(g, all)) {
    tag.family = GraphFamily::CompleteGraph;
    tag.is_also_c3 = n == 3;
    return tag;
  }
  if (is_cycle_graph(g, all)) {
    tag.family = GraphFamily::Cycle;
    return tag;
  }
  if (g.edge_count() == n - 1) {
    const int delta = g.max_degree();
    if (delta <= 2) {
      tag.family = GraphFamily::Path;
    } else if (delta == n - 1) {
      tag.family = GraphFamily::Star;
    } else {
      tag.family = GraphFamily::Tree;
    }
  }
  return tag;
}

Graph path_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

Graph star_graph(int n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  return Graph::from_edges(n, edges);
}

Graph petersen_graph() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, edges);
}

Graph double_clique(int k) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) {
      edges.emplace_back(u, v);
      edges.emplace_back(k + u, k + v);
    }
  }
  edges.emplace_back(k - 1, k);
  return Graph::from_edges(2 * k, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (auto [u, v] : b.edges()) edges.emplace_back(u + a.order(), v + a.order());
  return Graph::from_edges(a.order() + b.order(), edges);
}

}  // namespace isolation
