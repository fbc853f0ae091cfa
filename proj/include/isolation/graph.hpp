#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "isolation/vertex_set.hpp"

namespace isolation {

/// Base class of every error this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1 (n <= 64), one
/// adjacency bitset per vertex.
class LabeledGraphStream;

class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  /// Throws Error on an out-of-range endpoint or a self-loop. Duplicate
  /// edges collapse.
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  /// Adopts rows as the adjacency; checks symmetry, loops and range.
  static Graph from_adjacency(int n, const std::array<VertexSet, kMaxVertices>& rows);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return adj_[v].size(); }
  bool has_edge(Vertex u, Vertex v) const { return adj_[u].contains(v); }
  int max_degree() const;
  int edge_count() const;
  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph& other) const;

 private:
  friend class LabeledGraphStream;
  // Enumerator output is symmetric and loop-free by construction.
  static Graph adopt(int n, const std::array<VertexSet, kMaxVertices>& rows) {
    Graph g(n);
    g.adj_ = rows;
    return g;
  }

  int n_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

// ---------------------------------------------------------------------------
// Structural queries. The `within` overloads work on the induced subgraph
// G[within] without materializing it; vertex labels stay those of G.

VertexSet closed_neighborhood(const Graph& g, VertexSet s);
VertexSet closed_neighborhood(const Graph& g, Vertex v);

/// Edge count of G[within].
int edge_count(const Graph& g, VertexSet within);
/// Number of edges with exactly one endpoint in `part`, the other in `outside`.
int edges_between(const Graph& g, VertexSet part, VertexSet outside);

/// Vertices reachable from `start` inside G[within].
VertexSet reach(const Graph& g, Vertex start, VertexSet within);
bool is_connected(const Graph& g);
bool is_connected(const Graph& g, VertexSet within);

/// Maximal connected sets, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);
std::vector<VertexSet> components(const Graph& g, VertexSet within);

struct InducedSubgraph {
  Graph graph;
  /// to_original[i] is the vertex of the parent graph that became vertex i.
  std::vector<Vertex> to_original;
  /// from_original[v] is the new index of v, or -1 if v was dropped.
  std::vector<Vertex> from_original;
};

/// G[s], with members of s renumbered in increasing order.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);

/// Lexicographically least k-clique, if any. k >= 1.
std::optional<VertexSet> find_k_clique(const Graph& g, int k);
std::optional<VertexSet> find_k_clique(const Graph& g, int k, VertexSet within);

/// Every k-clique of G[within], in lexicographic order.
std::vector<VertexSet> all_k_cliques(const Graph& g, int k, VertexSet within);

/// First cycle met by a DFS that starts at the smallest vertex and scans
/// neighbors in increasing order; returned in path order.
std::optional<std::vector<Vertex>> find_cycle(const Graph& g);
std::optional<std::vector<Vertex>> find_cycle(const Graph& g, VertexSet within);

/// True iff G[within] is a forest (|E| = |V| - #components), no witness.
bool is_forest(const Graph& g, VertexSet within);

bool is_claw_free(const Graph& g);
/// True iff the vertex v has three pairwise non-adjacent neighbors in G[within].
bool is_claw_center(const Graph& g, Vertex v, VertexSet within);

/// Shortest cycle of G[within] as a vertex list; ties go to the cycle found
/// from the smallest start vertex.
std::optional<std::vector<Vertex>> shortest_cycle(const Graph& g, VertexSet within);

enum class GraphFamily { Path, Cycle, CompleteGraph, Star, Tree, Other };

std::string to_string(GraphFamily family);

struct GraphFamilyTag {
  GraphFamily family = GraphFamily::Other;
  int order = 0;
  /// Set when the graph is K_3, which is also C_3.
  bool is_also_c3 = false;
};

GraphFamilyTag recognize(const Graph& g);

bool is_complete(const Graph& g, VertexSet within);
/// G[within] is a single cycle (connected, 2-regular, at least 3 vertices).
bool is_cycle_graph(const Graph& g, VertexSet within);

// Small named graphs used across tests and examples.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int n);
Graph petersen_graph();
/// Two disjoint K_k on {0..k-1} and {k..2k-1} joined by the edge (k-1, k).
Graph double_clique(int k);
/// Disjoint union; vertices of b are shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);

}  // namespace isolation
