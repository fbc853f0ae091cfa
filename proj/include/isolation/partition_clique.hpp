#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <variant>

#include "isolation/graph.hpp"
#include "isolation/proof_gap.hpp"
#include "isolation/verify.hpp"

namespace isolation {

// Structures that drive the (k+1)-class k-clique isolating partition of a
// connected graph with maximum degree at most k, other than K_k. They are
// tested in the order listed in CliqueStructure; each later case assumes the
// earlier ones are absent from the current graph.

struct NoKk {};

/// A k-clique whose removal leaves a connected graph.
struct NonSeparatingKk {
  VertexSet clique;
};

/// A k-clique plus an outside vertex adjacent to at least two of its vertices.
struct NonInducedKkPlus {
  VertexSet clique;
  Vertex pendant = -1;
  /// Smallest clique neighbor of the pendant.
  Vertex attachment = -1;
};

/// Two disjoint k-cliques joined by at least one edge; `bridge` runs from
/// `first` to `second`.
struct DoubleKk {
  VertexSet first;
  VertexSet second;
  Edge bridge{-1, -1};
};

/// A k-clique plus an outside vertex adjacent to exactly one clique vertex.
struct InducedKkPlus {
  VertexSet clique;
  Vertex pendant = -1;
  Vertex attachment = -1;
};

using CliqueStructure = std::variant<NoKk, NonSeparatingKk, NonInducedKkPlus, DoubleKk, InducedKkPlus>;

std::string structure_name(const CliqueStructure& s);

/// Throws PreconditionError unless G is connected, k >= 3, Δ(G) <= k and G is not K_k.
void check_clique_partition_hypotheses(const Graph& g, int k);

/// First applicable structure, witnesses chosen lexicographically least.
CliqueStructure classify_structure(const Graph& g, int k);

/// A coloring with colors 1..k+1 in which every class is k-clique isolating.
/// Built recursively over classify_structure; every step is verified and a
/// failed step raises ProofGapError rather than returning a bad coloring.
/// If `tally` is given, each case visited in the recursion is counted at its
/// variant index.
using CliqueCaseTally = std::array<std::uint64_t, std::variant_size_v<CliqueStructure>>;
Coloring partition_k_clique(const Graph& g, int k, CliqueCaseTally* tally = nullptr);

class SideConditionError : public Error {
 public:
  SideConditionError(int class_index, VertexSet component, int edges)
      : Error("class " + std::to_string(class_index) + " leaves a residual component joined to the rest by " +
              std::to_string(edges) + " edges"),
        class_index_(class_index), component_(component), edges_(edges) {}
  int class_index() const { return class_index_; }
  /// Offending component, in the labels of the full graph.
  VertexSet component() const { return component_; }
  int edges() const { return edges_; }

 private:
  int class_index_;
  VertexSet component_;
  int edges_;
};

/// Glues a coloring of G[S] to a coloring of G - S (each indexed like the
/// corresponding induced_subgraph). Requires that for every class D of the
/// S-coloring, each component of G[S] - N[D] sends at most k-2 edges out of
/// S; throws SideConditionError otherwise.
Coloring compose_colorings(const Graph& g, VertexSet s, const Coloring& on_s, const Coloring& on_rest, int k);

/// The side condition above on colors already placed in `colors`, with S
/// and the rest taken inside G[scope]. Returns the first violation.
std::optional<SideConditionError> find_side_condition_violation(const Graph& g, const std::vector<int>& colors,
                                                                int classes, VertexSet scope, VertexSet s,
                                                                int max_edges);

}  // namespace isolation
