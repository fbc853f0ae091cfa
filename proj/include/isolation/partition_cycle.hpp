#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "isolation/exact.hpp"
#include "isolation/graph.hpp"
#include "isolation/proof_gap.hpp"
#include "isolation/verify.hpp"

namespace isolation {

using Cycle = std::vector<Vertex>;

inline constexpr std::size_t kCycleBudget = 1'000'000;

/// Calls `visit` on every simple cycle of G[within] once, in canonical form
/// (least vertex first, then its smaller cycle neighbor), ordered by DFS from
/// increasing start vertices. Stops early when `visit` returns true; returns
/// whether it stopped. Throws SearchAbortedError past `max_count` cycles.
bool for_each_cycle(const Graph& g, VertexSet within, const std::function<bool(const Cycle&)>& visit,
                    std::size_t max_count = kCycleBudget);

std::vector<Cycle> enumerate_cycles(const Graph& g, std::size_t max_count = kCycleBudget);
std::vector<Cycle> enumerate_cycles(const Graph& g, VertexSet within, std::size_t max_count = kCycleBudget);

/// A 4-cycle a,x,b,y with a least and x < y, scanning a then b upward.
std::optional<Cycle> find_four_cycle(const Graph& g, VertexSet within);

/// No chords: consecutive vertices adjacent, no other pairs adjacent.
bool is_induced_cycle(const Graph& g, const Cycle& c);

// Structures driving the 4-class cycle isolating partition of a connected
// claw-free subcubic graph other than C_3, in the order they are tested.

struct BaseCase {
  enum class Shape { Path, Cycle, K4 };
  Shape shape = Shape::Path;
  /// Cycle order for Shape::Cycle, empty otherwise.
  Cycle cycle;
};

/// A cycle (not necessarily induced) whose length is a multiple of 4.
struct Mod4Cycle {
  Cycle cycle;
};

/// Induced cycle of length at least 4 with at most two edges to the rest.
struct SparselyAttachedInducedCycle {
  Cycle cycle;
  /// (cycle vertex, outside vertex).
  std::vector<Edge> attachments;
};

/// Induced cycle of length 4t+1, t >= 2.
struct Mod4Plus1InducedCycle {
  Cycle cycle;
  std::vector<Edge> attachments;
};

struct InducedC5 {
  Cycle cycle;
  std::vector<Edge> attachments;
};

struct NonSeparatingTriangle {
  VertexSet triangle;
};

/// Two disjoint triangles joined by `bridge` (first endpoint in `first`).
struct DoubleTriangle {
  VertexSet first;
  VertexSet second;
  Edge bridge{-1, -1};
};

/// Triangle plus a pendant vertex adjacent to `attachment`.
struct TrianglePlus {
  VertexSet triangle;
  Vertex pendant = -1;
  Vertex attachment = -1;
};

/// Nothing above applies; the construction has no case for this graph.
struct ProofContradiction {};

using CycleStructure =
    std::variant<BaseCase, Mod4Cycle, SparselyAttachedInducedCycle, Mod4Plus1InducedCycle, InducedC5,
                 NonSeparatingTriangle, DoubleTriangle, TrianglePlus, ProofContradiction>;

std::string structure_name(const CycleStructure& s);

/// Throws PreconditionError unless G is connected, claw-free, subcubic and not C_3.
void check_cycle_partition_hypotheses(const Graph& g);

CycleStructure classify_cycle_structure(const Graph& g);

using CycleCaseTally = std::array<std::uint64_t, std::variant_size_v<CycleStructure>>;

/// A coloring with colors 1..4 in which every class is cycle isolating. Every
/// recursion step is verified; failures raise ProofGapError.
Coloring partition_cycle(const Graph& g, CycleCaseTally* tally = nullptr);

/// "1,2,3,4" repeated over `length` vertices, then `tail` appended; the
/// colors the construction lays along a cycle.
std::vector<int> repeating_pattern(int length, const std::vector<int>& tail = {});

}  // namespace isolation
