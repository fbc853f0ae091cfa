#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "isolation/graph.hpp"
#include "isolation/verify.hpp"

namespace isolation {

/// Guard for the exponential searches. A search that would exceed either
/// limit stops and reports Aborted instead of returning a number.
struct SearchBudget {
  int max_order = 32;
  std::uint64_t max_nodes = 50'000'000;
};

inline constexpr SearchBudget kIotaBudget{32, 50'000'000};
inline constexpr SearchBudget kIsomaticBudget{12, 50'000'000};

enum class SearchStatus { Solved, Aborted };

class SearchAbortedError : public Error {
 public:
  using Error::Error;
};

/// Minimum isolating set.
struct IsolationNumberResult {
  SearchStatus status = SearchStatus::Aborted;
  int value = 0;
  VertexSet witness;
  std::uint64_t nodes = 0;
  std::string abort_reason;

  bool solved() const { return status == SearchStatus::Solved; }
};

/// Maximum weak partition into isolating classes. When G holds no target
/// pattern every class (even an empty one) isolates, so the maximum is
/// unbounded; `value` is then n (the singleton partition) and `unbounded` set.
struct IsomaticResult {
  SearchStatus status = SearchStatus::Aborted;
  int value = 0;
  bool unbounded = false;
  Coloring witness;
  std::uint64_t nodes = 0;
  std::string abort_reason;

  bool solved() const { return status == SearchStatus::Solved; }
  /// iso >= bound, counting an unbounded result as large enough.
  bool at_least(int bound) const { return unbounded || value >= bound; }
};

/// Iterative deepening on |D|. At each node a surviving pattern P of
/// G - N[D] is picked (smallest closed neighborhood first) and the search
/// branches on the vertices of N[V(P)], since every isolating set meets it.
IsolationNumberResult min_isolating(const Graph& g, const TargetPattern& t, SearchBudget budget = kIotaBudget);

IsomaticResult max_isomatic(const Graph& g, const TargetPattern& t, SearchBudget budget = kIsomaticBudget);

struct PartitionSearchResult {
  SearchStatus status = SearchStatus::Aborted;
  std::optional<Coloring> coloring;
  std::uint64_t nodes = 0;
};

/// A weak partition of V(G) into exactly `classes` isolating sets, if one
/// exists. Classes are opened in first-use order.
PartitionSearchResult find_isomatic_partition(const Graph& g, const TargetPattern& t, int classes,
                                              SearchBudget budget = kIsomaticBudget);

/// k classes, each k-clique isolating: repeatedly strip the least k-clique and
/// deal its vertices to classes 1..k; the clique-free rest goes to class k.
Coloring clique_isomatic_k_partition(const Graph& g, int k);

/// Three classes, each cycle isolating, built per component: forests go to
/// class 3, a cycle gets one vertex in each class, any other component uses an
/// isolating 3-partition found by exact search. Throws SearchAbortedError if
/// that search runs out of budget.
Coloring cycle_isomatic_3_partition(const Graph& g, SearchBudget budget = {24, 50'000'000});

enum class BoundStatus { Holds, Vacuous, Violated, Aborted };

std::string to_string(BoundStatus status);

struct IsoIotaBound {
  BoundStatus status = BoundStatus::Aborted;
  int iso = 0;
  int iota = 0;
  int order = 0;

  bool holds() const { return status == BoundStatus::Holds || status == BoundStatus::Vacuous; }
};

/// iso(G,t) * iota(G,t) <= n. Vacuous when G has no t-pattern (iota = 0).
IsoIotaBound check_iso_iota_bound(const Graph& g, const TargetPattern& t, SearchBudget iota_budget = kIotaBudget,
                                  SearchBudget iso_budget = kIsomaticBudget);

}  // namespace isolation
