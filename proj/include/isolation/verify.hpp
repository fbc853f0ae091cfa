#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "isolation/graph.hpp"

namespace isolation {

/// The pattern that must be absent from G - N[D]. KClique(1) is domination,
/// KClique(2) plain isolation.
class TargetPattern {
 public:
  enum class Kind { KClique, AnyCycle };

  static TargetPattern clique(int k);
  static TargetPattern cycle() { return TargetPattern(Kind::AnyCycle, 0); }
  static TargetPattern dominate() { return clique(1); }
  static TargetPattern edge() { return clique(2); }
  /// "kclique:<k>", "cycle" or "dominate".
  static TargetPattern parse(std::string_view text);

  Kind kind() const { return kind_; }
  /// Clique order; 0 for AnyCycle.
  int k() const { return k_; }
  bool is_cycle() const { return kind_ == Kind::AnyCycle; }
  std::string to_string() const;

  bool operator==(const TargetPattern&) const = default;

 private:
  TargetPattern(Kind kind, int k) : kind_(kind), k_(k) {}
  Kind kind_;
  int k_;
};

/// Total map vertex -> color in 1..m. Classes may be empty.
class Coloring {
 public:
  Coloring() = default;
  /// Throws Error if a color falls outside 1..classes.
  Coloring(std::vector<int> colors, int classes);
  /// Every vertex gets `color`.
  static Coloring uniform(int n, int classes, int color);

  int classes() const { return classes_; }
  int size() const { return static_cast<int>(colors_.size()); }
  int operator[](Vertex v) const { return colors_[v]; }
  const std::vector<int>& colors() const { return colors_; }
  VertexSet color_class(int color) const;

  bool operator==(const Coloring&) const = default;

 private:
  std::vector<int> colors_;
  int classes_ = 0;
};

enum class Verdict { Pass, Fail };

std::string to_string(Verdict verdict);

/// Outcome of a verification. On failure, `class_index` names the failing
/// class (1-based; 0 for a single-set check) and `witness` holds the surviving
/// clique (sorted) or cycle (in cycle order), in the input graph's labels.
struct Certificate {
  Verdict verdict = Verdict::Pass;
  int class_index = 0;
  std::vector<Vertex> witness;
  TargetPattern target = TargetPattern::cycle();

  bool passed() const { return verdict == Verdict::Pass; }
};

/// Vertices of G - N[D].
VertexSet residual_vertices(const Graph& g, VertexSet d);

/// G - N[D] as a standalone graph with its index map.
InducedSubgraph residual(const Graph& g, VertexSet d);

/// A target pattern inside G[within], or nothing.
std::optional<std::vector<Vertex>> find_pattern(const Graph& g, const TargetPattern& t, VertexSet within);
/// Cheaper existence test; same answer as find_pattern(...).has_value().
bool has_pattern(const Graph& g, const TargetPattern& t, VertexSet within);

Certificate is_isolating(const Graph& g, VertexSet d, const TargetPattern& t);
Certificate verify_partition(const Graph& g, const Coloring& c, const TargetPattern& t);
bool is_dominating(const Graph& g, VertexSet d);

/// verify_partition on the induced subgraph G[scope]: colors are read only for
/// members of scope and neighborhoods are taken inside G[scope].
Certificate verify_partition_within(const Graph& g, const std::vector<int>& colors, int classes, VertexSet scope,
                                    const TargetPattern& t);

/// Re-checks a failure witness from scratch: its vertices avoid N[class] and
/// form the claimed clique or cycle. Does not reuse the search routines.
bool witness_is_valid(const Graph& g, const Coloring& c, const Certificate& cert);
bool witness_is_valid(const Graph& g, VertexSet d, const Certificate& cert);

}  // namespace isolation
