#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "isolation/graph.hpp"

namespace isolation {

struct EnumerationFilter {
  bool connected = false;
  /// Negative means unbounded.
  int max_degree = -1;
  bool claw_free = false;
};

/// Largest order enumerated without a degree filter, and with one (Δ <= 4).
inline constexpr int kMaxEnumerationOrder = 7;
inline constexpr int kMaxFilteredEnumerationOrder = 10;
inline constexpr int kMaxFilteredEnumerationDegree = 4;

/// Every labeled simple graph on n vertices passing the filter, each exactly
/// once. Vertices are added in index order; vertex v picks its neighbors
/// among 0..v-1, so the degree and claw-free filters prune whole subtrees.
/// Single consumer.
class LabeledGraphStream {
 public:
  LabeledGraphStream(int n, EnumerationFilter filter);

  std::optional<Graph> next();

  int order() const { return n_; }
  const EnumerationFilter& filter() const { return filter_; }

 private:
  struct Level {
    std::uint64_t available = 0;
    std::uint64_t choice = 0;
    bool fresh = true;
  };

  bool advance(int v);
  void apply(int v, std::uint64_t choice);
  void retract(int v);
  bool prefix_ok(int v) const;

  int n_;
  EnumerationFilter filter_;
  int depth_ = 0;
  bool done_ = false;
  std::array<Level, kMaxFilteredEnumerationOrder> levels_{};
  std::array<VertexSet, kMaxVertices> adj_{};
};

}  // namespace isolation
