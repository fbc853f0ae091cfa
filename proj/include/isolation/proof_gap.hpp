#pragma once

#include <string>
#include <vector>

#include "isolation/graph.hpp"
#include "isolation/verify.hpp"

namespace isolation {

/// The input falls outside the hypotheses of a partition construction.
class PreconditionError : public Error {
 public:
  enum class Hypothesis { Disconnected, DegreeTooLarge, ExcludedGraph, NotClawFree, CliqueOrderTooSmall };

  PreconditionError(Hypothesis hypothesis, const std::string& what) : Error(what), hypothesis_(hypothesis) {}
  Hypothesis hypothesis() const { return hypothesis_; }

 private:
  Hypothesis hypothesis_;
};

/// Evidence that a construction step did not deliver what its argument
/// promises: the graph it ran on, the coloring it produced and the failing
/// verification. Never swallowed; a sweep that meets one fails.
struct ProofGapReport {
  std::string graph6;
  /// Clique order for clique partitions, 0 for cycle partitions.
  int k = 0;
  /// Construction case that was running.
  std::string stage;
  std::string detail;
  /// Vertex set of the subgraph the failing step worked on.
  VertexSet scope;
  std::vector<int> coloring;
  Certificate failure;
};

class ProofGapError : public Error {
 public:
  explicit ProofGapError(ProofGapReport report)
      : Error("construction gap in " + report.stage + ": " + report.detail + " (graph " + report.graph6 + ")"),
        report_(std::move(report)) {}
  const ProofGapReport& report() const { return report_; }

 private:
  ProofGapReport report_;
};

}  // namespace isolation
