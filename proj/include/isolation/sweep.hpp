#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "isolation/enumerate.hpp"
#include "isolation/graph.hpp"
#include "isolation/report.hpp"

namespace isolation {

enum class CheckKind { Theorem, Construction, Conjecture };
enum class CheckVerdict { Pass, Fail, Vacuous, Aborted };

std::string to_string(CheckKind kind);
std::string to_string(CheckVerdict verdict);

struct CheckResult {
  std::string name;
  CheckKind kind = CheckKind::Theorem;
  CheckVerdict verdict = CheckVerdict::Vacuous;
  std::string details;
  /// Re-checkable evidence; see reverify().
  Json witness;
};

struct GraphRecord {
  std::size_t index = 0;
  std::string graph6;
  int n = 0;
  std::vector<CheckResult> checks;
};

struct RunConfig {
  /// Graph file ("-" for stdin); empty means built-in enumeration of gen_n.
  std::string input_path;
  int gen_n = 0;
  EnumerationFilter filter;
  /// Check names or the groups "bounds", "partitions", "conjectures", "all".
  std::vector<std::string> checks{"all"};
  std::vector<int> k_values{3};
  std::uint64_t budget = 50'000'000;
  int iota_max_order = 32;
  int iso_max_order = 12;
  int jobs = 1;
  /// Keep only records that contain a FAIL or ABORTED check.
  bool summary = false;
};

/// {"name", "kind", "verdict", "details", "witness"}, as stored in reports.
Json to_json(const CheckResult& result);
CheckResult check_result_from_json(const Json& j);

/// Expands groups into check names; throws Error on an unknown name or k < 3.
std::vector<std::string> resolve_checks(const RunConfig& config);

/// The resolved checks on one graph. Never throws for per-graph trouble;
/// aborts and construction gaps become verdicts.
std::vector<CheckResult> run_checks(const Graph& g, const RunConfig& config, const std::vector<std::string>& checks);

/// Soundness gate: recomputes the verdict from the stored witness alone.
bool reverify(const Graph& g, const CheckResult& result);

struct Aggregate {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t vacuous = 0;
  std::uint64_t aborted = 0;
  void add(CheckVerdict verdict);
};

struct Counterexample {
  std::size_t index = 0;
  std::string graph6;
  std::string check;
  CheckKind kind = CheckKind::Theorem;
  std::string details;
  Json witness;
};

struct SweepReport {
  RunConfig config;
  std::vector<std::string> checks;
  std::string timestamp;
  std::uint64_t graphs = 0;
  std::vector<GraphRecord> results;
  std::vector<Counterexample> counterexamples;
  Aggregate aggregate;

  bool conjecture_failed() const;
};

using GraphSource = std::function<std::optional<Graph>()>;

/// Source described by the config: a graph file or built-in enumeration.
GraphSource make_source(const RunConfig& config);

/// Runs the checks over every graph of `source` with config.jobs workers.
/// Records come back in input order whatever the worker count.
SweepReport run_sweep(const RunConfig& config, const GraphSource& source);
SweepReport run_sweep(const RunConfig& config);

Json to_json(const RunConfig& config);
/// {config, checks, timestamp, graphs, results, counterexamples, aggregate, conjectures}.
Json to_json(const SweepReport& report);
/// One row per check; aggregate counts on trailing '#' lines.
std::string to_tsv(const SweepReport& report);

}  // namespace isolation
