#include "isolation/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <ctime>
#include <iostream>
#include <memory>
#include <sstream>
#include <thread>

#include "isolation/exact.hpp"
#include "isolation/graph_io.hpp"
#include "isolation/partition_clique.hpp"
#include "isolation/partition_cycle.hpp"
#include "isolation/planarity.hpp"

namespace isolation {

namespace {

const std::vector<std::string> kBoundChecks{"iota_bound", "iota_k_bound", "iota_c_bound", "iso_iota_product"};
const std::vector<std::string> kPartitionChecks{"clique_partition", "cycle_partition", "clique_isomatic_k",
                                                "cycle_isomatic_3"};
const std::vector<std::string> kConjectureChecks{"conj_clique_isomatic", "conj_cycle_isomatic", "conj_planar_cycle"};

bool is_exactly(const Graph& g, GraphFamily family, int order) {
  if (g.order() != order) return false;
  if (family == GraphFamily::CompleteGraph) return is_complete(g, g.vertices());
  if (family == GraphFamily::Cycle) return is_cycle_graph(g, g.vertices());
  return false;
}

CheckResult vacuous(std::string name, CheckKind kind, std::string why) {
  return CheckResult{std::move(name), kind, CheckVerdict::Vacuous, std::move(why), Json(nullptr)};
}

CheckResult aborted(std::string name, CheckKind kind, std::string why) {
  return CheckResult{std::move(name), kind, CheckVerdict::Aborted, std::move(why), Json(nullptr)};
}

std::string with_k(const std::string& base, int k) { return base + "[k=" + std::to_string(k) + "]"; }

// factor * iota <= n on connected graphs outside the exceptions.
CheckResult iota_bound_check(const Graph& g, const RunConfig& config, std::string name, const TargetPattern& t,
                             int factor, const std::string& exception) {
  CheckResult r;
  r.name = std::move(name);
  r.kind = CheckKind::Theorem;
  if (g.order() == 0 || !is_connected(g)) return vacuous(r.name, r.kind, "outside hypotheses: disconnected");
  if (!exception.empty()) return vacuous(r.name, r.kind, "outside hypotheses: input is " + exception);
  IsolationNumberResult iota = min_isolating(g, t, {config.iota_max_order, config.budget});
  if (!iota.solved()) return aborted(r.name, r.kind, iota.abort_reason);
  r.verdict = factor * iota.value <= g.order() ? CheckVerdict::Pass : CheckVerdict::Fail;
  r.details = "iota=" + std::to_string(iota.value) + " n=" + std::to_string(g.order()) + " need " +
              std::to_string(factor) + "*iota<=n";
  r.witness = Json{{"target", to_json(t)}, {"set", to_json(iota.witness)}, {"value", iota.value}, {"factor", factor}};
  return r;
}

CheckResult iso_iota_check(const Graph& g, const RunConfig& config, const TargetPattern& t) {
  CheckResult r;
  r.name = "iso_iota_product[" + t.to_string() + "]";
  r.kind = CheckKind::Theorem;
  if (g.order() > config.iso_max_order) {
    return aborted(r.name, r.kind, "order " + std::to_string(g.order()) + " above isomatic search limit");
  }
  IsolationNumberResult iota = min_isolating(g, t, {config.iota_max_order, config.budget});
  if (!iota.solved()) return aborted(r.name, r.kind, iota.abort_reason);
  if (iota.value == 0) return vacuous(r.name, r.kind, "pattern-free graph: iota=0, iso unbounded");
  IsomaticResult iso = max_isomatic(g, t, {config.iso_max_order, config.budget});
  if (!iso.solved()) return aborted(r.name, r.kind, iso.abort_reason);
  r.verdict = iso.value * iota.value <= g.order() ? CheckVerdict::Pass : CheckVerdict::Fail;
  r.details = "iso=" + std::to_string(iso.value) + " iota=" + std::to_string(iota.value) +
              " n=" + std::to_string(g.order());
  r.witness = Json{{"target", to_json(t)},
                   {"set", to_json(iota.witness)},
                   {"value", iota.value},
                   {"coloring", to_json(iso.witness)},
                   {"product_limit", g.order()}};
  return r;
}

CheckResult coloring_result(std::string name, CheckKind kind, const Graph& g, const Coloring& c,
                            const TargetPattern& t, std::string details) {
  CheckResult r;
  r.name = std::move(name);
  r.kind = kind;
  Certificate cert = verify_partition(g, c, t);
  r.verdict = cert.passed() ? CheckVerdict::Pass : CheckVerdict::Fail;
  r.details = std::move(details);
  r.witness = Json{{"target", to_json(t)}, {"coloring", to_json(c)}, {"certificate", to_json(cert)}};
  return r;
}

CheckResult gap_result(std::string name, CheckKind kind, const ProofGapError& e) {
  const ProofGapReport& report = e.report();
  CheckResult r;
  r.name = std::move(name);
  r.kind = kind;
  r.verdict = CheckVerdict::Fail;
  r.details = e.what();
  r.witness = Json{{"target", to_json(report.failure.target)}, {"proof_gap", to_json(report)}};
  return r;
}

CheckResult clique_partition_check(const Graph& g, int k) {
  const std::string name = with_k("clique_partition", k);
  try {
    check_clique_partition_hypotheses(g, k);
  } catch (const PreconditionError& e) {
    return vacuous(name, CheckKind::Construction, std::string("outside hypotheses: ") + e.what());
  }
  try {
    return coloring_result(name, CheckKind::Construction, g, partition_k_clique(g, k), TargetPattern::clique(k),
                           "constructed " + std::to_string(k + 1) + "-class partition");
  } catch (const ProofGapError& e) {
    return gap_result(name, CheckKind::Construction, e);
  } catch (const SearchAbortedError& e) {
    return aborted(name, CheckKind::Construction, e.what());
  }
}

CheckResult cycle_partition_check(const Graph& g) {
  const std::string name = "cycle_partition";
  try {
    check_cycle_partition_hypotheses(g);
  } catch (const PreconditionError& e) {
    return vacuous(name, CheckKind::Construction, std::string("outside hypotheses: ") + e.what());
  }
  try {
    return coloring_result(name, CheckKind::Construction, g, partition_cycle(g), TargetPattern::cycle(),
                           "constructed 4-class partition");
  } catch (const ProofGapError& e) {
    return gap_result(name, CheckKind::Construction, e);
  } catch (const SearchAbortedError& e) {
    return aborted(name, CheckKind::Construction, e.what());
  }
}

CheckResult cycle_isomatic_3_check(const Graph& g, const RunConfig& config) {
  const std::string name = "cycle_isomatic_3";
  try {
    Coloring c = cycle_isomatic_3_partition(g, {std::min(config.iso_max_order * 2, 64), config.budget});
    return coloring_result(name, CheckKind::Construction, g, c, TargetPattern::cycle(), "constructed 3-class partition");
  } catch (const SearchAbortedError& e) {
    return aborted(name, CheckKind::Construction, e.what());
  } catch (const Error& e) {
    CheckResult r{name, CheckKind::Construction, CheckVerdict::Fail, e.what(), Json(nullptr)};
    return r;
  }
}

// Conjectured partition into `classes` isolating sets. A construction is tried
// first when its hypotheses hold; otherwise exact search.
CheckResult conjecture_check(const Graph& g, const RunConfig& config, std::string name, const TargetPattern& t,
                             int classes) {
  const std::optional<Coloring> built = [&]() -> std::optional<Coloring> {
    try {
      if (t.is_cycle()) return partition_cycle(g);
      return partition_k_clique(g, t.k());
    } catch (const Error&) {
      return std::nullopt;
    }
  }();
  if (built && verify_partition(g, *built, t).passed()) {
    return coloring_result(std::move(name), CheckKind::Conjecture, g, *built, t,
                           "consistent: construction gives " + std::to_string(classes) + " classes");
  }
  if (g.order() > config.iso_max_order) {
    return aborted(std::move(name), CheckKind::Conjecture,
                   "order " + std::to_string(g.order()) + " above isomatic search limit");
  }
  PartitionSearchResult found = find_isomatic_partition(g, t, classes, {config.iso_max_order, config.budget});
  if (found.status == SearchStatus::Aborted) {
    return aborted(std::move(name), CheckKind::Conjecture, "node budget exhausted");
  }
  if (found.coloring) {
    return coloring_result(std::move(name), CheckKind::Conjecture, g, *found.coloring, t,
                           "consistent: exact search found " + std::to_string(classes) + " classes");
  }
  CheckResult r;
  r.name = std::move(name);
  r.kind = CheckKind::Conjecture;
  r.verdict = CheckVerdict::Fail;
  r.details = "COUNTEREXAMPLE: exhaustive search finds no partition into " + std::to_string(classes) +
              " isolating sets";
  r.witness = Json{{"target", to_json(t)}, {"classes", classes}, {"search_nodes", found.nodes}};
  return r;
}

std::string timestamp_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

}  // namespace

std::string to_string(CheckKind kind) {
  switch (kind) {
    case CheckKind::Theorem: return "theorem";
    case CheckKind::Construction: return "construction";
    case CheckKind::Conjecture: return "conjecture";
  }
  return "theorem";
}

std::string to_string(CheckVerdict verdict) {
  switch (verdict) {
    case CheckVerdict::Pass: return "PASS";
    case CheckVerdict::Fail: return "FAIL";
    case CheckVerdict::Vacuous: return "VACUOUS";
    case CheckVerdict::Aborted: return "ABORTED";
  }
  return "ABORTED";
}

Json to_json(const CheckResult& result) {
  return Json{{"name", result.name},
              {"kind", to_string(result.kind)},
              {"verdict", to_string(result.verdict)},
              {"details", result.details},
              {"witness", result.witness}};
}

CheckResult check_result_from_json(const Json& j) {
  CheckResult r;
  r.name = j.at("name").get<std::string>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "theorem") {
    r.kind = CheckKind::Theorem;
  } else if (kind == "construction") {
    r.kind = CheckKind::Construction;
  } else if (kind == "conjecture") {
    r.kind = CheckKind::Conjecture;
  } else {
    throw Error("unknown check kind '" + kind + "'");
  }
  const std::string verdict = j.at("verdict").get<std::string>();
  if (verdict == "PASS") {
    r.verdict = CheckVerdict::Pass;
  } else if (verdict == "FAIL") {
    r.verdict = CheckVerdict::Fail;
  } else if (verdict == "VACUOUS") {
    r.verdict = CheckVerdict::Vacuous;
  } else if (verdict == "ABORTED") {
    r.verdict = CheckVerdict::Aborted;
  } else {
    throw Error("unknown verdict '" + verdict + "'");
  }
  r.details = j.value("details", std::string());
  r.witness = j.value("witness", Json(nullptr));
  return r;
}

std::vector<std::string> resolve_checks(const RunConfig& config) {
  for (int k : config.k_values) {
    if (k < 3) throw Error("k values must be at least 3, got " + std::to_string(k));
  }
  if (config.budget == 0) throw Error("budget must be positive");
  if (config.jobs < 1) throw Error("jobs must be positive");
  std::vector<std::string> out;
  auto add = [&](const std::vector<std::string>& names) {
    for (const auto& n : names) {
      if (!has(out, n)) out.push_back(n);
    }
  };
  for (const std::string& c : config.checks) {
    if (c == "all") {
      add(kBoundChecks);
      add(kPartitionChecks);
      add(kConjectureChecks);
    } else if (c == "bounds") {
      add(kBoundChecks);
    } else if (c == "partitions") {
      add(kPartitionChecks);
    } else if (c == "conjectures") {
      add(kConjectureChecks);
    } else if (has(kBoundChecks, c) || has(kPartitionChecks, c) || has(kConjectureChecks, c)) {
      add({c});
    } else {
      throw Error("unknown check '" + c + "'");
    }
  }
  return out;
}

std::vector<CheckResult> run_checks(const Graph& g, const RunConfig& config, const std::vector<std::string>& checks) {
  std::vector<CheckResult> out;
  for (const std::string& c : checks) {
    if (c == "iota_bound") {
      std::string exception;
      if (is_exactly(g, GraphFamily::CompleteGraph, 2)) exception = "K_2";
      if (is_exactly(g, GraphFamily::Cycle, 5)) exception = "C_5";
      out.push_back(iota_bound_check(g, config, c, TargetPattern::edge(), 3, exception));
    } else if (c == "iota_k_bound") {
      for (int k : config.k_values) {
        const std::string exception = is_exactly(g, GraphFamily::CompleteGraph, k) ? "K_" + std::to_string(k) : "";
        out.push_back(iota_bound_check(g, config, with_k(c, k), TargetPattern::clique(k), k + 1, exception));
      }
    } else if (c == "iota_c_bound") {
      const std::string exception = is_exactly(g, GraphFamily::CompleteGraph, 3) ? "C_3" : "";
      out.push_back(iota_bound_check(g, config, c, TargetPattern::cycle(), 4, exception));
    } else if (c == "iso_iota_product") {
      out.push_back(iso_iota_check(g, config, TargetPattern::edge()));
      for (int k : config.k_values) out.push_back(iso_iota_check(g, config, TargetPattern::clique(k)));
      out.push_back(iso_iota_check(g, config, TargetPattern::cycle()));
    } else if (c == "clique_partition") {
      for (int k : config.k_values) out.push_back(clique_partition_check(g, k));
    } else if (c == "cycle_partition") {
      out.push_back(cycle_partition_check(g));
    } else if (c == "clique_isomatic_k") {
      for (int k : config.k_values) {
        out.push_back(coloring_result(with_k(c, k), CheckKind::Construction, g, clique_isomatic_k_partition(g, k),
                                      TargetPattern::clique(k), "constructed " + std::to_string(k) + "-class partition"));
      }
    } else if (c == "cycle_isomatic_3") {
      out.push_back(cycle_isomatic_3_check(g, config));
    } else if (c == "conj_clique_isomatic") {
      for (int k : config.k_values) {
        const std::string name = with_k(c, k);
        if (g.order() == 0 || !is_connected(g)) {
          out.push_back(vacuous(name, CheckKind::Conjecture, "outside hypotheses: disconnected"));
        } else if (is_exactly(g, GraphFamily::CompleteGraph, k)) {
          out.push_back(vacuous(name, CheckKind::Conjecture, "outside hypotheses: input is K_" + std::to_string(k)));
        } else {
          out.push_back(conjecture_check(g, config, name, TargetPattern::clique(k), k + 1));
        }
      }
    } else if (c == "conj_cycle_isomatic" || c == "conj_planar_cycle") {
      if (g.order() == 0 || !is_connected(g)) {
        out.push_back(vacuous(c, CheckKind::Conjecture, "outside hypotheses: disconnected"));
      } else if (is_exactly(g, GraphFamily::CompleteGraph, 3)) {
        out.push_back(vacuous(c, CheckKind::Conjecture, "outside hypotheses: input is C_3"));
      } else if (c == "conj_planar_cycle" && !is_planar(g)) {
        out.push_back(vacuous(c, CheckKind::Conjecture, "outside hypotheses: not planar"));
      } else {
        out.push_back(conjecture_check(g, config, c, TargetPattern::cycle(), 4));
      }
    }
  }
  return out;
}

bool reverify(const Graph& g, const CheckResult& r) {
  const Json& w = r.witness;
  if (r.verdict == CheckVerdict::Vacuous || r.verdict == CheckVerdict::Aborted) return true;
  if (!w.is_object() || !w.contains("target")) return false;
  const TargetPattern t = target_from_json(w.at("target"));
  if (w.contains("proof_gap")) {
    const Json& gap = w.at("proof_gap");
    const Certificate failure = certificate_from_json(gap.at("failure"));
    const std::vector<int> colors = gap.at("coloring").get<std::vector<int>>();
    if (static_cast<int>(colors.size()) != g.order() || failure.passed()) return false;
    const VertexSet scope = vertex_set_from_json(gap.at("scope"));
    VertexSet cls;
    for (Vertex v : scope) {
      if (colors[v] == failure.class_index) cls.insert(v);
    }
    for (Vertex v : failure.witness) {
      if (!scope.contains(v)) return false;
    }
    return r.verdict == CheckVerdict::Fail && witness_is_valid(g, cls, failure);
  }
  bool ok = true;
  if (w.contains("set")) {
    const VertexSet d = vertex_set_from_json(w.at("set"));
    const int value = w.at("value").get<int>();
    ok = ok && is_isolating(g, d, t).passed() && d.size() == value;
    if (w.contains("factor")) {
      const bool within = w.at("factor").get<int>() * value <= g.order();
      ok = ok && within == (r.verdict == CheckVerdict::Pass);
    }
  }
  if (w.contains("coloring")) {
    const Coloring c = coloring_from_json(w.at("coloring"));
    if (c.size() != g.order()) return false;
    const Certificate cert = verify_partition(g, c, t);
    if (w.contains("product_limit")) {
      const int product = c.classes() * w.at("value").get<int>();
      ok = ok && cert.passed() && (product <= g.order()) == (r.verdict == CheckVerdict::Pass);
    } else {
      ok = ok && cert.passed() == (r.verdict == CheckVerdict::Pass);
      if (!cert.passed()) ok = ok && witness_is_valid(g, c, cert);
    }
  }
  if (!w.contains("set") && !w.contains("coloring")) {
    // Conjecture FAIL from exhaustive search: nothing short to re-check.
    ok = r.kind == CheckKind::Conjecture && r.verdict == CheckVerdict::Fail;
  }
  return ok;
}

void Aggregate::add(CheckVerdict verdict) {
  switch (verdict) {
    case CheckVerdict::Pass: ++pass; break;
    case CheckVerdict::Fail: ++fail; break;
    case CheckVerdict::Vacuous: ++vacuous; break;
    case CheckVerdict::Aborted: ++aborted; break;
  }
}

bool SweepReport::conjecture_failed() const {
  return std::any_of(counterexamples.begin(), counterexamples.end(),
                     [](const Counterexample& c) { return c.kind == CheckKind::Conjecture; });
}

GraphSource make_source(const RunConfig& config) {
  if (config.input_path.empty()) {
    auto stream = std::make_shared<LabeledGraphStream>(config.gen_n, config.filter);
    return [stream] { return stream->next(); };
  }
  std::vector<Graph> graphs;
  if (config.input_path == "-") {
    std::ostringstream text;
    text << std::cin.rdbuf();
    graphs = parse_graph_text(text.str());
  } else {
    graphs = read_graph_file(config.input_path);
  }
  auto shared = std::make_shared<std::vector<Graph>>(std::move(graphs));
  auto pos = std::make_shared<std::size_t>(0);
  const EnumerationFilter filter = config.filter;
  return [shared, pos, filter]() -> std::optional<Graph> {
    while (*pos < shared->size()) {
      const Graph& g = (*shared)[(*pos)++];
      if (filter.connected && (g.order() == 0 || !is_connected(g))) continue;
      if (filter.max_degree >= 0 && g.max_degree() > filter.max_degree) continue;
      if (filter.claw_free && !is_claw_free(g)) continue;
      return g;
    }
    return std::nullopt;
  };
}

SweepReport run_sweep(const RunConfig& config) { return run_sweep(config, make_source(config)); }

SweepReport run_sweep(const RunConfig& config, const GraphSource& source) {
  SweepReport report;
  report.config = config;
  report.checks = resolve_checks(config);
  report.timestamp = timestamp_now();
  constexpr std::size_t kBatch = 2048;
  std::vector<Graph> batch;
  std::vector<std::vector<CheckResult>> out;
  std::size_t next_index = 0;
  bool more = true;
  while (more) {
    batch.clear();
    while (batch.size() < kBatch) {
      std::optional<Graph> g = source();
      if (!g) {
        more = false;
        break;
      }
      batch.push_back(std::move(*g));
    }
    out.assign(batch.size(), {});
    std::atomic<std::size_t> cursor{0};
    auto work = [&] {
      for (std::size_t i = cursor++; i < batch.size(); i = cursor++) out[i] = run_checks(batch[i], config, report.checks);
    };
    const int workers = static_cast<int>(std::min<std::size_t>(config.jobs, batch.size()));
    if (workers <= 1) {
      work();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < workers; ++t) pool.emplace_back(work);
      for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      GraphRecord rec{next_index++, describe_graph(batch[i]), batch[i].order(), std::move(out[i])};
      bool notable = false;
      for (const CheckResult& c : rec.checks) {
        report.aggregate.add(c.verdict);
        if (c.verdict == CheckVerdict::Fail) {
          report.counterexamples.push_back({rec.index, rec.graph6, c.name, c.kind, c.details, c.witness});
        }
        notable = notable || c.verdict == CheckVerdict::Fail || c.verdict == CheckVerdict::Aborted;
      }
      ++report.graphs;
      if (!config.summary || notable) report.results.push_back(std::move(rec));
    }
  }
  return report;
}

Json to_json(const RunConfig& config) {
  Json j;
  if (config.input_path.empty()) {
    j["source"] = Json{{"kind", "enumerate"}, {"n", config.gen_n}};
  } else {
    j["source"] = Json{{"kind", "file"}, {"path", config.input_path}};
  }
  j["filter"] = Json{{"connected", config.filter.connected},
                     {"max_degree", config.filter.max_degree < 0 ? Json(nullptr) : Json(config.filter.max_degree)},
                     {"claw_free", config.filter.claw_free}};
  j["checks"] = config.checks;
  j["k"] = config.k_values;
  j["budget"] = config.budget;
  j["iota_max_order"] = config.iota_max_order;
  j["iso_max_order"] = config.iso_max_order;
  j["jobs"] = config.jobs;
  j["summary"] = config.summary;
  j["isomatic_convention"] = "weak partitions; empty classes count only when they isolate (pattern-free graphs)";
  return j;
}

Json to_json(const SweepReport& report) {
  Json j;
  j["config"] = to_json(report.config);
  j["checks"] = report.checks;
  j["timestamp"] = report.timestamp;
  j["graphs"] = report.graphs;
  Json results = Json::array();
  for (const GraphRecord& rec : report.results) {
    Json checks = Json::array();
    for (const CheckResult& c : rec.checks) checks.push_back(to_json(c));
    results.push_back(Json{{"index", rec.index}, {"graph6", rec.graph6}, {"n", rec.n}, {"checks", checks}});
  }
  j["results"] = std::move(results);
  Json counter = Json::array();
  for (const Counterexample& c : report.counterexamples) {
    counter.push_back(Json{{"index", c.index},
                           {"graph6", c.graph6},
                           {"check", c.check},
                           {"kind", to_string(c.kind)},
                           {"details", c.details},
                           {"witness", c.witness}});
  }
  j["counterexamples"] = std::move(counter);
  j["aggregate"] = Json{{"pass", report.aggregate.pass},
                        {"fail", report.aggregate.fail},
                        {"vacuous", report.aggregate.vacuous},
                        {"aborted", report.aggregate.aborted}};
  bool probed = false;
  for (const auto& name : report.checks) probed = probed || has(kConjectureChecks, name);
  if (probed) {
    j["conjectures"] = report.conjecture_failed() ? "COUNTEREXAMPLE FOUND" : "consistent on this set";
  }
  return j;
}

std::string to_tsv(const SweepReport& report) {
  std::ostringstream out;
  out << "index\tgraph6\tn\tcheck\tkind\tverdict\tdetails\n";
  for (const GraphRecord& rec : report.results) {
    for (const CheckResult& c : rec.checks) {
      out << rec.index << '\t' << rec.graph6 << '\t' << rec.n << '\t' << c.name << '\t' << to_string(c.kind) << '\t'
          << to_string(c.verdict) << '\t' << c.details << '\n';
    }
  }
  out << "# graphs\t" << report.graphs << '\n';
  out << "# pass\t" << report.aggregate.pass << "\n# fail\t" << report.aggregate.fail << "\n# vacuous\t"
      << report.aggregate.vacuous << "\n# aborted\t" << report.aggregate.aborted << '\n';
  return out.str();
}

}  // namespace isolation
