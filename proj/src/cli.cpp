#include "isolation/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "isolation/exact.hpp"
#include "isolation/graph_io.hpp"
#include "isolation/partition_clique.hpp"
#include "isolation/partition_cycle.hpp"
#include "isolation/report.hpp"
#include "isolation/sweep.hpp"

namespace isolation {

namespace {

struct InputOptions {
  std::string path;
  std::string graph6;
};

void add_input_options(CLI::App* cmd, InputOptions& opt) {
  cmd->add_option("--input,-i", opt.path, "graph file: graph6 lines or an edge list; '-' for stdin");
  cmd->add_option("--graph,-g", opt.graph6, "a single graph6 record");
}

std::vector<Graph> load_graphs(const InputOptions& opt, std::istream& in) {
  if (!opt.graph6.empty() && !opt.path.empty()) throw Error("give either --input or --graph, not both");
  if (!opt.graph6.empty()) return {parse_graph6(opt.graph6)};
  if (opt.path.empty()) throw Error("no input graph (use --input or --graph)");
  if (opt.path == "-") {
    std::ostringstream text;
    text << in.rdbuf();
    return parse_graph_text(text.str());
  }
  return read_graph_file(opt.path);
}

Graph load_one(const InputOptions& opt, std::istream& in) {
  std::vector<Graph> graphs = load_graphs(opt, in);
  if (graphs.size() != 1) throw Error("expected exactly one graph, got " + std::to_string(graphs.size()));
  return graphs.front();
}

std::vector<int> parse_colors(const std::string& text) {
  std::string spaced = text;
  std::replace(spaced.begin(), spaced.end(), ',', ' ');
  std::istringstream in(spaced);
  std::vector<int> out;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size()) throw Error("bad color '" + token + "'");
    out.push_back(value);
  }
  return out;
}

int cmd_verify(const InputOptions& input, const std::string& target_text, const std::string& coloring_text,
               const std::string& coloring_file, int classes, std::istream& in, std::ostream& out) {
  const Graph g = load_one(input, in);
  const TargetPattern t = TargetPattern::parse(target_text);
  std::string text = coloring_text;
  if (!coloring_file.empty()) {
    std::ifstream file(coloring_file);
    if (!file) throw Error("cannot open coloring file '" + coloring_file + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    text = buf.str();
  }
  std::vector<int> colors = parse_colors(text);
  if (static_cast<int>(colors.size()) != g.order()) {
    throw Error("coloring has " + std::to_string(colors.size()) + " entries for " + std::to_string(g.order()) +
                " vertices");
  }
  int m = classes;
  if (m == 0) m = colors.empty() ? 1 : *std::max_element(colors.begin(), colors.end());
  const Coloring c(colors, m);
  const Certificate cert = verify_partition(g, c, t);
  out << to_json(cert).dump() << '\n';
  return cert.passed() ? kExitPass : kExitFail;
}

int cmd_partition(const InputOptions& input, const std::string& mode, int k, std::istream& in, std::ostream& out,
                  std::ostream& err) {
  if (mode != "clique" && mode != "cycle") throw Error("mode must be 'clique' or 'cycle'");
  int worst = kExitPass;
  for (const Graph& g : load_graphs(input, in)) {
    Json j;
    j["graph6"] = describe_graph(g);
    j["mode"] = mode;
    j["k"] = mode == "clique" ? Json(k) : Json(nullptr);
    try {
      Coloring c;
      TargetPattern t = TargetPattern::cycle();
      if (mode == "clique") {
        t = TargetPattern::clique(k);
        j["structure"] = structure_name(classify_structure(g, k));
        c = partition_k_clique(g, k);
      } else {
        j["structure"] = structure_name(classify_cycle_structure(g));
        c = partition_cycle(g);
      }
      const Certificate cert = verify_partition(g, c, t);
      j["coloring"] = to_json(c);
      j["certificate"] = to_json(cert);
      if (!cert.passed()) worst = std::max(worst, kExitFail);
    } catch (const PreconditionError& e) {
      err << "precondition violated: " << e.what() << '\n';
      j["error"] = std::string("precondition violated: ") + e.what();
      worst = std::max(worst, kExitInputError);
    } catch (const ProofGapError& e) {
      err << "construction gap: " << e.what() << '\n';
      j["proof_gap"] = to_json(e.report());
      worst = std::max(worst, kExitFail);
    }
    out << j.dump() << '\n';
  }
  return worst;
}

int cmd_number(bool isomatic, const InputOptions& input, const std::string& target_text, std::uint64_t budget,
               int max_order, std::istream& in, std::ostream& out) {
  const TargetPattern t = TargetPattern::parse(target_text);
  int worst = kExitPass;
  for (const Graph& g : load_graphs(input, in)) {
    Json j;
    j["graph6"] = describe_graph(g);
    j["target"] = to_json(t);
    const SearchBudget b{max_order > 0 ? max_order : (isomatic ? kIsomaticBudget.max_order : kIotaBudget.max_order),
                         budget};
    if (isomatic) {
      const IsomaticResult r = max_isomatic(g, t, b);
      j["status"] = r.solved() ? "SOLVED" : "ABORTED";
      if (r.solved()) {
        j["value"] = r.value;
        j["unbounded"] = r.unbounded;
        j["witness"] = to_json(r.witness);
        j["certificate"] = to_json(verify_partition(g, r.witness, t));
      } else {
        j["reason"] = r.abort_reason;
        worst = std::max(worst, kExitAborted);
      }
      j["nodes"] = r.nodes;
      j["convention"] = "weak partitions; empty classes count only when they isolate";
    } else {
      const IsolationNumberResult r = min_isolating(g, t, b);
      j["status"] = r.solved() ? "SOLVED" : "ABORTED";
      if (r.solved()) {
        j["value"] = r.value;
        j["witness"] = to_json(r.witness);
        j["certificate"] = to_json(is_isolating(g, r.witness, t));
      } else {
        j["reason"] = r.abort_reason;
        worst = std::max(worst, kExitAborted);
      }
      j["nodes"] = r.nodes;
    }
    out << j.dump() << '\n';
  }
  return worst;
}

int cmd_sweep(RunConfig config, const std::string& format, const std::string& out_path,
              const std::string& counterexample_path, std::istream& in, std::ostream& out, std::ostream& err) {
  if (format != "json" && format != "tsv") throw Error("format must be json or tsv");
  if (config.input_path.empty() && config.gen_n <= 0) throw Error("give --input or --gen-n");
  resolve_checks(config);
  GraphSource source;
  if (config.input_path == "-") {
    std::ostringstream text;
    text << in.rdbuf();
    auto graphs = std::make_shared<std::vector<Graph>>(parse_graph_text(text.str()));
    auto pos = std::make_shared<std::size_t>(0);
    source = [graphs, pos, filter = config.filter]() -> std::optional<Graph> {
      while (*pos < graphs->size()) {
        const Graph& g = (*graphs)[(*pos)++];
        if (filter.connected && (g.order() == 0 || !is_connected(g))) continue;
        if (filter.max_degree >= 0 && g.max_degree() > filter.max_degree) continue;
        if (filter.claw_free && !is_claw_free(g)) continue;
        return g;
      }
      return std::nullopt;
    };
  } else {
    source = make_source(config);
  }
  const SweepReport report = run_sweep(config, source);
  const std::string text = format == "json" ? to_json(report).dump(2) + "\n" : to_tsv(report);
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(out_path);
    if (!file) throw Error("cannot write '" + out_path + "'");
    file << text;
  }
  if (!report.counterexamples.empty()) {
    std::string path = counterexample_path;
    if (path.empty()) path = out_path.empty() ? "counterexamples.json" : out_path + ".counterexamples.json";
    Json artifact;
    artifact["config"] = to_json(config);
    artifact["timestamp"] = report.timestamp;
    Json list = Json::array();
    for (const Counterexample& c : report.counterexamples) {
      list.push_back(Json{{"index", c.index},
                          {"graph6", c.graph6},
                          {"check", c.check},
                          {"kind", to_string(c.kind)},
                          {"details", c.details},
                          {"witness", c.witness}});
    }
    artifact["counterexamples"] = std::move(list);
    std::ofstream file(path);
    file << artifact.dump(2) << '\n';
    err << "!!! " << report.counterexamples.size() << " FAILED check(s)"
        << (report.conjecture_failed() ? ", including a CONJECTURE COUNTEREXAMPLE" : "") << "; written to " << path
        << '\n';
  }
  err << "graphs=" << report.graphs << " pass=" << report.aggregate.pass << " fail=" << report.aggregate.fail
      << " vacuous=" << report.aggregate.vacuous << " aborted=" << report.aggregate.aborted << '\n';
  return report.counterexamples.empty() ? kExitPass : kExitFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Isolating sets and isolating partitions of small graphs", "isolate"};
  app.require_subcommand(1);

  InputOptions verify_in, part_in, iota_in, iso_in;
  std::string target = "kclique:2";
  std::string coloring_text, coloring_file;
  int classes = 0;
  auto* verify = app.add_subcommand("verify", "check that every class of a coloring is isolating");
  add_input_options(verify, verify_in);
  verify->add_option("--target,-t", target, "kclique:<k>, cycle or dominate");
  verify->add_option("--coloring,-c", coloring_text, "colors 1..m, one per vertex, comma or space separated");
  verify->add_option("--coloring-file", coloring_file, "file holding the colors");
  verify->add_option("--classes,-m", classes, "number of classes m (default: largest color)");

  std::string mode = "clique";
  int k = 3;
  auto* partition = app.add_subcommand("partition", "build a (k+1)-class clique or 4-class cycle isolating partition");
  add_input_options(partition, part_in);
  partition->add_option("--mode", mode, "clique or cycle")->check(CLI::IsMember({"clique", "cycle"}));
  partition->add_option("--k", k, "clique order for clique mode");

  std::uint64_t budget = 50'000'000;
  int max_order = 0;
  std::string iota_target = "kclique:2";
  std::string iso_target = "kclique:2";
  auto* iota = app.add_subcommand("iota", "exact isolation number");
  add_input_options(iota, iota_in);
  iota->add_option("--target,-t", iota_target, "kclique:<k>, cycle or dominate");
  iota->add_option("--budget", budget, "search node budget");
  iota->add_option("--max-order", max_order, "largest graph order searched");
  auto* isomatic = app.add_subcommand("isomatic", "exact isomatic number");
  add_input_options(isomatic, iso_in);
  isomatic->add_option("--target,-t", iso_target, "kclique:<k>, cycle or dominate");
  isomatic->add_option("--budget", budget, "search node budget");
  isomatic->add_option("--max-order", max_order, "largest graph order searched");

  RunConfig config;
  std::string format = "json";
  std::string out_path, counterexample_path;
  std::vector<int> k_values;
  auto* sweep = app.add_subcommand("sweep", "run bound, construction and conjecture checks over many graphs");
  auto* source = sweep->add_option("--input,-i", config.input_path, "graph file; '-' for stdin");
  sweep->add_option("--gen-n", config.gen_n, "enumerate labeled graphs of this order")->excludes(source);
  sweep->add_flag("--connected", config.filter.connected, "keep connected graphs only");
  sweep->add_option("--max-degree", config.filter.max_degree, "keep graphs with maximum degree at most this");
  sweep->add_flag("--claw-free", config.filter.claw_free, "keep claw-free graphs only");
  sweep->add_option("--checks", config.checks, "check names or bounds|partitions|conjectures|all")->delimiter(',');
  sweep->add_option("--k", k_values, "clique orders (>= 3) for the clique checks")->delimiter(',');
  sweep->add_option("--budget", config.budget, "search node budget per search");
  sweep->add_option("--iso-max-order", config.iso_max_order, "largest order for isomatic searches");
  sweep->add_option("--jobs,-j", config.jobs, "worker threads");
  sweep->add_option("--out,-o", out_path, "report file (default stdout)");
  sweep->add_option("--format", format, "json or tsv")->check(CLI::IsMember({"json", "tsv"}));
  sweep->add_flag("--summary", config.summary, "keep only graphs with a FAIL or ABORTED check");
  sweep->add_option("--counterexamples", counterexample_path, "where to write failures (default next to --out)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    const auto* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    if (e.get_exit_code() == 0) {
      out << sub->help();
      return kExitPass;
    }
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (verify->parsed()) return cmd_verify(verify_in, target, coloring_text, coloring_file, classes, in, out);
    if (partition->parsed()) return cmd_partition(part_in, mode, k, in, out, err);
    if (iota->parsed()) return cmd_number(false, iota_in, iota_target, budget, max_order, in, out);
    if (isomatic->parsed()) return cmd_number(true, iso_in, iso_target, budget, max_order, in, out);
    if (!k_values.empty()) config.k_values = k_values;
    return cmd_sweep(config, format, out_path, counterexample_path, in, out, err);
  } catch (const ParseError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }
}

}  // namespace isolation
