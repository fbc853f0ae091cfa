#include "isolation/partition_clique.hpp"

#include <utility>

#include "isolation/graph_io.hpp"

namespace isolation {

namespace {

// First edge (a, b) with a in `from`, b in `to`, ordered by (a, b).
std::optional<Edge> first_edge_between(const Graph& g, VertexSet from, VertexSet to) {
  for (Vertex a : from) {
    VertexSet hit = g.neighbors(a) & to;
    if (!hit.empty()) return Edge{a, hit.first()};
  }
  return std::nullopt;
}

CliqueStructure classify_within(const Graph& g, int k, VertexSet scope) {
  const std::vector<VertexSet> cliques = all_k_cliques(g, k, scope);
  if (cliques.empty()) return NoKk{};
  for (VertexSet h : cliques) {
    const VertexSet rest = scope - h;
    if (!rest.empty() && is_connected(g, rest)) return NonSeparatingKk{h};
  }
  for (VertexSet h : cliques) {
    for (Vertex u : scope - h) {
      const VertexSet hit = g.neighbors(u) & h;
      if (hit.size() >= 2) return NonInducedKkPlus{h, u, hit.first()};
    }
  }
  for (std::size_t i = 0; i < cliques.size(); ++i) {
    for (std::size_t j = i + 1; j < cliques.size(); ++j) {
      if (cliques[i].intersects(cliques[j])) continue;
      if (auto bridge = first_edge_between(g, cliques[i], cliques[j])) {
        return DoubleKk{cliques[i], cliques[j], *bridge};
      }
    }
  }
  const VertexSet h = cliques.front();
  for (Vertex u : scope - h) {
    const VertexSet hit = g.neighbors(u) & h;
    if (!hit.empty()) return InducedKkPlus{h, u, hit.first()};
  }
  // Only reachable when scope is exactly one k-clique.
  return NoKk{};
}

class CliquePartitioner {
 public:
  CliquePartitioner(const Graph& g, int k, CliqueCaseTally* tally)
      : g_(g), k_(k), target_(TargetPattern::clique(k)), colors_(g.order(), 1), tally_(tally) {}

  Coloring run() {
    color(g_.vertices());
    return Coloring(colors_, k_ + 1);
  }

 private:
  [[noreturn]] void gap(const std::string& stage, const std::string& detail, VertexSet scope,
                        Certificate failure = {}) const {
    ProofGapReport report;
    report.graph6 = describe_graph(g_);
    report.k = k_;
    report.stage = stage;
    report.detail = detail;
    report.scope = scope;
    report.coloring = colors_;
    report.failure = std::move(failure);
    throw ProofGapError(std::move(report));
  }

  void verify(const std::string& stage, VertexSet scope) const {
    Certificate cert = verify_partition_within(g_, colors_, k_ + 1, scope, target_);
    if (!cert.passed()) gap(stage, "class " + std::to_string(cert.class_index) + " leaves a k-clique", scope, cert);
  }

  void assign_distinct(VertexSet set, const std::vector<int>& palette) {
    std::size_t i = 0;
    for (Vertex x : set) colors_[x] = palette[i++];
  }

  std::vector<int> palette_without(int skip) const {
    std::vector<int> out;
    for (int c = 1; c <= k_ + 1; ++c) {
      if (c != skip) out.push_back(c);
    }
    return out;
  }

  // u -> k+1, v -> k, the rest of each clique 1..k-1.
  void two_clique_coloring(VertexSet first, VertexSet second, Vertex u, Vertex v) {
    const std::vector<int> low = palette_without(k_ + 1);
    const std::vector<int> lower(low.begin(), low.end() - 1);
    assign_distinct(first - VertexSet::single(u), lower);
    assign_distinct(second - VertexSet::single(v), lower);
    colors_[u] = k_ + 1;
    colors_[v] = k_;
  }

  void color_components(const std::string& stage, VertexSet rest) {
    for (VertexSet comp : components(g_, rest)) {
      if (comp.size() == k_ && is_complete(g_, comp)) gap(stage, "a component of the remainder is K_k", comp);
      color(comp);
    }
  }

  void color(VertexSet scope) {
    if (scope.empty()) return;
    const CliqueStructure s = classify_within(g_, k_, scope);
    if (tally_) ++(*tally_)[s.index()];
    if (std::holds_alternative<NoKk>(s)) {
      for (Vertex v : scope) colors_[v] = 1;
      return;
    }
    if (auto* c = std::get_if<NonSeparatingKk>(&s)) {
      non_separating(scope, c->clique);
    } else if (auto* c = std::get_if<NonInducedKkPlus>(&s)) {
      const VertexSet plus = c->clique | VertexSet::single(c->pendant);
      color_components("non-induced K_k+", scope - plus);
      assign_distinct(plus, palette_without(0));
      if (auto bad = find_side_condition_violation(g_, colors_, k_ + 1, scope, plus, k_ - 2)) {
        gap("non-induced K_k+", bad->what(), bad->component());
      }
      verify("non-induced K_k+", scope);
    } else if (auto* c = std::get_if<DoubleKk>(&s)) {
      color_components("double k-clique", scope - (c->first | c->second));
      two_clique_coloring(c->first, c->second, c->bridge.first, c->bridge.second);
      verify("double k-clique", scope);
    } else if (auto* c = std::get_if<InducedKkPlus>(&s)) {
      color_components("induced K_k+", scope - c->clique - VertexSet::single(c->pendant));
      assign_distinct(c->clique - VertexSet::single(c->attachment), palette_without(k_ + 1));
      colors_[c->pendant] = k_ + 1;
      colors_[c->attachment] = k_;
      verify("induced K_k+", scope);
    }
  }

  void non_separating(VertexSet scope, VertexSet h) {
    const VertexSet rest = scope - h;
    const Edge uv = *first_edge_between(g_, h, rest);
    const Vertex u = uv.first;
    const Vertex v = uv.second;
    if (rest.size() == k_ && is_complete(g_, rest)) {
      two_clique_coloring(h, rest, u, v);
      verify("non-separating k-clique, remainder K_k", scope);
      return;
    }
    color(rest);
    const int was = colors_[v];
    if (was != k_ + 1) {
      for (Vertex x : rest) {
        if (colors_[x] == was) {
          colors_[x] = k_ + 1;
        } else if (colors_[x] == k_ + 1) {
          colors_[x] = was;
        }
      }
    }
    assign_distinct(h, palette_without(k_ + 1));
    Certificate cert = verify_partition_within(g_, colors_, k_ + 1, scope, target_);
    if (cert.passed()) return;
    if (cert.class_index != k_ + 1) {
      gap("non-separating k-clique", "class " + std::to_string(cert.class_index) + " leaves a k-clique", scope, cert);
    }
    // The surviving clique is H - u plus one vertex v' of the remainder.
    VertexSet outside;
    for (Vertex x : cert.witness) {
      if (!h.contains(x)) outside.insert(x);
    }
    if (outside.size() != 1) {
      gap("non-separating k-clique", "surviving clique does not meet the remainder in one vertex", scope, cert);
    }
    assign_distinct(h, palette_without(colors_[outside.first()]));
    verify("non-separating k-clique, after recoloring", scope);
  }

  const Graph& g_;
  int k_;
  TargetPattern target_;
  std::vector<int> colors_;
  CliqueCaseTally* tally_;
};

}  // namespace

std::string structure_name(const CliqueStructure& s) {
  switch (s.index()) {
    case 0: return "no K_k";
    case 1: return "non-separating K_k";
    case 2: return "non-induced K_k+";
    case 3: return "double K_k";
    default: return "induced K_k+";
  }
}

void check_clique_partition_hypotheses(const Graph& g, int k) {
  using H = PreconditionError::Hypothesis;
  if (k < 3) throw PreconditionError(H::CliqueOrderTooSmall, "clique order must be at least 3, got " + std::to_string(k));
  if (g.order() == 0 || !is_connected(g)) throw PreconditionError(H::Disconnected, "input graph is not connected");
  if (g.max_degree() > k) {
    throw PreconditionError(H::DegreeTooLarge, "maximum degree " + std::to_string(g.max_degree()) + " exceeds k=" +
                                                   std::to_string(k));
  }
  if (g.order() == k && is_complete(g, g.vertices())) {
    throw PreconditionError(H::ExcludedGraph, "input is K_" + std::to_string(k) + ", the excluded graph");
  }
}

CliqueStructure classify_structure(const Graph& g, int k) {
  check_clique_partition_hypotheses(g, k);
  return classify_within(g, k, g.vertices());
}

Coloring partition_k_clique(const Graph& g, int k, CliqueCaseTally* tally) {
  check_clique_partition_hypotheses(g, k);
  return CliquePartitioner(g, k, tally).run();
}

std::optional<SideConditionError> find_side_condition_violation(const Graph& g, const std::vector<int>& colors,
                                                                int classes, VertexSet scope, VertexSet s,
                                                                int max_edges) {
  std::vector<VertexSet> members(classes + 1);
  for (Vertex v : s) members[colors[v]].insert(v);
  const VertexSet outside = scope - s;
  for (int i = 1; i <= classes; ++i) {
    const VertexSet left = s - closed_neighborhood(g, members[i]);
    for (VertexSet comp : components(g, left)) {
      const int edges = edges_between(g, comp, outside);
      if (edges > max_edges) return SideConditionError(i, comp, edges);
    }
  }
  return std::nullopt;
}

Coloring compose_colorings(const Graph& g, VertexSet s, const Coloring& on_s, const Coloring& on_rest, int k) {
  const VertexSet rest = g.vertices() - s;
  if (on_s.size() != s.size() || on_rest.size() != rest.size()) {
    throw Error("coloring sizes do not match the split");
  }
  const int classes = k + 1;
  if (on_s.classes() > classes || on_rest.classes() > classes) throw Error("colorings use more than k+1 classes");
  std::vector<int> colors(g.order(), 1);
  int i = 0;
  for (Vertex v : s) colors[v] = on_s[i++];
  i = 0;
  for (Vertex v : rest) colors[v] = on_rest[i++];
  if (auto bad = find_side_condition_violation(g, colors, classes, g.vertices(), s, k - 2)) throw *bad;
  return Coloring(colors, classes);
}

}  // namespace isolation
