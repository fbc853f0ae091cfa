#include <doctest.h>

#include "isolation/enumerate.hpp"
#include "isolation/graph_io.hpp"
#include "isolation/partition_clique.hpp"
#include "oracles.hpp"

using namespace isolation;

namespace {

Graph k4_minus_edge() { return Graph::from_edges(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

Graph k4_plus_pendant() {
  return Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}});
}

PreconditionError::Hypothesis violated(const Graph& g, int k) {
  try {
    check_clique_partition_hypotheses(g, k);
  } catch (const PreconditionError& e) {
    return e.hypothesis();
  }
  FAIL("hypotheses unexpectedly hold");
  return PreconditionError::Hypothesis::Disconnected;
}

// The witness of each case satisfies the predicate that names it.
bool witness_sound(const Graph& g, int k, const CliqueStructure& s) {
  const VertexSet all = g.vertices();
  if (std::holds_alternative<NoKk>(s)) return !find_k_clique(g, k).has_value();
  if (auto* w = std::get_if<NonSeparatingKk>(&s)) {
    const VertexSet rest = all - w->clique;
    return w->clique.size() == k && is_complete(g, w->clique) && !rest.empty() && is_connected(g, rest);
  }
  if (auto* w = std::get_if<NonInducedKkPlus>(&s)) {
    return w->clique.size() == k && is_complete(g, w->clique) && !w->clique.contains(w->pendant) &&
           (g.neighbors(w->pendant) & w->clique).size() >= 2 && g.has_edge(w->pendant, w->attachment);
  }
  if (auto* w = std::get_if<DoubleKk>(&s)) {
    return w->first.size() == k && w->second.size() == k && is_complete(g, w->first) &&
           is_complete(g, w->second) && !w->first.intersects(w->second) && w->first.contains(w->bridge.first) &&
           w->second.contains(w->bridge.second) && g.has_edge(w->bridge.first, w->bridge.second);
  }
  if (auto* w = std::get_if<InducedKkPlus>(&s)) {
    return w->clique.size() == k && is_complete(g, w->clique) && !w->clique.contains(w->pendant) &&
           (g.neighbors(w->pendant) & w->clique) == VertexSet::single(w->attachment);
  }
  return false;
}

}  // namespace

TEST_CASE("hypotheses") {
  CHECK(violated(complete_graph(3), 3) == PreconditionError::Hypothesis::ExcludedGraph);
  CHECK(violated(complete_graph(4), 4) == PreconditionError::Hypothesis::ExcludedGraph);
  CHECK(violated(disjoint_union(path_graph(2), path_graph(2)), 3) == PreconditionError::Hypothesis::Disconnected);
  CHECK(violated(star_graph(5), 3) == PreconditionError::Hypothesis::DegreeTooLarge);
  CHECK(violated(path_graph(3), 2) == PreconditionError::Hypothesis::CliqueOrderTooSmall);
  CHECK_NOTHROW(check_clique_partition_hypotheses(Graph(1), 3));
  CHECK_THROWS_AS(partition_k_clique(complete_graph(3), 3), PreconditionError);
}

TEST_CASE("classification") {
  CHECK(std::holds_alternative<NoKk>(classify_structure(cycle_graph(6), 3)));
  CliqueStructure diamond = classify_structure(k4_minus_edge(), 3);
  REQUIRE(std::holds_alternative<NonSeparatingKk>(diamond));
  CHECK(std::get<NonSeparatingKk>(diamond).clique.size() == 3);
  CliqueStructure dk = classify_structure(double_clique(3), 3);
  REQUIRE(std::holds_alternative<NonSeparatingKk>(dk));
  CHECK(std::get<NonSeparatingKk>(dk).clique == VertexSet{0, 1, 2});
  CHECK(structure_name(dk) == "non-separating K_k");
}

TEST_CASE("each construction case is reached") {
  // Every triangle separates; vertex 3 sees two vertices of {0,1,2}.
  Graph non_induced = Graph::from_edges(6, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {3, 4}, {2, 5}});
  CliqueStructure ni = classify_structure(non_induced, 3);
  REQUIRE(std::holds_alternative<NonInducedKkPlus>(ni));
  CHECK(witness_sound(non_induced, 3, ni));
  CHECK(verify_partition(non_induced, partition_k_clique(non_induced, 3), TargetPattern::clique(3)).passed());

  // Two separating triangles joined by 2-3, each with two pendant leaves.
  Graph double_sep = Graph::from_edges(10, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {2, 3},
                                            {0, 6}, {1, 7}, {4, 8}, {5, 9}});
  CliqueStructure dd = classify_structure(double_sep, 3);
  REQUIRE(std::holds_alternative<DoubleKk>(dd));
  CHECK(witness_sound(double_sep, 3, dd));
  CHECK(std::get<DoubleKk>(dd).bridge == Edge{2, 3});
  CHECK(verify_partition(double_sep, partition_k_clique(double_sep, 3), TargetPattern::clique(3)).passed());

  // Same shape for k = 4: every non-bridge clique vertex gets a leaf.
  std::vector<Edge> e4;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      e4.emplace_back(a, b);
      e4.emplace_back(a + 4, b + 4);
    }
  e4.emplace_back(3, 4);
  int leaf = 8;
  for (int v : {0, 1, 2, 5, 6, 7}) e4.emplace_back(v, leaf++);
  Graph double4 = Graph::from_edges(14, e4);
  CliqueStructure d4 = classify_structure(double4, 4);
  REQUIRE(std::holds_alternative<DoubleKk>(d4));
  CHECK(verify_partition(double4, partition_k_clique(double4, 4), TargetPattern::clique(4)).passed());

  CliqueCaseTally tally{};
  LabeledGraphStream s(7, {true, 3, false});
  while (auto g = s.next()) {
    if (g->order() == 3 && g->edge_count() == 3) continue;
    partition_k_clique(*g, 3, &tally);
  }
  // DoubleKk needs both cliques separating, which takes more than 7 vertices.
  for (std::size_t i = 0; i < tally.size(); ++i) {
    if (i == 3) continue;
    INFO("case " << i);
    CHECK(tally[i] > 0);
  }
}

TEST_CASE("partitions of small named graphs") {
  Coloring c6 = partition_k_clique(cycle_graph(6), 3);
  CHECK(c6 == Coloring::uniform(6, 4, 1));
  CHECK(verify_partition(cycle_graph(6), c6, TargetPattern::clique(3)).passed());

  Coloring plus = partition_k_clique(k4_plus_pendant(), 4);
  CHECK(plus.classes() == 5);
  std::vector<int> sorted = plus.colors();
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(verify_partition(k4_plus_pendant(), plus, TargetPattern::clique(4)).passed());

  for (int k = 3; k <= 6; ++k) {
    const Graph dk = double_clique(k);
    INFO("k=" << k);
    CHECK(verify_partition(dk, partition_k_clique(dk, k), TargetPattern::clique(k)).passed());
  }
  CHECK(partition_k_clique(Graph(1), 3).classes() == 4);
}

TEST_CASE("partitions against the oracle on small graphs") {
  for (int k = 3; k <= 4; ++k) {
    for (int n = 1; n <= 6; ++n) {
      LabeledGraphStream s(n, {true, k, false});
      while (auto g = s.next()) {
        if (g->order() == k && g->edge_count() == k * (k - 1) / 2) continue;
        const CliqueStructure st = classify_structure(*g, k);
        if (!witness_sound(*g, k, st)) FAIL("unsound witness " << emit_graph6(*g) << " k=" << k);
        const Coloring c = partition_k_clique(*g, k);
        const bool in_range = std::all_of(c.colors().begin(), c.colors().end(),
                                          [&](int x) { return x >= 1 && x <= k + 1; });
        if (!in_range || c.classes() != k + 1 || !oracle::partition_ok(*g, c, TargetPattern::clique(k))) {
          FAIL(emit_graph6(*g) << " k=" << k);
        }
      }
    }
  }
}

TEST_CASE("composition") {
  // K_4 coloured 1..4 leaves every residual inside S empty, so three edges
  // out of S are harmless.
  Graph g = Graph::from_edges(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 5}, {2, 6}, {4, 5}, {5, 6}});
  const VertexSet s{0, 1, 2, 3};
  Coloring joined = compose_colorings(g, s, Coloring({1, 2, 3, 4}, 4), Coloring::uniform(3, 4, 1), 3);
  CHECK(joined.colors() == std::vector<int>{1, 2, 3, 4, 1, 1, 1});
  CHECK(verify_partition(g, joined, TargetPattern::clique(3)).passed());

  // No edges between the parts.
  Graph apart = disjoint_union(complete_graph(4), cycle_graph(5));
  Coloring both = compose_colorings(apart, VertexSet{0, 1, 2, 3}, Coloring({1, 2, 3, 4}, 4),
                                    Coloring::uniform(5, 4, 2), 3);
  CHECK(verify_partition(apart, both, TargetPattern::clique(3)).passed());

  // Triangle {0,1,2} coloured 1,2,3: class 4 is empty and leaves the whole
  // triangle, which has two edges out of S. k - 2 = 1 allows only one.
  Graph gadget = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}, {3, 4}});
  try {
    compose_colorings(gadget, VertexSet{0, 1, 2}, Coloring({1, 2, 3}, 4), Coloring({4, 4}, 4), 3);
    FAIL("expected SideConditionError");
  } catch (const SideConditionError& e) {
    CHECK(e.class_index() == 4);
    CHECK(e.component() == VertexSet{0, 1, 2});
    CHECK(e.edges() == 2);
  }
  // With a single edge out the same colouring composes.
  Graph one_edge = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {3, 4}});
  Coloring ok = compose_colorings(one_edge, VertexSet{0, 1, 2}, Coloring({1, 2, 3}, 4), Coloring({4, 4}, 4), 3);
  CHECK(verify_partition(one_edge, ok, TargetPattern::clique(3)).passed());

  CHECK_THROWS_AS(compose_colorings(gadget, VertexSet{0, 1}, Coloring({1, 2, 3}, 4), Coloring({1, 1}, 4), 3),
                  Error);
}
