#include <doctest.h>

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "isolation/enumerate.hpp"
#include "isolation/graph.hpp"
#include "isolation/graph_io.hpp"
#include "isolation/planarity.hpp"
#include "oracles.hpp"

using namespace isolation;

namespace {

// Two triangles {0,1,2}, {3,4,5} joined by 2-3.
Graph dk3() { return double_clique(3); }

}  // namespace

TEST_CASE("graph6 decoding of small fixed strings") {
  CHECK(parse_graph6("C~") == complete_graph(4));
  CHECK(parse_graph6("Bw") == complete_graph(3));
  Graph one = parse_graph6("@");
  CHECK(one.order() == 1);
  CHECK(one.edge_count() == 0);
  CHECK(parse_graph6(">>graph6<<C~\r\n") == complete_graph(4));
  CHECK(emit_graph6(complete_graph(4)) == "C~");
  CHECK(emit_graph6(petersen_graph()) == "IheA@GUAo");
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);      // body missing
  CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);    // body too long
  CHECK_THROWS_AS(parse_graph6("C\x7f"), ParseError);  // byte out of range
  CHECK_THROWS_AS(parse_graph6("~?@"), ParseError);    // order above 62
  Graph big(63);
  CHECK_THROWS_AS(emit_graph6(big), Error);
}

TEST_CASE("graph6 round trip on externally generated records") {
  std::ifstream in(ISOLATION_TEST_DATA "/graph6_roundtrip.tsv");
  REQUIRE(in);
  std::string line;
  int records = 0;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::string g6;
    int n = 0, m = 0;
    unsigned long long fingerprint = 0;
    row >> g6 >> n >> m >> fingerprint;
    const Graph g = parse_graph6(g6);
    unsigned long long fp = 0;
    for (auto [u, v] : g.edges()) {
      const unsigned long long key = static_cast<unsigned long long>(u) * 64 + v + 1;
      fp += key * key;
    }
    INFO(line.substr(0, 40));
    CHECK(g.order() == n);
    CHECK(g.edge_count() == m);
    CHECK(fp == fingerprint);
    CHECK(emit_graph6(g) == g6);
    ++records;
  }
  CHECK(records == 1000);
}

TEST_CASE("edge lists") {
  CHECK(parse_edge_list("3\n0 1\n1 2\n0 2") == complete_graph(3));
  Graph two = parse_edge_list("2\n");
  CHECK(two.order() == 2);
  CHECK(two.edge_count() == 0);
  Graph p3 = parse_edge_list("4\n0 1\n0 1\n1 2");
  CHECK(p3.order() == 4);
  CHECK(p3.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(p3.degree(3) == 0);
  CHECK(parse_edge_list(emit_edge_list(petersen_graph())) == petersen_graph());

  CHECK_THROWS_AS(parse_edge_list("3\n0 3"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("3\n1 1"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("x\n"), ParseError);
  try {
    parse_edge_list("3\n0 1\n0 x\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
}

TEST_CASE("graph files mix") {
  const auto graphs = parse_graph_text("C~\n\nBw\n");
  REQUIRE(graphs.size() == 2);
  CHECK(graphs[1] == complete_graph(3));
  const auto single = parse_graph_text("3\n0 1\n1 2\n");
  REQUIRE(single.size() == 1);
  CHECK(single[0] == path_graph(3));
  CHECK(describe_graph(complete_graph(3)) == "Bw");
  CHECK(describe_graph(Graph::from_edges(64, {{0, 63}})) == "64:0-63");
}

TEST_CASE("closed neighborhoods") {
  CHECK(closed_neighborhood(cycle_graph(5), VertexSet{0}) == VertexSet{4, 0, 1});
  CHECK(closed_neighborhood(complete_graph(4), VertexSet{2}) == VertexSet::range(4));
  CHECK(closed_neighborhood(petersen_graph(), VertexSet{}).empty());
}

TEST_CASE("induced subgraphs") {
  InducedSubgraph k3 = induced_subgraph(complete_graph(4), VertexSet{0, 1, 2});
  CHECK(k3.graph == complete_graph(3));
  InducedSubgraph three = induced_subgraph(cycle_graph(6), VertexSet{0, 2, 4});
  CHECK(three.graph.order() == 3);
  CHECK(three.graph.edge_count() == 0);
  CHECK(three.to_original == std::vector<Vertex>{0, 2, 4});
  CHECK(three.from_original == std::vector<Vertex>{0, -1, 1, -1, 2, -1});
  InducedSubgraph c5 = induced_subgraph(cycle_graph(5), VertexSet::range(5));
  CHECK(c5.graph == cycle_graph(5));
  CHECK(c5.to_original == std::vector<Vertex>{0, 1, 2, 3, 4});
}

TEST_CASE("components") {
  const auto two = components(disjoint_union(complete_graph(3), complete_graph(3)));
  REQUIRE(two.size() == 2);
  CHECK(two[0] == VertexSet{0, 1, 2});
  CHECK(two[1] == VertexSet{3, 4, 5});
  const auto one = components(petersen_graph());
  REQUIRE(one.size() == 1);
  CHECK(one[0] == VertexSet::range(10));
  CHECK(components(Graph(0)).empty());
  CHECK(components(cycle_graph(6), VertexSet{0, 1, 3, 4}).size() == 2);
}

TEST_CASE("k-cliques") {
  CHECK(find_k_clique(complete_graph(4), 3) == VertexSet{0, 1, 2});
  CHECK_FALSE(find_k_clique(cycle_graph(5), 3).has_value());
  CHECK(find_k_clique(dk3(), 3) == VertexSet{0, 1, 2});
  CHECK(all_k_cliques(dk3(), 3, dk3().vertices()) == std::vector<VertexSet>{{0, 1, 2}, {3, 4, 5}});
  CHECK(all_k_cliques(complete_graph(5), 3, VertexSet::range(5)).size() == 10);
}

TEST_CASE("cycle finding") {
  Graph tree = Graph::from_edges(6, {{0, 1}, {0, 2}, {2, 3}, {2, 4}, {4, 5}});
  CHECK_FALSE(find_cycle(tree).has_value());
  CHECK(find_cycle(cycle_graph(4)) == std::vector<Vertex>{0, 1, 2, 3});
  auto k4 = find_cycle(complete_graph(4));
  REQUIRE(k4.has_value());
  CHECK(k4->size() == 3);
  CHECK(is_forest(tree, tree.vertices()));
  CHECK_FALSE(is_forest(complete_graph(4), VertexSet::range(4)));
  CHECK(shortest_cycle(petersen_graph(), VertexSet::range(10))->size() == 5);
}

TEST_CASE("claw-freeness") {
  CHECK_FALSE(is_claw_free(star_graph(4)));
  for (int n = 3; n <= 9; ++n) CHECK(is_claw_free(cycle_graph(n)));
  Graph k4_minus_matching = Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  CHECK(is_claw_free(k4_minus_matching));
  CHECK_FALSE(is_claw_free(petersen_graph()));
}

TEST_CASE("family recognition") {
  GraphFamilyTag k3 = recognize(complete_graph(3));
  CHECK(k3.family == GraphFamily::CompleteGraph);
  CHECK(k3.is_also_c3);
  CHECK(recognize(Graph(1)).family == GraphFamily::Tree);
  CHECK(recognize(petersen_graph()).family == GraphFamily::Other);
  CHECK(recognize(cycle_graph(7)).family == GraphFamily::Cycle);
  CHECK(recognize(cycle_graph(7)).order == 7);
  CHECK(recognize(path_graph(5)).family == GraphFamily::Path);
  CHECK(recognize(star_graph(5)).family == GraphFamily::Star);
  CHECK(recognize(complete_graph(5)).family == GraphFamily::CompleteGraph);
  CHECK_FALSE(recognize(complete_graph(5)).is_also_c3);
  Graph spider = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  CHECK(recognize(spider).family == GraphFamily::Tree);
  CHECK(recognize(disjoint_union(path_graph(2), path_graph(2))).family == GraphFamily::Other);
}

TEST_CASE("enumeration counts against the edge-mask oracle") {
  CHECK(LabeledGraphStream(1, {}).next().has_value());

  for (int n = 1; n <= 6; ++n) {
    for (int max_degree : {-1, 2, 3, 4}) {
      for (bool claw_free : {false, true}) {
        if (claw_free && max_degree < 0) continue;
        for (bool conn : {false, true}) {
          EnumerationFilter f{conn, max_degree, claw_free};
          std::uint64_t expected = 0;
          oracle::for_each_graph(n, [&](const Graph& g) {
            if (conn && !oracle::connected(g)) return;
            if (max_degree >= 0 && g.max_degree() > max_degree) return;
            if (claw_free && !is_claw_free(g)) return;
            ++expected;
          });
          std::uint64_t got = 0;
          std::map<std::string, int> seen;
          LabeledGraphStream s(n, f);
          while (auto g = s.next()) {
            ++got;
            ++seen[emit_graph6(*g)];
          }
          INFO("n=" << n << " maxdeg=" << max_degree << " claw=" << claw_free << " conn=" << conn);
          CHECK(got == expected);
          CHECK(seen.size() == got);
        }
      }
    }
  }
  std::uint64_t n3 = 0;
  LabeledGraphStream s3(3, {true, -1, false});
  while (s3.next()) ++n3;
  CHECK(n3 == 4);

  LabeledGraphStream s4(4, {true, 3, true});
  while (auto g = s4.next()) CHECK(recognize(*g).family != GraphFamily::Star);
}

TEST_CASE("enumeration limits") {
  CHECK_THROWS_AS(LabeledGraphStream(8, {}), Error);
  CHECK_THROWS_AS(LabeledGraphStream(11, {true, 3, true}), Error);
  CHECK_NOTHROW(LabeledGraphStream(10, {true, 3, true}));
}

TEST_CASE("planarity against the minor oracle") {
  CHECK(is_planar(complete_graph(4)));
  CHECK_FALSE(is_planar(complete_graph(5)));
  CHECK_FALSE(is_planar(petersen_graph()));
  Graph k33 = Graph::from_edges(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
  CHECK_FALSE(is_planar(k33));
  CHECK_FALSE(oracle::planar(k33));

  for (int n = 5; n <= 6; ++n) {
    oracle::for_each_graph(n, [&](const Graph& g) {
      INFO(emit_graph6(g));
      CHECK(is_planar(g) == oracle::planar(g));
    });
  }
  std::mt19937 rng(7);
  std::bernoulli_distribution coin(0.45);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Edge> edges;
    for (int u = 0; u < 7; ++u)
      for (int v = u + 1; v < 7; ++v)
        if (coin(rng)) edges.emplace_back(u, v);
    Graph g = Graph::from_edges(7, edges);
    INFO(emit_graph6(g));
    CHECK(is_planar(g) == oracle::planar(g));
  }
}
