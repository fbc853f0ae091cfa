#include <doctest.h>

#include <random>

#include "isolation/graph_io.hpp"
#include "isolation/report.hpp"
#include "isolation/verify.hpp"
#include "oracles.hpp"

using namespace isolation;

TEST_CASE("target patterns") {
  CHECK(TargetPattern::parse("kclique:3") == TargetPattern::clique(3));
  CHECK(TargetPattern::parse("cycle") == TargetPattern::cycle());
  CHECK(TargetPattern::parse("dominate") == TargetPattern::clique(1));
  CHECK(TargetPattern::clique(2).to_string() == "kclique:2");
  CHECK_THROWS_AS(TargetPattern::parse("kclique:0"), Error);
  CHECK_THROWS_AS(TargetPattern::parse("kclique:x"), Error);
  CHECK_THROWS_AS(TargetPattern::parse("triangle"), Error);
}

TEST_CASE("colorings") {
  CHECK_THROWS_AS(Coloring({1, 5}, 4), Error);
  CHECK_THROWS_AS(Coloring({0, 1}, 4), Error);
  Coloring c({1, 2, 1}, 3);
  CHECK(c.color_class(1) == VertexSet{0, 2});
  CHECK(c.color_class(3).empty());
}

TEST_CASE("residuals") {
  CHECK(residual(cycle_graph(3), VertexSet{0}).graph.order() == 0);
  InducedSubgraph r = residual(cycle_graph(5), VertexSet{0});
  CHECK(r.graph == path_graph(2));
  CHECK(r.to_original == std::vector<Vertex>{2, 3});
  CHECK(residual(petersen_graph(), VertexSet::range(10)).graph.order() == 0);
  CHECK(residual(petersen_graph(), VertexSet{}).graph == petersen_graph());
}

TEST_CASE("is_isolating") {
  CHECK(is_isolating(complete_graph(4), VertexSet{0}, TargetPattern::clique(3)).passed());
  Certificate c5 = is_isolating(cycle_graph(5), VertexSet{}, TargetPattern::edge());
  CHECK_FALSE(c5.passed());
  CHECK(c5.witness.size() == 2);
  CHECK(cycle_graph(5).has_edge(c5.witness[0], c5.witness[1]));
  CHECK(c5.class_index == 0);
  CHECK(is_isolating(double_clique(3), VertexSet{2}, TargetPattern::cycle()).passed());
  Certificate cyc = is_isolating(double_clique(3), VertexSet{0}, TargetPattern::cycle());
  CHECK_FALSE(cyc.passed());
  CHECK(cyc.witness.size() == 3);
  CHECK(witness_is_valid(double_clique(3), VertexSet{0}, cyc));
}

TEST_CASE("verify_partition") {
  CHECK(verify_partition(cycle_graph(4), Coloring({1, 2, 3, 4}, 4), TargetPattern::cycle()).passed());

  Certificate k3 = verify_partition(complete_graph(3), Coloring({1, 2, 3}, 4), TargetPattern::cycle());
  CHECK_FALSE(k3.passed());
  CHECK(k3.class_index == 4);
  CHECK(k3.witness.size() == 3);
  CHECK(witness_is_valid(complete_graph(3), Coloring({1, 2, 3}, 4), k3));

  CHECK(verify_partition(path_graph(5), Coloring::uniform(5, 4, 1), TargetPattern::cycle()).passed());
}

TEST_CASE("domination") {
  for (int n = 1; n <= 6; ++n) CHECK(is_dominating(complete_graph(n), VertexSet{0}));
  CHECK_FALSE(is_dominating(cycle_graph(5), VertexSet{0}));
  CHECK(is_dominating(cycle_graph(6), VertexSet{0, 3}));
}

TEST_CASE("tampered witnesses are rejected") {
  const Graph g = cycle_graph(5);
  Certificate cert = is_isolating(g, VertexSet{}, TargetPattern::edge());
  REQUIRE_FALSE(cert.passed());
  Certificate wrong = cert;
  wrong.witness = {0, 2};  // not an edge
  CHECK_FALSE(witness_is_valid(g, VertexSet{}, wrong));
  wrong.witness = {0, 1};  // covered by D
  CHECK_FALSE(witness_is_valid(g, VertexSet{0}, wrong));
  Certificate cyc = is_isolating(complete_graph(4), VertexSet{}, TargetPattern::cycle());
  cyc.witness = {0, 1};
  CHECK_FALSE(witness_is_valid(complete_graph(4), VertexSet{}, cyc));
}

TEST_CASE("verifier agrees with the naive oracle on every graph up to 5 vertices") {
  const std::vector<TargetPattern> targets{TargetPattern::clique(1), TargetPattern::clique(2),
                                           TargetPattern::clique(3), TargetPattern::clique(4),
                                           TargetPattern::cycle()};
  for (int n = 1; n <= 5; ++n) {
    oracle::for_each_graph(n, [&](const Graph& g) {
      const oracle::Matrix a = oracle::matrix(g);
      for (std::uint64_t d = 0; d < (std::uint64_t{1} << n); ++d) {
        for (const TargetPattern& t : targets) {
          Certificate cert = is_isolating(g, VertexSet(d), t);
          const bool expected = oracle::isolates(a, d, t);
          if (cert.passed() != expected) {
            FAIL(emit_graph6(g) << " D=" << d << " " << t.to_string());
          }
          if (!cert.passed() && !witness_is_valid(g, VertexSet(d), cert)) {
            FAIL("bad witness " << emit_graph6(g) << " D=" << d << " " << t.to_string());
          }
        }
      }
    });
  }
}

TEST_CASE("certificate JSON round trip and re-verification") {
  std::mt19937 rng(11);
  const std::vector<TargetPattern> targets{TargetPattern::clique(2), TargetPattern::clique(3),
                                           TargetPattern::cycle()};
  int fails = 0, passes = 0;
  oracle::for_each_graph(6, [&](const Graph& g) {
    if (rng() % 16 != 0) return;
    for (const TargetPattern& t : targets) {
      const int classes = 2 + static_cast<int>(rng() % 3);
      std::vector<int> colors(6);
      for (int& c : colors) c = 1 + static_cast<int>(rng() % classes);
      const Coloring c(colors, classes);
      const Certificate cert = verify_partition(g, c, t);
      const Json j = to_json(cert);
      const Certificate back = certificate_from_json(Json::parse(j.dump()));
      CHECK(back.verdict == cert.verdict);
      CHECK(back.class_index == cert.class_index);
      CHECK(back.witness == cert.witness);
      CHECK(back.target == cert.target);
      CHECK(coloring_from_json(Json::parse(to_json(c).dump())) == c);
      CHECK(verify_partition(g, c, target_from_json(j.at("target"))).passed() == back.passed());
      if (back.passed()) {
        CHECK(j.at("class").is_null());
        ++passes;
      } else {
        CHECK(witness_is_valid(g, c, back));
        CHECK(oracle::partition_ok(g, c, t) == false);
        ++fails;
      }
    }
  });
  CHECK(fails > 100);
  CHECK(passes > 100);
}
