#include <doctest.h>

#include "isolation/exact.hpp"
#include "isolation/graph_io.hpp"
#include "oracles.hpp"

using namespace isolation;

TEST_CASE("isolation numbers of small named graphs") {
  IsolationNumberResult c5 = min_isolating(cycle_graph(5), TargetPattern::edge());
  REQUIRE(c5.solved());
  CHECK(c5.value == 2);
  CHECK(is_isolating(cycle_graph(5), c5.witness, TargetPattern::edge()).passed());
  CHECK(c5.witness.size() == 2);

  CHECK(min_isolating(complete_graph(2), TargetPattern::edge()).value == 1);
  CHECK(min_isolating(cycle_graph(3), TargetPattern::cycle()).value == 1);
  for (int k = 1; k <= 6; ++k) CHECK(min_isolating(complete_graph(k), TargetPattern::clique(k)).value == 1);
  CHECK(min_isolating(double_clique(3), TargetPattern::clique(3)).value == 1);
  CHECK(min_isolating(path_graph(6), TargetPattern::cycle()).value == 0);
  CHECK(min_isolating(petersen_graph(), TargetPattern::dominate()).value == 3);
}

TEST_CASE("isomatic numbers of small named graphs") {
  IsomaticResult c3 = max_isomatic(cycle_graph(3), TargetPattern::cycle());
  REQUIRE(c3.solved());
  CHECK(c3.value == 3);
  CHECK_FALSE(c3.unbounded);
  CHECK(verify_partition(cycle_graph(3), c3.witness, TargetPattern::cycle()).passed());

  for (int n = 1; n <= 7; ++n) CHECK(max_isomatic(complete_graph(n), TargetPattern::dominate()).value == n);
  CHECK(max_isomatic(cycle_graph(4), TargetPattern::cycle()).value == 4);
  CHECK(max_isomatic(complete_graph(5), TargetPattern::dominate()).value == 5);

  IsomaticResult tree = max_isomatic(path_graph(4), TargetPattern::cycle());
  CHECK(tree.unbounded);
  CHECK(tree.value == 4);
  CHECK(tree.at_least(100));
}

TEST_CASE("budget exhaustion aborts instead of answering") {
  IsolationNumberResult big = min_isolating(Graph(40), TargetPattern::edge());
  CHECK_FALSE(big.solved());
  CHECK_FALSE(big.abort_reason.empty());
  IsolationNumberResult starved = min_isolating(petersen_graph(), TargetPattern::dominate(), {32, 3});
  CHECK_FALSE(starved.solved());
  IsomaticResult iso = max_isomatic(cycle_graph(13), TargetPattern::cycle());
  CHECK_FALSE(iso.solved());
  IsomaticResult iso_starved = max_isomatic(petersen_graph(), TargetPattern::edge(), {12, 5});
  CHECK_FALSE(iso_starved.solved());
}

TEST_CASE("exact solvers against brute force") {
  const std::vector<TargetPattern> targets{TargetPattern::clique(2), TargetPattern::clique(3),
                                           TargetPattern::cycle()};
  for (int n = 1; n <= 5; ++n) {
    oracle::for_each_graph(n, [&](const Graph& g) {
      for (const TargetPattern& t : targets) {
        IsolationNumberResult iota = min_isolating(g, t);
        IsomaticResult iso = max_isomatic(g, t);
        oracle::Iso expected = oracle::iso(g, t);
        const bool ok = iota.solved() && iota.value == oracle::iota(g, t) && iso.solved() &&
                        iso.value == expected.value && iso.unbounded == expected.unbounded &&
                        verify_partition(g, iso.witness, t).passed() && iso.witness.classes() == iso.value;
        if (!ok) FAIL(emit_graph6(g) << " " << t.to_string());
      }
    });
  }
}

TEST_CASE("find_isomatic_partition") {
  PartitionSearchResult four = find_isomatic_partition(cycle_graph(4), TargetPattern::cycle(), 4);
  REQUIRE(four.coloring.has_value());
  CHECK(verify_partition(cycle_graph(4), *four.coloring, TargetPattern::cycle()).passed());
  PartitionSearchResult five = find_isomatic_partition(cycle_graph(4), TargetPattern::cycle(), 5);
  CHECK(five.status == SearchStatus::Solved);
  CHECK_FALSE(five.coloring.has_value());
}

TEST_CASE("clique isomatic construction") {
  Graph two = disjoint_union(complete_graph(3), complete_graph(3));
  Coloring c = clique_isomatic_k_partition(two, 3);
  CHECK(c.classes() == 3);
  CHECK(c.color_class(1).size() == 2);
  CHECK(c.color_class(2).size() == 2);
  CHECK(c.color_class(3).size() == 2);
  CHECK(verify_partition(two, c, TargetPattern::clique(3)).passed());

  CHECK(clique_isomatic_k_partition(cycle_graph(5), 3) == Coloring::uniform(5, 3, 3));

  Coloring k4 = clique_isomatic_k_partition(complete_graph(4), 3);
  CHECK(k4.colors() == std::vector<int>{1, 2, 3, 3});
  CHECK(verify_partition(complete_graph(4), k4, TargetPattern::clique(3)).passed());

  for (int k = 1; k <= 4; ++k) {
    for (int n = 1; n <= 5; ++n) {
      oracle::for_each_graph(n, [&](const Graph& g) {
        if (!oracle::partition_ok(g, clique_isomatic_k_partition(g, k), TargetPattern::clique(k)))
          FAIL(emit_graph6(g) << " k=" << k);
      });
    }
  }
}

TEST_CASE("cycle isomatic construction") {
  Graph tree = Graph::from_edges(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}});
  CHECK(cycle_isomatic_3_partition(tree) == Coloring::uniform(5, 3, 3));

  Coloring c5 = cycle_isomatic_3_partition(cycle_graph(5));
  CHECK(c5.classes() == 3);
  CHECK(c5.color_class(1).size() == 1);
  CHECK(c5.color_class(2).size() == 1);
  CHECK(verify_partition(cycle_graph(5), c5, TargetPattern::cycle()).passed());

  CHECK(verify_partition(petersen_graph(), cycle_isomatic_3_partition(petersen_graph()), TargetPattern::cycle())
            .passed());

  for (int n = 1; n <= 5; ++n) {
    oracle::for_each_graph(n, [&](const Graph& g) {
      if (!oracle::partition_ok(g, cycle_isomatic_3_partition(g), TargetPattern::cycle())) FAIL(emit_graph6(g));
    });
  }
}

TEST_CASE("iso times iota bound") {
  IsoIotaBound c3 = check_iso_iota_bound(cycle_graph(3), TargetPattern::cycle());
  CHECK(c3.status == BoundStatus::Holds);
  CHECK(c3.iso == 3);
  CHECK(c3.iota == 1);
  IsoIotaBound k4 = check_iso_iota_bound(complete_graph(4), TargetPattern::clique(4));
  CHECK(k4.status == BoundStatus::Holds);
  CHECK(k4.iso == 4);
  CHECK(k4.iota == 1);
  IsoIotaBound forest = check_iso_iota_bound(path_graph(5), TargetPattern::cycle());
  CHECK(forest.status == BoundStatus::Vacuous);
  CHECK(forest.iota == 0);
  CHECK(forest.holds());
}
