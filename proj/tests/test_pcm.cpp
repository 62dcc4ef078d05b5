#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mindiam/pcm.hpp"
#include "oracles.hpp"

using namespace mindiam;

TEST_CASE("mask text format", "[pcm]") {
  // four items, comparisons 1-4 and 2-3 missing
  const PcmMask m = parse_mask("4\n111x\n11x1\n1x11\nx111\n");
  const Graph g = graph_from_mask(m);
  CHECK(g.edge_count() == 4);
  CHECK_FALSE(g.adjacent(0, 3));
  CHECK_FALSE(g.adjacent(1, 2));
  CHECK(is_k_regular(g, 2));
  CHECK(are_isomorphic(g, cycle_graph(4)));
  CHECK(format_mask(m) == "4\n111x\n11x1\n1x11\nx111\n");

  CHECK(parse_mask("n=2\n1 0\n0 1\n").known[0][1] == false);
  CHECK_THROWS_AS(parse_mask(""), parse_error);
  CHECK_THROWS_AS(parse_mask("2\n11\n"), parse_error);
  CHECK_THROWS_AS(parse_mask("2\n1?\n11\n"), parse_error);
  CHECK_THROWS_AS(parse_mask("2\n01\n11\n"), parse_error);
  CHECK_THROWS_AS(parse_mask("two\n11\n11\n"), parse_error);
}

TEST_CASE("masks must be reciprocal", "[pcm]") {
  const PcmMask m = parse_mask("3\n11x\nx11\nx11\n");
  CHECK_THROWS_AS(graph_from_mask(m), reciprocity_error);
}

TEST_CASE("trivial masks", "[pcm]") {
  PcmMask all(5);
  for (auto& row : all.known) std::fill(row.begin(), row.end(), true);
  CHECK(graph_from_mask(all) == complete_graph(5));

  const Graph none = graph_from_mask(PcmMask(5));
  CHECK(none.edge_count() == 0);
  CHECK_THROWS_AS(pattern_from_graph(none), connectivity_error);
}

TEST_CASE("patterns from graphs", "[pcm]") {
  const auto k3 = pattern_from_graph(complete_graph(3));
  CHECK(k3.pairs == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});

  const auto five = pattern_from_graph(lookup(5, 3).graph);
  CHECK(five.pairs.size() == 8);
  CHECK(pattern_matrix(k3) == ".**\no.*\noo.\n");
  CHECK(pattern_csv(k3) == "i,j\n1,2\n1,3\n2,3\n");
  CHECK(pattern_graph6(k3) == "Bw");

  const auto petersen = pattern_from_graph(lookup(10, 3).graph);
  REQUIRE(petersen.pairs.size() == 15);
  CHECK(std::is_sorted(petersen.pairs.begin(), petersen.pairs.end()));
}

TEST_CASE("pattern to mask to graph round trip", "[pcm][property]") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 15);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    if (!is_connected(g)) continue;
    const auto p = pattern_from_graph(g);
    CHECK(graph_from_mask(mask_from_pattern(p)) == g);
    CHECK(graph_from_mask(parse_mask(format_mask(mask_from_pattern(p)))) == g);
  }
}

TEST_CASE("recommendations for diameter two", "[pcm][recommend]") {
  for (int n = 5; n <= 20; ++n) {
    RecommendQuery q;
    q.n = n;
    q.max_diameter = 2;
    const auto r = recommend(q);
    const int expected = n <= 10 ? 3 : n <= 15 ? 4 : 5;
    CAPTURE(n);
    CHECK(r.chosen_k == expected);
    CHECK(r.expected_d == 2);
    const Graph g = graph_from_pattern(r.pattern);
    CHECK(is_connected(g));
    CHECK(diameter(g) == Hops(2));
    CHECK(meets_degree_contract(g, r.chosen_k));
    CHECK(static_cast<int>(r.pattern.pairs.size()) == required_edge_count(n, r.chosen_k));
    CHECK(r.c == completion_ratio(n, r.chosen_k));
  }
}

TEST_CASE("recommendation examples", "[pcm][recommend]") {
  const auto petersen = recommend({10, 2, std::nullopt});
  CHECK(petersen.chosen_k == 3);
  CHECK(petersen.pattern.pairs.size() == 15);
  CHECK(petersen.c == CompletionRatio{1, 3});
  CHECK(petersen.source == "catalog: Petersen graph");

  const auto fourteen = recommend({14, 2, std::nullopt});
  CHECK(fourteen.chosen_k == 4);
  CHECK(fourteen.pattern.pairs.size() == 28);

  const auto twenty = recommend({20, 3, std::nullopt});
  CHECK(twenty.chosen_k == 3);
  CHECK(twenty.pattern.pairs.size() == 30);

  try {
    (void)recommend({20, 2, 40});
    FAIL("expected a frontier error");
  } catch (const frontier_error& e) {
    const auto& f = e.frontier();
    CHECK(std::find(f.begin(), f.end(), FrontierPoint{5, 2, 50, true}) != f.end());
    CHECK(std::find(f.begin(), f.end(), FrontierPoint{3, 3, 30, true}) != f.end());
  }
}

TEST_CASE("recommendation defaults and budgets", "[pcm][recommend]") {
  // no constraint: the best diameter k=3 offers
  CHECK(recommend({15, std::nullopt, std::nullopt}).chosen_k == 3);
  CHECK(recommend({8, std::nullopt, std::nullopt}).expected_d == 2);
  // a budget alone buys the best diameter it can
  CHECK(recommend({15, std::nullopt, 30}).chosen_k == 4);
  CHECK(recommend({15, std::nullopt, 29}).chosen_k == 3);
  // never k=4 from 16 items on
  for (int n = 16; n <= 20; ++n) {
    for (int d = 2; d <= 4; ++d) CHECK(recommend({n, d, std::nullopt}).chosen_k != 4);
  }
}

TEST_CASE("tiny and out-of-range item counts", "[pcm][recommend]") {
  const auto three = recommend({3, std::nullopt, std::nullopt});
  CHECK(three.chosen_k == 2);
  CHECK(three.expected_d == 1);
  CHECK(recommend({4, 2, std::nullopt}).chosen_k == 3);
  CHECK(recommend({5, 1, std::nullopt}).chosen_k == 4);
  CHECK_THROWS_AS(recommend({7, 1, std::nullopt}), frontier_error);
  CHECK_THROWS_AS(recommend({2, std::nullopt, std::nullopt}), size_error);
  CHECK_THROWS_AS(recommend({21, std::nullopt, std::nullopt}), size_error);
}

TEST_CASE("census optimum tie-break", "[pcm][recommend]") {
  RecommendQuery q;
  q.n = 8;
  q.max_diameter = 2;
  q.prefer_census_optimum = true;
  const auto r = recommend(q);
  CHECK(r.source == "census optimum");
  const Graph g = graph_from_pattern(r.pattern);
  CHECK(diameter(g) == Hops(2));
  CHECK(is_k_regular(g, 3));
}
