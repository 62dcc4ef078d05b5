#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "mindiam/canonical.hpp"
#include "oracles.hpp"

using namespace mindiam;

namespace {

Graph prism() {
  Graph g(6);
  for (auto [a, b] : {std::pair{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {0, 3}, {1, 4}, {2, 5}}) g.add_edge(a, b);
  return g;
}

Graph k33() {
  Graph g(6);
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) g.add_edge(a, b);
  return g;
}

}  // namespace

TEST_CASE("canonical form is invariant under relabelling", "[canonical][property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const double p = static_cast<double>(rng() % 100) / 100.0;
    const Graph g = oracle::random_graph(n, p, rng);
    const Graph h = oracle::shuffled(g, rng);
    CAPTURE(encode_graph6(g));
    const Graph cg = canonical_graph(g);
    CHECK(cg == canonical_graph(h));
    CHECK(oracle::isomorphic_backtrack(oracle::to_matrix(cg), oracle::to_matrix(g)));
  }
}

TEST_CASE("canonical form on symmetric graphs", "[canonical]") {
  std::mt19937_64 rng(5);
  const char* symmetric[] = {
      "IUYAHCPBG",              // Petersen
      "OPtcIcSoGT@__XWAcJ_ci",  // Clebsch
      "MhEGHC@AI?_PC@_G_",      // Heawood
      "KG@LIchdMoV?",           // Chvatal
      "ShECQ?_@G?`@@?C?_G_AO?_??@W@?O?DC",
  };
  for (const char* s : symmetric) {
    const Graph g = decode_graph6(s);
    const auto form = canonical_form(g);
    for (int i = 0; i < 10; ++i) CHECK(canonical_form(oracle::shuffled(g, rng)) == form);
  }
  for (int n : {1, 2, 7, 20, 40}) {
    CHECK(canonical_graph(Graph(n)) == Graph(n));
    CHECK(canonical_graph(complete_graph(n)) == complete_graph(n));
  }
  const Graph c12 = cycle_graph(12);
  CHECK(canonical_form(oracle::shuffled(c12, rng)) == canonical_form(c12));
}

TEST_CASE("prism and K33 are different", "[canonical]") {
  CHECK_FALSE(are_isomorphic(prism(), k33()));
  CHECK(are_isomorphic(prism(), prism()));
  CHECK(canonical_form(prism()) != canonical_form(k33()));
}

TEST_CASE("isomorphism decisions match the all-permutations oracle", "[canonical][property]") {
  std::mt19937_64 rng(99);
  int positives = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph a = oracle::random_graph(n, 0.5, rng);
    Graph b = (trial % 2 == 0) ? oracle::shuffled(a, rng) : oracle::random_graph(n, 0.5, rng);
    const bool expected = oracle::isomorphic_all_permutations(oracle::to_matrix(a), oracle::to_matrix(b));
    positives += expected ? 1 : 0;
    CAPTURE(encode_graph6(a), encode_graph6(b));
    CHECK(are_isomorphic(a, b) == expected);
  }
  CHECK(positives > 300);
}

TEST_CASE("colours constrain the canonical order", "[canonical]") {
  const Graph g = cycle_graph(5);
  const std::vector<int> colors{1, 0, 0, 0, 0};
  const auto order = canonical_order(g, colors);
  REQUIRE(order.size() == 5);
  CHECK(order.back() == 0);  // the only vertex of the larger colour goes last
  const std::vector<int> bad{0, 1};
  CHECK_THROWS_AS(canonical_order(g, bad), size_error);
}

TEST_CASE("distinct canonical forms for the cubic graphs on 8 vertices", "[canonical]") {
  const auto classes = oracle::connected_classes_with_degrees(std::vector<int>(8, 3));
  std::set<CanonicalForm> forms;
  for (const auto& m : classes) {
    Graph g(8);
    for (int i = 0; i < 8; ++i)
      for (int j = i + 1; j < 8; ++j)
        if (m[i][j]) g.add_edge(i, j);
    forms.insert(canonical_form(g));
  }
  CHECK(forms.size() == classes.size());
  CHECK(forms.size() == 5);
}
