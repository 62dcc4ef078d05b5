#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <mutex>
#include <set>

#include "mindiam/enumerate.hpp"
#include "oracles.hpp"

using namespace mindiam;

namespace {

std::vector<Graph> generate(int n, int k, Strategy s = Strategy::orderly) {
  EnumerateOptions o;
  o.n = n;
  o.k = k;
  o.strategy = s;
  return enumerate_graphs(o);
}

std::set<CanonicalForm> forms_of(const std::vector<Graph>& graphs) {
  std::set<CanonicalForm> out;
  for (const auto& g : graphs) out.insert(canonical_form(g));
  return out;
}

}  // namespace

TEST_CASE("degree query validation", "[enumerate]") {
  CHECK_THROWS_AS(validate_degree_query(4, 4, std::nullopt), degree_error);
  CHECK_THROWS_AS(validate_degree_query(5, 3, DegreeMode::regular), parity_error);
  CHECK_THROWS_AS(validate_degree_query(6, 3, DegreeMode::quasi_regular), parity_error);
  CHECK_NOTHROW(validate_degree_query(5, 3, DegreeMode::quasi_regular));
  CHECK(degree_mode(7, 3) == DegreeMode::quasi_regular);
  CHECK(degree_mode(7, 4) == DegreeMode::regular);
}

TEST_CASE("Erdos-Gallai residual test", "[enumerate]") {
  const auto graphical = [](std::vector<int> d) {
    std::array<int, 64> a{};
    std::copy(d.begin(), d.end(), a.begin());
    return detail::graphical(a, static_cast<int>(d.size()));
  };
  CHECK(graphical({3, 3, 3, 3}));
  CHECK(graphical({}));
  CHECK_FALSE(graphical({3, 3, 3}));
  CHECK(graphical({3, 1, 1, 1, 0}));
  CHECK_FALSE(graphical({4, 4, 1, 1, 1, 1}));  // four leaves cannot serve both hubs
  CHECK_FALSE(graphical({1}));
}

TEST_CASE("every emitted graph is sound and isomorph-free", "[enumerate][property]") {
  for (auto [n, k] : {std::pair{4, 3}, {6, 3}, {8, 3}, {9, 3}, {10, 3}, {11, 3}, {12, 3}, {7, 4}, {9, 4}, {11, 4}, {8, 5}, {9, 5}}) {
    const auto graphs = generate(n, k);
    CAPTURE(n, k);
    for (const auto& g : graphs) {
      CHECK(g.order() == n);
      CHECK(is_connected(g));
      CHECK(meets_degree_contract(g, k));
      CHECK(g.edge_count() == required_edge_count(n, k));
    }
    CHECK(forms_of(graphs).size() == graphs.size());
  }
}

TEST_CASE("published counts of connected regular graphs", "[enumerate]") {
  const std::map<int, std::size_t> cubic{{4, 1}, {6, 2}, {8, 5}, {10, 19}, {12, 85}, {14, 509}, {16, 4060}};
  for (auto [n, count] : cubic) {
    CAPTURE(n);
    CHECK(generate(n, 3).size() == count);
  }
  const std::map<int, std::size_t> quartic{{5, 1}, {6, 1}, {7, 2}, {8, 6}, {9, 16}, {10, 59}, {11, 265}, {12, 1544}};
  for (auto [n, count] : quartic) {
    CAPTURE(n);
    CHECK(generate(n, 4).size() == count);
  }
}

TEST_CASE("orderly generation agrees with the brute-force oracle", "[enumerate][oracle]") {
  for (int n : {4, 6, 8}) {
    const auto classes = oracle::connected_classes_with_degrees(std::vector<int>(n, 3));
    CHECK(generate(n, 3).size() == classes.size());
  }
  std::vector<int> quasi(7, 3);
  quasi[0] = 4;
  CHECK(generate(7, 3).size() == oracle::connected_classes_with_degrees(quasi).size());
}

TEST_CASE("orderly and leaf-dedup strategies agree", "[enumerate]") {
  for (auto [n, k] : {std::pair{6, 3}, {7, 3}, {8, 3}, {9, 3}, {8, 4}, {9, 4}, {8, 5}}) {
    CAPTURE(n, k);
    CHECK(forms_of(generate(n, k)) == forms_of(generate(n, k, Strategy::leaf_dedup)));
  }
}

TEST_CASE("worker count does not change the output", "[enumerate][jobs]") {
  for (int jobs : {1, 2, 3, 5}) {
    EnumerateOptions o;
    o.n = 13;
    o.k = 3;
    o.jobs = jobs;
    std::mutex mu;
    std::set<CanonicalForm> forms;
    const auto stats = enumerate_degree_constrained(o, [&](int, const Graph& g) {
      auto f = canonical_form(g);
      std::lock_guard lock(mu);
      forms.insert(std::move(f));
      return true;
    });
    CAPTURE(jobs);
    CHECK(stats.exhausted);
    CHECK(stats.emitted == 1958);
    CHECK(forms.size() == 1958);
  }
}

TEST_CASE("the node budget stops the run", "[enumerate]") {
  EnumerateOptions o;
  o.n = 14;
  o.k = 4;
  o.budget = 1000;
  std::uint64_t seen = 0;
  const auto stats = enumerate_degree_constrained(o, [&](int, const Graph&) {
    ++seen;
    return true;
  });
  CHECK_FALSE(stats.exhausted);
  CHECK(stats.budget_exceeded);
  CHECK(stats.nodes == 1000);
  CHECK(seen == stats.emitted);
  CHECK_THROWS_AS(enumerate_graphs(o), error);
}

TEST_CASE("the visitor can stop the run", "[enumerate]") {
  EnumerateOptions o;
  o.n = 12;
  o.k = 3;
  int seen = 0;
  const auto stats = enumerate_degree_constrained(o, [&](int, const Graph&) { return ++seen < 10; });
  CHECK(seen == 10);
  CHECK_FALSE(stats.exhausted);
  CHECK_FALSE(stats.budget_exceeded);
}

TEST_CASE("diameter-two pruning keeps exactly the diameter-two graphs", "[enumerate]") {
  for (auto [n, k] : {std::pair{9, 3}, {10, 3}, {10, 4}, {11, 4}, {12, 4}, {11, 5}}) {
    std::size_t expected = 0;
    for (const auto& g : generate(n, k)) expected += diameter(g) <= Hops(2) ? 1 : 0;
    EnumerateOptions o;
    o.n = n;
    o.k = k;
    o.max_diameter = 2;
    CAPTURE(n, k);
    CHECK(enumerate_graphs(o).size() == expected);
  }
}
