// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"
#include "mindiam/canonical.hpp"
#include "mindiam/catalog.hpp"
#include "mindiam/census.hpp"
#include "mindiam/graph6.hpp"
#include "mindiam/pcm.hpp"
#include "mindiam/search.hpp"
#include "oracles.hpp"

using namespace mindiam;

namespace {

struct Check {
  bool ok = true;
  std::vector<std::string> notes;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back("FAILED " + what);
    }
  }
  void note(const std::string& s) { notes.push_back(s); }
};

int workers() { return static_cast<int>(std::max(2u, std::min(8u, std::thread::hardware_concurrency()))); }

CensusResult census(int n, int k, CensusMode mode, int jobs = 1, bool store = false) {
  CensusQuery q;
  q.n = n;
  q.k = k;
  q.census = mode;
  q.jobs = jobs;
  q.store_optima = store;
  q.budget = 0;
  return min_diameter_census(q);
}

std::string count_of(const CensusResult& r) {
  return std::to_string(r.optima_count) + (r.d_min ? " at d=" + std::to_string(*r.d_min) : " (no graph)");
}

// Printed completion ratios, read straight off the result tables.
struct Printed {
  int n, k, comparisons, possible;
};
constexpr Printed printed_ratios[] = {
    {5, 3, 8, 10},    {6, 3, 9, 15},    {7, 3, 11, 21},   {8, 3, 12, 28},   {9, 3, 14, 36},   {10, 3, 15, 45},
    {11, 3, 17, 55},  {12, 3, 18, 66},  {13, 3, 20, 78},  {14, 3, 21, 91},  {15, 3, 23, 105}, {16, 3, 24, 120},
    {17, 3, 26, 136}, {18, 3, 27, 153}, {19, 3, 29, 171}, {20, 3, 30, 190}, {11, 4, 22, 55},  {12, 4, 24, 66},
    {13, 4, 26, 78},  {14, 4, 28, 91},  {15, 4, 30, 105}, {16, 5, 40, 120}, {17, 5, 43, 136}, {18, 5, 45, 153},
    {19, 5, 48, 171}, {20, 5, 50, 190},
};

Check criterion1() {
  Check c;
  struct Want {
    int n;
    std::uint64_t count;
    bool at_least;
  };
  const Want want[] = {{5, 2, true}, {6, 2, false}, {7, 2, true}, {8, 2, false}, {9, 1, true}, {10, 1, false}};
  for (const auto& w : want) {
    const auto r = census(w.n, 3, CensusMode::full, 1, true);
    const auto tag = "n=" + std::to_string(w.n);
    c.require(r.exhausted, tag + " census exhausted");
    c.require(r.d_min == 2, tag + " d_min=2");
    const bool count_ok = w.at_least ? r.optima_count >= w.count : r.optima_count == w.count;
    c.require(count_ok, tag + " count " + (w.at_least ? ">=" : "=") + std::to_string(w.count) + " (got " +
                            std::to_string(r.optima_count) + ")");
    const auto ratio = r.ratio();
    const auto* p = std::find_if(std::begin(printed_ratios), std::end(printed_ratios),
                                 [&](const Printed& x) { return x.n == w.n && x.k == 3; });
    c.require(ratio.comparisons == p->comparisons && ratio.possible == p->possible, tag + " c=" + ratio.fraction());
    if (w.n == 10) {
      c.require(!r.optima.empty() && are_isomorphic(r.optima.front().graph(), lookup(10, 3).graph),
                "n=10 optimum is the Petersen graph");
    }
    c.note(tag + ": " + count_of(r) + ", c=" + ratio.fraction());
  }
  return c;
}

Check criterion2() {
  Check c;
  struct Want {
    int n;
    std::uint64_t count;
    bool at_least;
  };
  const Want want[] = {{11, 34, true}, {12, 34, false}, {13, 34, true}, {14, 34, false},
                       {16, 14, false}, {18, 1, false}, {20, 1, false}};
  for (const auto& w : want) {
    const auto r = census(w.n, 3, CensusMode::optima_only, workers());
    const auto tag = "n=" + std::to_string(w.n);
    c.require(r.exhausted, tag + " census exhausted");
    c.require(r.d_min == 3, tag + " d_min=3");
    const bool count_ok = w.at_least ? r.optima_count >= w.count : r.optima_count == w.count;
    c.require(count_ok, tag + " count " + (w.at_least ? ">=" : "=") + std::to_string(w.count) + " (got " +
                            std::to_string(r.optima_count) + ")");
    c.note(tag + ": " + count_of(r));
  }
  c.require(oracle::moore_bound(3, 2) == 10, "Moore bound for k=3, d=2 is 10");
  return c;
}

Check criterion3() {
  Check c;
  const std::uint64_t want[] = {37, 26, 10, 1, 1};
  for (int n = 11; n <= 14; ++n) {
    const auto r = census(n, 4, CensusMode::optima_only, workers());
    const auto tag = "n=" + std::to_string(n);
    c.require(r.exhausted && r.d_min == 2 && r.optima_count == want[n - 11], tag + " d_min=2 count=" +
                                                                                  std::to_string(want[n - 11]));
    c.note(tag + ": " + count_of(r));
  }
  const auto serial = census(15, 4, CensusMode::full, 1);
  const auto parallel = census(15, 4, CensusMode::full, workers());
  for (const auto* r : {&serial, &parallel}) {
    c.require(r->exhausted && r->d_min == 2 && r->optima_count == 1, "n=15 d_min=2 count=1");
    c.require(r->total_connected == 805'491u, "n=15 total connected 4-regular = 805491");
  }
  c.require(serial.total_connected == parallel.total_connected && serial.histogram == parallel.histogram,
            "n=15 identical across job counts");
  c.note("n=15: " + count_of(serial) + ", total " + std::to_string(serial.total_connected.value_or(0)) + " with 1 job and " +
         std::to_string(parallel.total_connected.value_or(0)) + " with " + std::to_string(workers()) + " jobs");
  return c;
}

Check criterion4() {
  Check c;
  for (const auto& e : catalog()) {
    if (e.k != 5) continue;
    const auto tag = "n=" + std::to_string(e.n) + " k=5";
    c.require(is_connected(e.graph), tag + " connected");
    c.require(meets_degree_contract(e.graph, 5), tag + " 5-(quasi-)regular");
    c.require(diameter(e.graph) == Hops(2), tag + " d=2");
  }
  SearchOptions o;
  o.n = 16;
  o.k = 5;
  o.target_d = 2;
  o.attempts = 100'000;
  const auto r = stochastic_low_diameter_search(o);
  c.require(r.distinct_count() >= 3, "(16,5) search finds >=3 distinct forms");
  const Graph clebsch = lookup(16, 5).graph;
  const bool found = std::any_of(r.graphs.begin(), r.graphs.end(),
                                 [&](const CanonicalForm& f) { return are_isomorphic(f.graph(), clebsch); });
  c.require(found, "(16,5) search reaches the Clebsch graph");
  for (const auto& f : r.graphs) {
    const Graph g = f.graph();
    c.require(meets_degree_contract(g, 5) && diameter(g) == Hops(2), "search result " + f.graph6() + " verifies");
  }
  c.note("(16,5) seed " + std::to_string(r.seed) + ": " + std::to_string(r.distinct_count()) + " distinct in " +
         std::to_string(r.attempts) + " attempts, Clebsch " + (found ? "found" : "missing"));
  return c;
}

Check criterion5() {
  Check c;
  std::istringstream in;
  std::ostringstream out, err;
  const auto start = std::chrono::steady_clock::now();
  const int code = cli::run({"--json", "verify", "--catalog"}, in, out, err);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require(code == 0, "verify --catalog exits 0");
  const auto j = nlohmann::json::parse(out.str());
  c.require(j["passed"] == 26 && j["total"] == 26, "26/26 entries pass");
  for (const auto& e : j["entries"]) {
    const auto tag = "n=" + std::to_string(e["n"].get<int>()) + " k=" + std::to_string(e["k"].get<int>());
    const auto g6 = e["graph6"].get<std::string>();
    c.require(g6 == "identical" || g6 == "isomorphic", tag + " graph6 isomorphic to the edge list");
  }
  for (const auto& e : j["entries"]) {
    if (e["n"] == 11 && e["k"] == 4) {
      c.require(e["corrected"] == true, "n=11 k=4 reported as corrected");
      c.require(!e["printed_only"].empty() && !e["matrix_only"].empty(), "n=11 k=4 raw and reconciled edges shown");
      c.require(!e["printed_list_error"].is_null(), "n=11 k=4 raw list error reported");
      c.note("n=11 k=4 corrected: printed-only " + e["printed_only"].dump() + ", matrix-only " + e["matrix_only"].dump());
    }
    if (e["n"] == 19 && e["k"] == 5) {
      // the printed list and the matrix agree here, vertex 8 being the one vertex of degree 6
      const auto& entry = lookup(19, 5);
      c.require(e["pass"] == true && is_k_quasi_regular(entry.graph, 5), "n=19 k=5 is 5-quasi-regular with d=2");
      c.require(entry.graph.degree(7) == 6, "n=19 k=5 heavy vertex is vertex 8");
      c.note(std::string("n=19 k=5: printed list and matrix ") + (e["corrected"] == true ? "differ" : "agree") +
             ", degree 6 at vertex 8");
    }
  }
  c.require(seconds < 1.0, "runtime under 1 s");
  c.note("ran in " + std::to_string(seconds) + " s");
  return c;
}

Check criterion6() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& e : catalog()) {
    c.require(encode_graph6(decode_graph6(e.graph6)) == e.graph6, "catalog string " + e.graph6 + " round-trips");
  }
  std::mt19937_64 rng(20260401);
  int failures = 0;
  for (int i = 0; i < 10'000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 20);
    const Graph g = oracle::random_graph(n, std::uniform_real_distribution<double>(0, 1)(rng), rng);
    const auto s = encode_graph6(g);
    if (decode_graph6(s) != g || s.size() != 1 + graph6_data_length(n)) ++failures;
  }
  c.require(failures == 0, "10^4 random graphs round-trip (" + std::to_string(failures) + " failures)");
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.require(seconds < 1.0, "runtime under 1 s");
  c.note("26 catalog strings and 10000 random graphs in " + std::to_string(seconds) + " s");
  return c;
}

Check criterion7() {
  Check c;
  const std::pair<int, std::size_t> want[] = {{4, 1}, {6, 2}, {8, 5}};
  for (auto [n, count] : want) {
    const auto brute = oracle::connected_classes_with_degrees(std::vector<int>(n, 3)).size();
    const auto r = census(n, 3, CensusMode::full);
    const auto tag = "n=" + std::to_string(n);
    c.require(brute == count, tag + " brute force gives " + std::to_string(count));
    c.require(r.total_connected == brute, tag + " census matches brute force");
    c.note(tag + ": census " + std::to_string(r.total_connected.value_or(0)) + ", brute force " + std::to_string(brute));
  }
  std::mt19937_64 rng(7);
  int disagreements = 0, isomorphic = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 7);
    const Graph a = oracle::random_graph(n, 0.5, rng);
    Graph b = rng() % 2 ? oracle::shuffled(a, rng) : oracle::random_graph(n, 0.5, rng);
    if (a.edge_count() == b.edge_count() && rng() % 2) b = oracle::shuffled(b, rng);
    const bool want_iso = oracle::isomorphic_all_permutations(oracle::to_matrix(a), oracle::to_matrix(b));
    isomorphic += want_iso ? 1 : 0;
    if (are_isomorphic(a, b) != want_iso) ++disagreements;
  }
  c.require(disagreements == 0, "isomorphism agrees with all-permutations oracle");
  c.note("1000 pairs n<=7, " + std::to_string(isomorphic) + " isomorphic, " + std::to_string(disagreements) +
         " disagreements");
  return c;
}

Check criterion8() {
  Check c;
  for (int n = 3; n <= 20; ++n) {
    c.require(diameter(cycle_graph(n)) == Hops(static_cast<unsigned>(n / 2)), "diameter(C_" + std::to_string(n) + ")");
  }
  for (const auto& p : printed_ratios) {
    const auto r = completion_ratio(p.n, p.k);
    c.require(r == CompletionRatio{p.comparisons, p.possible},
              "c(" + std::to_string(p.n) + "," + std::to_string(p.k) + ") = " + std::to_string(p.comparisons) + "/" +
                  std::to_string(p.possible));
  }
  c.note("18 cycles, " + std::to_string(std::size(printed_ratios)) + " printed ratios");
  return c;
}

Check criterion9() {
  Check c;
  for (int n = 5; n <= 20; ++n) {
    const int want = n <= 10 ? 3 : n <= 15 ? 4 : 5;
    const auto r = recommend({n, 2, std::nullopt});
    c.require(r.chosen_k == want && r.expected_d == 2, "recommend(" + std::to_string(n) + ", d<=2) -> k=" +
                                                          std::to_string(want));
    const Graph g = graph_from_pattern(r.pattern);
    c.require(diameter(g) == Hops(2) && meets_degree_contract(g, want), "pattern for n=" + std::to_string(n) + " verifies");
  }
  const auto twenty = recommend({20, 3, std::nullopt});
  c.require(twenty.pattern.pairs.size() == 30 && twenty.c.comparisons == 30, "recommend(20, d<=3) -> 30 comparisons");
  c.note("recommend(20, d<=3): k=" + std::to_string(twenty.chosen_k) + ", " +
         std::to_string(twenty.pattern.pairs.size()) + " comparisons");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Check()>>> criteria = {
      {"cubic diameter-two optima for n=5..10", criterion1},
      {"cubic diameter-three optima for n=11..20", criterion2},
      {"4-regular optima for n=11..15", criterion3},
      {"5-(quasi-)regular entries and (16,5) search", criterion4},
      {"catalog integrity", criterion5},
      {"graph6 codec", criterion6},
      {"oracle equivalence", criterion7},
      {"formulas", criterion8},
      {"recommendation policy", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
      c = criteria[i].second();
    } catch (const std::exception& ex) {
      c.require(false, std::string("exception: ") + ex.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %zu: %s (%.1f s)\n", c.ok ? "PASS" : "FAIL", i + 1, criteria[i].first, seconds);
    for (const auto& n : c.notes) std::printf("    %s\n", n.c_str());
    std::fflush(stdout);
    failed += c.ok ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
