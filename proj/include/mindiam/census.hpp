#pragma once

// Minimal-diameter census over the generator, and the summary table.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mindiam/canonical.hpp"
#include "mindiam/enumerate.hpp"
#include "mindiam/graph.hpp"

namespace mindiam {

enum class CensusMode {
  /// Exact diameter of every graph; fills the diameter histogram.
  full,
  /// BFS stops once a graph is known to be worse than the incumbent.
  optima_only,
};

struct CensusQuery {
  int n = 0;
  int k = 0;
  std::optional<DegreeMode> mode;
  CensusMode census = CensusMode::full;
  bool store_optima = false;
  std::uint64_t budget = default_node_budget;
  /// Restrict to graphs of diameter <= this. A ceiling of 2 also prunes the
  /// search, so total_connected is then unknown.
  std::optional<int> max_diameter;
  int jobs = 1;
  Strategy strategy = Strategy::orderly;
};

struct CensusResult {
  int n = 0;
  int k = 0;
  /// Connected graphs generated; empty when pruning hid part of the space.
  std::optional<std::uint64_t> total_connected;
  std::optional<int> d_min;
  std::uint64_t optima_count = 0;
  /// Sorted; filled only when requested.
  std::vector<CanonicalForm> optima;
  bool exhausted = false;
  /// diameter -> graphs; full mode only.
  std::map<int, std::uint64_t> histogram;
  std::uint64_t nodes = 0;

  CompletionRatio ratio() const { return completion_ratio(n, k); }
};

/// Cells whose exhaustive census is out of reach; the summary uses the
/// stochastic search for them.
inline bool census_infeasible(int n, int k) noexcept { return k >= 5 && n >= 16; }

namespace detail {

struct CensusWorker {
  std::optional<int> best;
  std::uint64_t best_count = 0;
  std::uint64_t total = 0;
  std::vector<CanonicalForm> optima;
  std::map<int, std::uint64_t> histogram;
};

}  // namespace detail

inline CensusResult min_diameter_census(const CensusQuery& q) {
  EnumerateOptions opts;
  opts.n = q.n;
  opts.k = q.k;
  opts.mode = q.mode;
  opts.strategy = q.strategy;
  opts.budget = q.budget;
  opts.max_diameter = q.max_diameter;
  opts.jobs = std::max(1, q.jobs);

  const int ceiling = q.max_diameter.value_or(max_vertices);
  std::vector<detail::CensusWorker> workers(opts.jobs);
  std::atomic<int> incumbent{ceiling};

  const auto visit = [&](int w, const Graph& g) {
    auto& s = workers[w];
    ++s.total;
    int d = 0;
    if (q.census == CensusMode::full) {
      d = detail::diameter_bounded(g.rows(), max_vertices);
      ++s.histogram[d];
      if (d > ceiling) return true;
    } else {
      const int limit = incumbent.load(std::memory_order_relaxed);
      d = detail::diameter_bounded(g.rows(), limit);
      if (d > limit) return true;
      int cur = limit;
      while (d < cur && !incumbent.compare_exchange_weak(cur, d)) {
      }
    }
    if (!s.best || d < *s.best) {
      s.best = d;
      s.best_count = 0;
      s.optima.clear();
    }
    if (d == *s.best) {
      ++s.best_count;
      if (q.store_optima) s.optima.push_back(canonical_form(g));
    }
    return true;
  };
  const EnumerateStats stats = enumerate_degree_constrained(opts, visit);

  CensusResult r;
  r.n = q.n;
  r.k = q.k;
  r.exhausted = stats.exhausted;
  r.nodes = stats.nodes;
  std::uint64_t total = 0;
  for (const auto& s : workers) {
    total += s.total;
    for (auto [d, c] : s.histogram) r.histogram[d] += c;
    if (s.best && (!r.d_min || *s.best < *r.d_min)) r.d_min = s.best;
  }
  if (!(q.max_diameter && *q.max_diameter <= 2)) r.total_connected = total;
  for (auto& s : workers) {
    if (!r.d_min || s.best != r.d_min) continue;
    r.optima_count += s.best_count;
    r.optima.insert(r.optima.end(), s.optima.begin(), s.optima.end());
  }
  std::sort(r.optima.begin(), r.optima.end());
  return r;
}

}  // namespace mindiam
