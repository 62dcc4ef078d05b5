#pragma once

// Minimal diameter and number of optimal graphs over a range of (n, k) cells.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mindiam/census.hpp"
#include "mindiam/graph.hpp"
#include "mindiam/search.hpp"

namespace mindiam {

struct SummaryOptions {
  std::uint64_t budget = default_node_budget;
  int jobs = 1;
  std::uint64_t search_attempts = 100'000;
  std::uint64_t seed = default_seed;
  /// Target diameter for cells handled by the stochastic search.
  int search_target_d = 2;
};

struct SummaryRow {
  int n = 0;
  int k = 0;
  std::optional<int> d;
  std::uint64_t count = 0;
  /// The count is a lower bound (search, or census cut by the budget).
  bool lower_bound = false;
  CompletionRatio c;
  bool searched = false;

  std::string count_text() const {
    if (!d) return "-";
    return (lower_bound ? ">=" : "") + std::to_string(count);
  }
};

inline SummaryRow summary_cell(int n, int k, const SummaryOptions& o) {
  SummaryRow row;
  row.n = n;
  row.k = k;
  row.c = completion_ratio(n, k);
  if (census_infeasible(n, k)) {
    SearchOptions so;
    so.n = n;
    so.k = k;
    so.target_d = o.search_target_d;
    so.attempts = o.search_attempts;
    so.seed = o.seed;
    const auto found = stochastic_low_diameter_search(so);
    row.searched = true;
    row.lower_bound = true;
    row.count = found.distinct_count();
    if (row.count > 0) row.d = o.search_target_d;
    return row;
  }
  CensusQuery q;
  q.n = n;
  q.k = k;
  q.census = CensusMode::optima_only;
  q.budget = o.budget;
  q.jobs = o.jobs;
  const auto r = min_diameter_census(q);
  row.d = r.d_min;
  row.count = r.optima_count;
  row.lower_bound = !r.exhausted;
  return row;
}

inline std::vector<SummaryRow> summary_table(int n_first, int n_last, const std::vector<int>& ks,
                                             const SummaryOptions& o = {}) {
  if (n_first < 3 || n_last > 20 || n_first > n_last) throw size_error("summary covers n in 3..20");
  std::vector<SummaryRow> rows;
  for (int k : ks) {
    if (k < 3 || k > 5) throw degree_error("summary covers k in 3..5");
    for (int n = n_first; n <= n_last; ++n) {
      if (k >= n) continue;
      rows.push_back(summary_cell(n, k, o));
    }
  }
  return rows;
}

}  // namespace mindiam
