#pragma once

// Seeded random search for low-diameter k-(quasi-)regular graphs: random
// pairing-model graphs improved by degree-preserving double-edge swaps.

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "mindiam/canonical.hpp"
#include "mindiam/enumerate.hpp"
#include "mindiam/graph.hpp"

namespace mindiam {

inline constexpr std::uint64_t default_seed = 1;

struct SearchOptions {
  int n = 0;
  int k = 0;
  int target_d = 2;
  /// Proposed swaps, including rejected ones.
  std::uint64_t attempts = 100'000;
  /// Stop once this many distinct graphs are known; 0 runs all attempts.
  std::size_t distinct_goal = 0;
  std::uint64_t seed = default_seed;
  /// Proposals without strict improvement before starting over.
  std::uint64_t stall_limit = 2'000;
};

struct SearchResult {
  /// Distinct graphs with diameter <= target, in canonical-form order.
  std::vector<CanonicalForm> graphs;
  std::uint64_t attempts = 0;
  std::uint64_t restarts = 0;
  std::uint64_t seed = 0;

  std::size_t distinct_count() const noexcept { return graphs.size(); }
};

namespace detail {

/// Uniform integer in [0, bound) from raw generator output.
inline std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = 0;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// Pairing model with rejection of loops and multi-edges.
inline Graph random_degree_graph(int n, int k, std::mt19937_64& rng) {
  std::vector<int> stubs;
  for (int v = 0; v < n; ++v) {
    const int d = (v == 0 && needs_quasi_regular(n, k)) ? k + 1 : k;
    stubs.insert(stubs.end(), d, v);
  }
  for (;;) {
    for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[bounded(rng, i)]);
    Graph g(n);
    bool simple = true;
    for (std::size_t i = 0; i + 1 < stubs.size() && simple; i += 2) {
      const int a = stubs[i];
      const int b = stubs[i + 1];
      simple = a != b && !((g.row(a) >> b) & 1U);
      if (simple) g.add_edge(a, b);
    }
    if (simple) return g;
  }
}

/// Smaller is better, compared field by field.
struct SwapScore {
  int diameter = 0;  // n when disconnected
  int extremal_pairs = 0;
  int triangle_weight = 0;
  int spread = 0;  // sum of squared common-neighbour counts over non-edges

  friend auto operator<=>(const SwapScore&, const SwapScore&) = default;
};

inline SwapScore swap_score(std::span<const Row> rows) {
  const int n = static_cast<int>(rows.size());
  const Row all = low_mask(n);
  SwapScore s;
  int unreachable = 0;
  std::vector<int> at_level(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 0; v < n; ++v) {
    Row seen = bit(v);
    Row frontier = seen;
    int level = 0;
    while (frontier != 0 && seen != all) {
      Row next = 0;
      for (Row f = frontier; f != 0; f &= f - 1) next |= rows[std::countr_zero(f)];
      next &= ~seen;
      if (next == 0) break;
      ++level;
      seen |= next;
      frontier = next;
      if (level > s.diameter) {
        s.diameter = level;
        std::fill(at_level.begin(), at_level.end(), 0);
      }
      if (level == s.diameter) at_level[level] += std::popcount(next);
    }
    unreachable += n - std::popcount(seen);
  }
  if (unreachable > 0) {
    s.diameter = n;
    s.extremal_pairs = unreachable / 2;
  } else {
    s.extremal_pairs = at_level[s.diameter] / 2;
  }
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const int c = std::popcount(rows[u] & rows[v]);
      if ((rows[u] >> v) & 1U) {
        s.triangle_weight += c;
      } else {
        s.spread += c * c;
      }
    }
  }
  return s;
}

}  // namespace detail

inline SearchResult stochastic_low_diameter_search(const SearchOptions& o) {
  validate_degree_query(o.n, o.k, std::nullopt);
  std::mt19937_64 rng(o.seed);
  SearchResult result;
  result.seed = o.seed;
  std::set<CanonicalForm> found;

  const auto record = [&](const Graph& g, const detail::SwapScore& score) {
    if (score.diameter > o.target_d) return;
    // Re-check independently of the score before reporting.
    const Hops d = diameter(g);
    if (!d.finite() || static_cast<int>(d.value()) > o.target_d || !meets_degree_contract(g, o.k)) return;
    found.insert(canonical_form(g));
  };
  const auto goal_met = [&] { return o.distinct_goal != 0 && found.size() >= o.distinct_goal; };

  while (result.attempts < o.attempts && !goal_met()) {
    Graph g = detail::random_degree_graph(o.n, o.k, rng);
    auto score = detail::swap_score(g.rows());
    record(g, score);
    std::uint64_t since_improvement = 0;
    while (result.attempts < o.attempts && since_improvement < o.stall_limit && !goal_met()) {
      ++result.attempts;
      ++since_improvement;
      const auto edges = g.edges();
      const auto& e1 = edges[detail::bounded(rng, edges.size())];
      const auto& e2 = edges[detail::bounded(rng, edges.size())];
      int a = e1.u, b = e1.v, c = e2.u, d = e2.v;
      if (detail::bounded(rng, 2) == 1) std::swap(c, d);
      if (a == c || a == d || b == c || b == d) continue;
      if (g.adjacent(a, c) || g.adjacent(b, d)) continue;
      Graph next = g;
      next.remove_edge(a, b).remove_edge(c, d).add_edge(a, c).add_edge(b, d);
      const auto next_score = detail::swap_score(next.rows());
      if (next_score > score) continue;
      if (next_score < score) since_improvement = 0;
      g = next;
      score = next_score;
      record(g, score);
    }
    ++result.restarts;
  }
  result.graphs.assign(found.begin(), found.end());
  return result;
}

}  // namespace mindiam
