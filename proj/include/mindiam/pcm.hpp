#pragma once

// Incomplete pairwise comparison matrices: which comparisons are known, the
// graph they form, and which comparisons to ask for.

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mindiam/catalog.hpp"
#include "mindiam/census.hpp"
#include "mindiam/errors.hpp"
#include "mindiam/graph.hpp"
#include "mindiam/graph6.hpp"

namespace mindiam {

/// Which entries of an n x n comparison matrix are known.
struct PcmMask {
  int n = 0;
  std::vector<std::vector<bool>> known;

  explicit PcmMask(int size = 0) : n(size), known(size, std::vector<bool>(size, false)) {
    for (int i = 0; i < size; ++i) known[i][i] = true;
  }
};

/// Comparisons to elicit: 1-based pairs (i < j) in lexicographic order.
struct FillingPattern {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;

  friend bool operator==(const FillingPattern&, const FillingPattern&) = default;
};

/// Header line "N" or "n=N", then N rows over {'1', '0', 'x'}; whitespace
/// inside rows is ignored. '1' is a known entry.
inline PcmMask parse_mask(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::vector<std::string> rows;
  while (std::getline(in, line)) {
    line.erase(std::remove_if(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }), line.end());
    if (!line.empty()) rows.push_back(line);
  }
  if (rows.empty()) throw parse_error("mask is empty");
  std::string header = rows.front();
  if (header.rfind("n=", 0) == 0) header = header.substr(2);
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(header, &used);
    if (used != header.size()) throw parse_error("bad mask header '" + rows.front() + "'");
  } catch (const std::logic_error&) {
    throw parse_error("bad mask header '" + rows.front() + "'");
  }
  if (n < 1 || n > max_vertices) throw size_error("mask size " + std::to_string(n) + " out of range");
  if (static_cast<int>(rows.size()) - 1 != n) {
    throw parse_error("mask declares " + std::to_string(n) + " rows but has " + std::to_string(rows.size() - 1));
  }
  PcmMask m(n);
  for (int i = 0; i < n; ++i) {
    const std::string& row = rows[i + 1];
    if (static_cast<int>(row.size()) != n) throw parse_error("mask row " + std::to_string(i + 1) + " has wrong length");
    for (int j = 0; j < n; ++j) {
      const char c = row[j];
      if (c != '1' && c != '0' && c != 'x') throw parse_error(std::string("mask symbol '") + c + "' not in {1,0,x}");
      m.known[i][j] = c == '1';
    }
    if (!m.known[i][i]) throw parse_error("mask diagonal entry " + std::to_string(i + 1) + " must be 1");
  }
  return m;
}

inline std::string format_mask(const PcmMask& m) {
  std::string out = std::to_string(m.n) + "\n";
  for (int i = 0; i < m.n; ++i) {
    for (int j = 0; j < m.n; ++j) out += m.known[i][j] ? '1' : 'x';
    out += '\n';
  }
  return out;
}

inline Graph graph_from_mask(const PcmMask& m) {
  Graph g(m.n);
  for (int i = 0; i < m.n; ++i) {
    if (!m.known[i][i]) throw parse_error("mask diagonal entry " + std::to_string(i + 1) + " must be known");
    for (int j = i + 1; j < m.n; ++j) {
      if (m.known[i][j] != m.known[j][i]) {
        throw reciprocity_error("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                ") is known but its reciprocal is not");
      }
      if (m.known[i][j]) g.add_edge(i, j);
    }
  }
  return g;
}

inline FillingPattern pattern_from_graph(const Graph& g) {
  if (!is_connected(g)) throw connectivity_error("comparison graph is not connected");
  FillingPattern p;
  p.n = g.order();
  for (const Edge& e : g.edges()) p.pairs.emplace_back(e.u + 1, e.v + 1);
  return p;
}

inline Graph graph_from_pattern(const FillingPattern& p) {
  Graph g(p.n);
  for (auto [i, j] : p.pairs) g.add_edge(i - 1, j - 1);
  return g;
}

inline PcmMask mask_from_pattern(const FillingPattern& p) {
  PcmMask m(p.n);
  for (auto [i, j] : p.pairs) {
    if (i < 1 || j < 1 || i > p.n || j > p.n) throw index_error("pattern pair out of range");
    m.known[i - 1][j - 1] = true;
    m.known[j - 1][i - 1] = true;
  }
  return m;
}

inline std::string pattern_csv(const FillingPattern& p) {
  std::string out = "i,j\n";
  for (auto [i, j] : p.pairs) out += std::to_string(i) + "," + std::to_string(j) + "\n";
  return out;
}

/// '*' above the diagonal and 'o' below for a requested comparison.
inline std::string pattern_matrix(const FillingPattern& p) {
  std::vector<std::string> grid(p.n, std::string(p.n, '.'));
  for (auto [i, j] : p.pairs) {
    grid[i - 1][j - 1] = '*';
    grid[j - 1][i - 1] = 'o';
  }
  std::string out;
  for (const auto& row : grid) out += row + "\n";
  return out;
}

inline std::string pattern_graph6(const FillingPattern& p) { return encode_graph6(graph_from_pattern(p)); }

// ---------------------------------------------------------------------------
// Recommendation

inline constexpr int min_items = 3;
inline constexpr int max_items = 20;

/// A degree that can be asked for, with its best known diameter.
struct FrontierPoint {
  int k = 0;
  int d = 0;
  int edges = 0;
  /// A concrete pattern is on file (catalog graph or complete graph).
  bool has_pattern = false;

  friend bool operator==(const FrontierPoint&, const FrontierPoint&) = default;
};

/// Constraints cannot be met; carries what is achievable.
class frontier_error : public error {
 public:
  frontier_error(const std::string& what, std::vector<FrontierPoint> frontier)
      : error(what), frontier_(std::move(frontier)) {}

  const std::vector<FrontierPoint>& frontier() const noexcept { return frontier_; }

 private:
  std::vector<FrontierPoint> frontier_;
};

/// Smallest diameter of a connected k-(quasi-)regular graph on n vertices,
/// as far as it is established for 3 <= n <= 20.
inline std::optional<int> known_min_diameter(int n, int k) {
  if (k >= n || k < 1) return std::nullopt;
  if (k == n - 1) return 1;
  if (const auto* e = find_entry(n, k)) return e->d_claimed;
  if (k == 4 && n >= 16 && n <= max_items) return 3;
  // Below the covered ranges a k-1 graph of diameter 2 exists; adding degree
  // cannot raise the minimum and the graph is not complete.
  if (k == 4 && n <= 10) return 2;
  if (k == 5 && n <= 15) return 2;
  return std::nullopt;
}

inline std::vector<int> candidate_degrees(int n) {
  std::vector<int> ks;
  if (n - 1 < 3) ks.push_back(n - 1);
  for (int k = 3; k <= 5; ++k) {
    if (k < n) ks.push_back(k);
  }
  return ks;
}

inline std::vector<FrontierPoint> feasibility_frontier(int n) {
  std::vector<FrontierPoint> out;
  for (int k : candidate_degrees(n)) {
    const auto d = known_min_diameter(n, k);
    if (!d) continue;
    out.push_back({k, *d, required_edge_count(n, k), k == n - 1 || find_entry(n, k) != nullptr});
  }
  return out;
}

struct RecommendQuery {
  int n = 0;
  std::optional<int> max_diameter;
  std::optional<int> max_comparisons;
  /// Use the census optimum with the smallest canonical form instead of the
  /// catalog graph.
  bool prefer_census_optimum = false;
};

struct Recommendation {
  int n = 0;
  int chosen_k = 0;
  int expected_d = 0;
  FillingPattern pattern;
  CompletionRatio c;
  std::string source;
  std::string rationale;
};

inline Recommendation recommend(const RecommendQuery& q) {
  if (q.n < min_items || q.n > max_items) {
    throw size_error("recommendations cover " + std::to_string(min_items) + ".." + std::to_string(max_items) +
                     " items, got " + std::to_string(q.n));
  }
  const auto frontier = feasibility_frontier(q.n);
  const auto within_budget = [&](const FrontierPoint& p) {
    return !q.max_comparisons || p.edges <= *q.max_comparisons;
  };

  std::optional<FrontierPoint> pick;
  if (q.max_diameter) {
    for (const auto& p : frontier) {
      if (p.has_pattern && p.d <= *q.max_diameter && within_budget(p)) {
        pick = p;
        break;
      }
    }
  } else if (q.max_comparisons) {
    // Best diameter the budget buys, then the fewest comparisons.
    for (const auto& p : frontier) {
      if (!p.has_pattern || !within_budget(p)) continue;
      if (!pick || p.d < pick->d) pick = p;
    }
  } else {
    const auto base = std::find_if(frontier.begin(), frontier.end(), [](const FrontierPoint& p) { return p.has_pattern; });
    if (base != frontier.end()) pick = *base;
  }

  if (!pick) {
    std::string msg = "no known pattern for n=" + std::to_string(q.n);
    if (q.max_diameter) msg += " with diameter <= " + std::to_string(*q.max_diameter);
    if (q.max_comparisons) msg += " within " + std::to_string(*q.max_comparisons) + " comparisons";
    msg += "; achievable (k, d, comparisons):";
    for (const auto& p : frontier) {
      msg += " (" + std::to_string(p.k) + ", " + std::to_string(p.d) + ", " + std::to_string(p.edges) + ")";
    }
    throw frontier_error(msg, frontier);
  }

  Recommendation r;
  r.n = q.n;
  r.chosen_k = pick->k;
  r.expected_d = pick->d;
  r.c = completion_ratio(q.n, pick->k);
  Graph g(q.n);
  if (pick->k == q.n - 1) {
    g = complete_graph(q.n);
    r.source = "complete graph";
  } else if (q.prefer_census_optimum && !census_infeasible(q.n, pick->k)) {
    CensusQuery cq;
    cq.n = q.n;
    cq.k = pick->k;
    cq.census = CensusMode::optima_only;
    cq.store_optima = true;
    cq.max_diameter = pick->d;
    cq.budget = 0;
    const auto result = min_diameter_census(cq);
    if (result.optima.empty()) throw error("census found no optimum for a catalog cell");
    g = result.optima.front().graph();
    r.source = "census optimum";
  } else {
    const auto& e = lookup(q.n, pick->k);
    g = e.graph;
    r.source = e.name.empty() ? std::string("catalog") : "catalog: " + e.name;
  }
  r.pattern = pattern_from_graph(g);

  std::ostringstream why;
  why << "k=" << pick->k << " reaches diameter " << pick->d << " with " << pick->edges << " of "
      << pair_count(q.n) << " comparisons";
  for (const auto& p : frontier) {
    if (p.k < pick->k && p.has_pattern) {
      why << "; k=" << p.k << " would need only " << p.edges << " but gives diameter " << p.d;
      break;
    }
  }
  for (const auto& p : frontier) {
    if (p.k > pick->k && p.d < pick->d) {
      why << "; k=" << p.k << " lowers the diameter to " << p.d << " for " << p.edges << " comparisons";
      break;
    }
  }
  r.rationale = why.str();
  return r;
}

}  // namespace mindiam
