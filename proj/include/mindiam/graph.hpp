#pragma once

// Small undirected simple graphs stored as bit rows, plus the degree,
// distance and regularity queries everything else is built on.

#include <algorithm>
#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "mindiam/errors.hpp"

namespace mindiam {

inline constexpr int max_vertices = 62;

using Row = std::uint64_t;

inline constexpr Row bit(int v) noexcept { return Row{1} << v; }

/// Mask of the vertices 0..count-1.
inline constexpr Row low_mask(int count) noexcept {
  return count >= 64 ? ~Row{0} : bit(count) - 1;
}

/// 0-based vertex pair with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  explicit Graph(int n) : n_(n) {
    if (n < 1 || n > max_vertices) {
      throw size_error("vertex count " + std::to_string(n) +
                       " outside 1.." + std::to_string(max_vertices));
    }
  }

  int order() const noexcept { return n_; }

  Row row(int v) const noexcept { return rows_[v]; }

  std::span<const Row> rows() const noexcept { return {rows_.data(), static_cast<std::size_t>(n_)}; }

  bool adjacent(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    return (rows_[i] >> j) & 1U;
  }

  /// Idempotent.
  Graph& add_edge(int i, int j) {
    check_pair(i, j);
    rows_[i] |= bit(j);
    rows_[j] |= bit(i);
    return *this;
  }

  Graph& remove_edge(int i, int j) {
    check_pair(i, j);
    rows_[i] &= ~bit(j);
    rows_[j] &= ~bit(i);
    return *this;
  }

  int degree(int v) const {
    check_vertex(v);
    return std::popcount(rows_[v]);
  }

  int edge_count() const noexcept {
    int sum = 0;
    for (int v = 0; v < n_; ++v) sum += std::popcount(rows_[v]);
    return sum / 2;
  }

  /// Edges in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u) {
      for (Row r = rows_[u] & ~low_mask(u + 1); r != 0; r &= r - 1) {
        out.push_back({u, std::countr_zero(r)});
      }
    }
    return out;
  }

  friend bool operator==(const Graph& a, const Graph& b) noexcept {
    return a.n_ == b.n_ && std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
  }

  /// Build from a bit-row array without validation; rows must be symmetric
  /// and loop free.
  static Graph from_rows(std::span<const Row> rows) {
    Graph g(static_cast<int>(rows.size()));
    std::copy(rows.begin(), rows.end(), g.rows_.begin());
    return g;
  }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) {
      throw index_error("vertex " + std::to_string(v) + " outside 0.." + std::to_string(n_ - 1));
    }
  }

  void check_pair(int i, int j) const {
    check_vertex(i);
    check_vertex(j);
    if (i == j) throw loop_error("loop at vertex " + std::to_string(i));
  }

  int n_;
  std::array<Row, max_vertices> rows_{};
};

// Construction helpers.

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

inline Graph cycle_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

/// `perm[v]` is the new label of vertex v.
inline Graph relabel(const Graph& g, std::span<const int> perm) {
  const int n = g.order();
  if (static_cast<int>(perm.size()) != n) throw size_error("permutation size mismatch");
  Graph out(n);
  for (const Edge& e : g.edges()) out.add_edge(perm[e.u], perm[e.v]);
  return out;
}

// ---------------------------------------------------------------------------
// Degrees and regularity

using DegreeSequence = std::vector<int>;

inline DegreeSequence degree_sequence(const Graph& g) {
  DegreeSequence d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = std::popcount(g.row(v));
  return d;
}

inline bool is_k_regular(const Graph& g, int k) {
  for (int v = 0; v < g.order(); ++v)
    if (std::popcount(g.row(v)) != k) return false;
  return true;
}

/// Exactly one vertex of degree k+1, every other vertex of degree k.
inline bool is_k_quasi_regular(const Graph& g, int k) {
  int heavy = 0;
  for (int v = 0; v < g.order(); ++v) {
    const int d = std::popcount(g.row(v));
    if (d == k + 1) {
      ++heavy;
    } else if (d != k) {
      return false;
    }
  }
  return heavy == 1;
}

/// True when n*k is odd, i.e. no k-regular graph on n vertices exists and the
/// quasi-regular degree sequence is used instead.
inline constexpr bool needs_quasi_regular(int n, int k) noexcept { return (n % 2 == 1) && (k % 2 == 1); }

/// Regularity predicate appropriate for (n, k).
inline bool meets_degree_contract(const Graph& g, int k) {
  return needs_quasi_regular(g.order(), k) ? is_k_quasi_regular(g, k) : is_k_regular(g, k);
}

// ---------------------------------------------------------------------------
// Distances

/// Hop count with an explicit unreachable state.
class Hops {
 public:
  constexpr Hops() = default;
  constexpr explicit Hops(unsigned value) : value_(value) {}

  static constexpr Hops infinite() noexcept {
    Hops h;
    h.value_ = kInfinite;
    return h;
  }

  constexpr bool finite() const noexcept { return value_ != kInfinite; }

  /// Throws when infinite.
  constexpr unsigned value() const {
    if (!finite()) throw error("distance is infinite (graph disconnected)");
    return value_;
  }

  friend constexpr auto operator<=>(const Hops&, const Hops&) = default;

  std::string str() const { return finite() ? std::to_string(value_) : std::string("inf"); }

  friend std::ostream& operator<<(std::ostream& os, const Hops& h) { return os << h.str(); }

 private:
  static constexpr unsigned kInfinite = std::numeric_limits<unsigned>::max();
  unsigned value_ = 0;
};

inline std::vector<Hops> bfs_distances(const Graph& g, int source) {
  const int n = g.order();
  if (source < 0 || source >= n) throw index_error("source vertex out of range");
  std::vector<Hops> dist(n, Hops::infinite());
  Row seen = bit(source);
  Row frontier = seen;
  unsigned level = 0;
  while (frontier != 0) {
    for (Row f = frontier; f != 0; f &= f - 1) dist[std::countr_zero(f)] = Hops(level);
    Row next = 0;
    for (Row f = frontier; f != 0; f &= f - 1) next |= g.row(std::countr_zero(f));
    next &= ~seen;
    seen |= next;
    frontier = next;
    ++level;
  }
  return dist;
}

using DistanceMatrix = std::vector<std::vector<Hops>>;

inline DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix m;
  m.reserve(g.order());
  for (int v = 0; v < g.order(); ++v) m.push_back(bfs_distances(g, v));
  return m;
}

namespace detail {

/// Eccentricity of `source` as a level count; returns `limit + 1` as soon as
/// the BFS needs more than `limit` levels, and -1 if some vertex is unreachable.
inline int eccentricity_bounded(std::span<const Row> rows, int source, int limit) noexcept {
  const int n = static_cast<int>(rows.size());
  const Row all = low_mask(n);
  Row seen = bit(source);
  Row frontier = seen;
  int level = 0;
  while (seen != all) {
    Row next = 0;
    for (Row f = frontier; f != 0; f &= f - 1) next |= rows[std::countr_zero(f)];
    next &= ~seen;
    if (next == 0) return -1;
    seen |= next;
    frontier = next;
    if (++level > limit) return limit + 1;
  }
  return level;
}

/// Diameter as int: -1 when disconnected, `limit + 1` once it exceeds `limit`.
inline int diameter_bounded(std::span<const Row> rows, int limit) noexcept {
  int best = 0;
  for (int v = 0; v < static_cast<int>(rows.size()); ++v) {
    const int e = eccentricity_bounded(rows, v, limit);
    if (e < 0) return -1;
    best = std::max(best, e);
    if (best > limit) return best;
  }
  return best;
}

}  // namespace detail

inline bool is_connected(const Graph& g) {
  return detail::eccentricity_bounded(g.rows(), 0, max_vertices) >= 0;
}

inline Hops eccentricity(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw index_error("vertex out of range");
  const int e = detail::eccentricity_bounded(g.rows(), v, max_vertices);
  return e < 0 ? Hops::infinite() : Hops(static_cast<unsigned>(e));
}

/// Longest shortest path; infinite iff the graph is disconnected.
inline Hops diameter(const Graph& g) {
  const int d = detail::diameter_bounded(g.rows(), max_vertices);
  return d < 0 ? Hops::infinite() : Hops(static_cast<unsigned>(d));
}

// ---------------------------------------------------------------------------
// Comparison counts

inline int pair_count(int n) noexcept { return n * (n - 1) / 2; }

/// nk/2 for regular cells, (nk+1)/2 when n and k are both odd.
inline int required_edge_count(int n, int k) {
  if (n < 1 || n > max_vertices) throw size_error("vertex count out of range");
  if (k < 0 || k >= n) {
    throw degree_error("degree " + std::to_string(k) + " needs more than " + std::to_string(n) +
                       " vertices");
  }
  return needs_quasi_regular(n, k) ? (n * k + 1) / 2 : n * k / 2;
}

/// Elicited comparisons over all possible comparisons, kept unreduced so that
/// it prints the same way as "15/45".
struct CompletionRatio {
  int comparisons = 0;
  int possible = 1;

  double value() const noexcept { return static_cast<double>(comparisons) / possible; }

  /// Exact rational equality.
  friend bool operator==(const CompletionRatio& a, const CompletionRatio& b) noexcept {
    return static_cast<std::int64_t>(a.comparisons) * b.possible ==
           static_cast<std::int64_t>(b.comparisons) * a.possible;
  }

  friend std::strong_ordering operator<=>(const CompletionRatio& a, const CompletionRatio& b) noexcept {
    return static_cast<std::int64_t>(a.comparisons) * b.possible <=>
           static_cast<std::int64_t>(b.comparisons) * a.possible;
  }

  std::string fraction() const { return std::to_string(comparisons) + "/" + std::to_string(possible); }
};

inline CompletionRatio completion_ratio(int n, int k) {
  if (k < 1) throw degree_error("degree must be at least 1");
  return {required_edge_count(n, k), pair_count(n)};
}

// ---------------------------------------------------------------------------
// Edge-list text: one "i-j" per line, 1-based; optional "n=<N>" header.

inline Graph parse_edge_list(std::string_view text) {
  std::vector<std::pair<int, int>> pairs;
  int declared = 0;
  int max_index = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    const std::string body = line.substr(first, last - first + 1);
    const auto fail = [&] {
      return parse_error("edge list line " + std::to_string(line_no) + ": '" + body + "'");
    };
    if (body.rfind("n=", 0) == 0) {
      try {
        std::size_t used = 0;
        declared = std::stoi(body.substr(2), &used);
        if (used != body.size() - 2) throw fail();
      } catch (const std::logic_error&) {
        throw fail();
      }
      continue;
    }
    const auto dash = body.find('-');
    if (dash == std::string::npos || dash == 0) throw fail();
    int a = 0;
    int b = 0;
    try {
      std::size_t ua = 0;
      std::size_t ub = 0;
      const std::string sa = body.substr(0, dash);
      const std::string sb = body.substr(dash + 1);
      a = std::stoi(sa, &ua);
      b = std::stoi(sb, &ub);
      if (ua != sa.size() || ub != sb.size()) throw fail();
    } catch (const std::logic_error&) {
      throw fail();
    }
    if (a < 1 || b < 1) throw index_error("edge list indices are 1-based: '" + body + "'");
    pairs.emplace_back(a, b);
    max_index = std::max({max_index, a, b});
  }
  const int n = declared > 0 ? declared : max_index;
  if (n == 0) throw parse_error("edge list is empty and has no n= header");
  if (max_index > n) throw index_error("edge index " + std::to_string(max_index) + " exceeds n=" + std::to_string(n));
  Graph g(n);
  for (auto [a, b] : pairs) g.add_edge(a - 1, b - 1);
  return g;
}

/// Inverse of parse_edge_list; the header is written only when some vertex
/// is isolated.
inline std::string format_edge_list(const Graph& g) {
  std::string out;
  bool isolated = false;
  for (int v = 0; v < g.order(); ++v) isolated = isolated || g.row(v) == 0;
  if (isolated) out += "n=" + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1) + "\n";
  }
  return out;
}

}  // namespace mindiam
