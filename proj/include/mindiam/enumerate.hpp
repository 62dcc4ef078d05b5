#pragma once

// Isomorph-free generation of connected k-regular and k-quasi-regular graphs.
//
// Graphs are built row by row: vertex r receives all of its still missing
// neighbours among the vertices after it, then r+1 is processed. Two
// strategies share that engine:
//
//  * orderly: only the labelling whose upper-triangle bit string is
//    lexicographically largest is produced. Candidates with the same
//    adjacency to the finished rows are interchangeable, so only the lowest
//    ones of each class are tried, and every partial graph must already be
//    maximal on its finished rows. No dedup set is needed.
//  * leaf_dedup: every subset of candidates is tried and completed graphs are
//    deduplicated by canonical form. Much slower; kept as a cross-check.
//
// Both prune with the Erdos-Gallai test on the residual degrees.

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <thread>
#include <type_traits>
#include <unordered_set>
#include <vector>

#include "mindiam/canonical.hpp"
#include "mindiam/errors.hpp"
#include "mindiam/graph.hpp"

namespace mindiam {

inline constexpr std::uint64_t default_node_budget = 100'000'000;

enum class Strategy { orderly, leaf_dedup };

enum class DegreeMode { regular, quasi_regular };

inline DegreeMode degree_mode(int n, int k) noexcept {
  return needs_quasi_regular(n, k) ? DegreeMode::quasi_regular : DegreeMode::regular;
}

struct EnumerateOptions {
  int n = 0;
  int k = 0;
  /// Must agree with the parity of n*k when given.
  std::optional<DegreeMode> mode;
  Strategy strategy = Strategy::orderly;
  /// Search nodes (partial graphs) before giving up; 0 means unbounded.
  std::uint64_t budget = default_node_budget;
  /// Only 2 is used for pruning: partial graphs that cannot reach diameter
  /// <= 2 are cut. Other values are ignored by the generator.
  std::optional<int> max_diameter;
  int jobs = 1;
};

struct EnumerateStats {
  std::uint64_t nodes = 0;
  std::uint64_t emitted = 0;
  /// False when the budget ran out or the visitor stopped the run.
  bool exhausted = true;
  bool budget_exceeded = false;
};

inline void validate_degree_query(int n, int k, std::optional<DegreeMode> mode) {
  if (n < 1 || n > max_vertices) throw size_error("vertex count " + std::to_string(n) + " out of range");
  if (k < 1 || k >= n) {
    throw degree_error("degree " + std::to_string(k) + " impossible on " + std::to_string(n) + " vertices");
  }
  if (mode && *mode != degree_mode(n, k)) {
    throw parity_error(*mode == DegreeMode::regular ? "n*k is odd: no k-regular graph exists"
                                                    : "n*k is even: quasi-regular mode needs n and k odd");
  }
}

namespace detail {

/// Erdos-Gallai: is `deg[0..m)` the degree sequence of a simple graph?
inline bool graphical(std::array<int, 64> deg, int m) noexcept {
  int sum = 0;
  for (int i = 0; i < m; ++i) sum += deg[i];
  if (sum % 2 != 0) return false;
  if (sum == 0) return true;
  std::sort(deg.begin(), deg.begin() + m, std::greater<>());
  int lhs = 0;
  for (int t = 1; t <= m; ++t) {
    lhs += deg[t - 1];
    if (deg[t - 1] == 0) break;
    int rhs = t * (t - 1);
    for (int i = t; i < m; ++i) rhs += std::min(deg[i], t);
    if (lhs > rhs) return false;
  }
  return true;
}

/// Bits of positions [pos, pos+count) when position q is stored at bit 63-q.
inline constexpr Row run_mask(int pos, int count) noexcept {
  return (~Row{0} >> pos) ^ (~Row{0} >> (pos + count));
}

/// Is the identity labelling of the partial graph `adj` maximal, over all
/// relabellings, on the first `rows` rows of the upper triangle?
class PrefixMaxTest {
 public:
  PrefixMaxTest(const Row* adj, int n, int rows) : adj_(adj), n_(n), rows_(rows) {
    for (int v = 0; v < rows; ++v) {
      Row t = 0;
      for (Row r = adj[v] & ~low_mask(v + 1); r != 0; r &= r - 1) t |= Row{1} << (63 - std::countr_zero(r));
      target_[v] = t;
    }
  }

  bool holds() {
    std::array<Row, 64> cells{};
    cells[0] = low_mask(n_);
    return !beaten(0, cells.data(), 1);
  }

 private:
  bool twins(int a, int b) const noexcept { return (adj_[a] & ~bit(b)) == (adj_[b] & ~bit(a)); }

  // True if some ordering with the fixed positions 0..p-1 produces a larger
  // string. `cells` are the ordered cells of the unplaced vertices.
  bool beaten(int p, const Row* cells, int m) {
    std::array<std::uint8_t, 64> tried{};
    int tried_count = 0;
    for (Row first = cells[0]; first != 0; first &= first - 1) {
      const int u = std::countr_zero(first);
      bool redundant = false;
      for (int i = 0; i < tried_count && !redundant; ++i) redundant = twins(u, tried[i]);
      if (redundant) continue;
      tried[tried_count++] = static_cast<std::uint8_t>(u);

      const Row nu = adj_[u];
      const Row rest = cells[0] & ~bit(u);
      Row word = 0;
      int pos = p + 1;
      word |= run_mask(pos, std::popcount(nu & rest));
      pos += std::popcount(rest);
      for (int i = 1; i < m; ++i) {
        word |= run_mask(pos, std::popcount(nu & cells[i]));
        pos += std::popcount(cells[i]);
      }
      if (word > target_[p]) return true;
      if (word < target_[p] || p + 1 == rows_) continue;

      std::array<Row, 64> child{};
      int cm = 0;
      const auto split = [&](Row c) {
        if ((c & nu) != 0) child[cm++] = c & nu;
        if ((c & ~nu) != 0) child[cm++] = c & ~nu;
      };
      split(rest);
      for (int i = 1; i < m; ++i) split(cells[i]);
      if (cm == 0) continue;
      if (beaten(p + 1, child.data(), cm)) return true;
    }
    return false;
  }

  const Row* adj_;
  int n_;
  int rows_;
  std::array<Row, 64> target_{};
};

enum class Step { go, skip, abort };

/// Row-by-row generator. `Ctx` supplies
///   Step enter(int row)            -- called for every search node
///   bool emit(const Row* rows)     -- false stops the run
class RowGenerator {
 public:
  RowGenerator(int n, int k, Strategy strategy, std::optional<int> max_diameter)
      : n_(n), orderly_(strategy == Strategy::orderly), diameter_two_(max_diameter && *max_diameter <= 2) {
    for (int v = 0; v < n; ++v) target_[v] = k;
    if (needs_quasi_regular(n, k)) target_[0] = k + 1;
  }

  template <class Ctx>
  bool run(Ctx& ctx) {
    return row(0, ctx);
  }

 private:
  template <class Ctx>
  bool row(int r, Ctx& ctx) {
    if (r == n_) return ctx.emit(adj_.data());
    switch (ctx.enter(r)) {
      case Step::abort:
        return false;
      case Step::skip:
        return true;
      case Step::go:
        break;
    }
    const int need = target_[r] - degree_[r];
    if (need == 0) return finish_row(r, ctx);

    // Group candidates by their adjacency to rows 0..r-1.
    auto& members = members_[r];
    auto& starts = class_start_[r];
    int count = 0;
    int classes = 0;
    Row pending = 0;
    for (int q = r + 1; q < n_; ++q) {
      if (degree_[q] < target_[q]) pending |= bit(q);
    }
    if (std::popcount(pending) < need) return true;
    while (pending != 0) {
      const int q = std::countr_zero(pending);
      Row cls = bit(q);
      if (orderly_) {
        for (Row rest = pending & (pending - 1); rest != 0; rest &= rest - 1) {
          const int w = std::countr_zero(rest);
          if (adj_[w] == adj_[q]) cls |= bit(w);
        }
      }
      pending &= ~cls;
      starts[classes++] = static_cast<std::uint8_t>(count);
      for (; cls != 0; cls &= cls - 1) members[count++] = static_cast<std::uint8_t>(std::countr_zero(cls));
    }
    starts[classes] = static_cast<std::uint8_t>(count);
    class_count_[r] = classes;
    return choose(r, 0, need, ctx);
  }

  // Pick how many leading members of each class from `cls` on become
  // neighbours of r.
  template <class Ctx>
  bool choose(int r, int cls, int remaining, Ctx& ctx) {
    if (remaining == 0) return finish_row(r, ctx);
    const auto& starts = class_start_[r];
    const int classes = class_count_[r];
    if (cls == classes) return true;
    if (starts[classes] - starts[cls] < remaining) return true;
    const int size = starts[cls + 1] - starts[cls];
    const std::uint8_t* first = members_[r].data() + starts[cls];
    for (int take = std::min(size, remaining); take >= 0; --take) {
      for (int i = 0; i < take; ++i) link(r, first[i]);
      const bool keep_going = choose(r, cls + 1, remaining - take, ctx);
      for (int i = 0; i < take; ++i) unlink(r, first[i]);
      if (!keep_going) return false;
    }
    return true;
  }

  template <class Ctx>
  bool finish_row(int r, Ctx& ctx) {
    if (orderly_ && r + 1 < n_ && adj_[r + 1] == 0) return true;

    std::array<int, 64> residual{};
    Row open = 0;
    for (int q = r + 1; q < n_; ++q) {
      residual[q - r - 1] = target_[q] - degree_[q];
      if (residual[q - r - 1] > 0) open |= bit(q);
    }
    if (!graphical(residual, n_ - r - 1)) return true;
    if (diameter_two_ && !diameter_two_reachable(r, open)) return true;
    if (orderly_ && r + 1 < n_ && !PrefixMaxTest(adj_.data(), n_, r + 1).holds()) return true;
    return row(r + 1, ctx);
  }

  // Rows 0..r are final. A finished vertex u and a non-neighbour v need a
  // common neighbour, which must lie in N(u); if v is still open it may
  // still gain an edge to an open vertex of N(u).
  bool diameter_two_reachable(int r, Row open) const noexcept {
    for (int u = 0; u <= r; ++u) {
      for (int v = u + 1; v < n_; ++v) {
        if ((adj_[u] >> v) & 1U) continue;
        if ((adj_[u] & adj_[v]) != 0) continue;
        if (((open >> v) & 1U) && (adj_[u] & open & ~bit(v) & ~adj_[v]) != 0) continue;
        return false;
      }
    }
    return true;
  }

  void link(int a, int b) noexcept {
    adj_[a] |= bit(b);
    adj_[b] |= bit(a);
    ++degree_[a];
    ++degree_[b];
  }

  void unlink(int a, int b) noexcept {
    adj_[a] &= ~bit(b);
    adj_[b] &= ~bit(a);
    --degree_[a];
    --degree_[b];
  }

  int n_;
  bool orderly_;
  bool diameter_two_;
  std::array<int, 64> target_{};
  std::array<int, 64> degree_{};
  std::array<Row, 64> adj_{};
  std::array<std::array<std::uint8_t, 64>, 64> members_{};
  std::array<std::array<std::uint8_t, 65>, 64> class_start_{};
  std::array<int, 64> class_count_{};
};

/// Row at which the search tree is dealt out to workers.
inline int split_row(int n) noexcept { return std::min(4, n - 1); }

struct SharedRun {
  std::uint64_t budget = 0;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<std::uint64_t> emitted{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> budget_exceeded{false};
  std::mutex seen_mutex;
  std::unordered_set<std::string> seen;
};

template <class Visit>
class WorkerContext {
 public:
  WorkerContext(SharedRun& shared, Visit& visit, int worker, int jobs, int split, int n, bool dedup)
      : shared_(shared), visit_(visit), worker_(worker), jobs_(jobs), split_(split), n_(n), dedup_(dedup) {}

  Step enter(int r) {
    if (shared_.stop.load(std::memory_order_relaxed)) return Step::abort;
    if (r == split_ && jobs_ > 1) {
      if (split_index_++ % static_cast<std::uint64_t>(jobs_) != static_cast<std::uint64_t>(worker_)) return Step::skip;
    }
    // Nodes above the split are walked by every worker but counted once.
    if (r >= split_ || worker_ == 0) {
      const auto seen = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
      if (shared_.budget != 0 && seen > shared_.budget) {
        shared_.budget_exceeded = true;
        shared_.stop = true;
        return Step::abort;
      }
    }
    return Step::go;
  }

  bool emit(const Row* rows) {
    const std::span<const Row> view(rows, static_cast<std::size_t>(n_));
    Graph g = Graph::from_rows(view);
    if (dedup_) {
      if (!is_connected(g)) return true;
      std::string key = encode_graph6(canonical_graph(g));
      std::lock_guard lock(shared_.seen_mutex);
      if (!shared_.seen.insert(std::move(key)).second) return true;
    }
    shared_.emitted.fetch_add(1, std::memory_order_relaxed);
    if (!visit_(worker_, g)) {
      shared_.stop = true;
      return false;
    }
    return true;
  }

 private:
  SharedRun& shared_;
  Visit& visit_;
  int worker_;
  int jobs_;
  int split_;
  int n_;
  bool dedup_;
  std::uint64_t split_index_ = 0;
};

}  // namespace detail

/// Calls `visit(worker, graph)` once per isomorphism class of connected
/// graphs with degree sequence k^n (or (k+1) k^(n-1) when n*k is odd).
/// With jobs > 1 the visitor runs concurrently on `jobs` threads, each
/// passing its own worker index. Returning false from the visitor stops the
/// run.
template <class Visit>
EnumerateStats enumerate_degree_constrained(const EnumerateOptions& options, Visit&& visit) {
  validate_degree_query(options.n, options.k, options.mode);
  const int jobs = std::max(1, options.jobs);
  detail::SharedRun shared;
  shared.budget = options.budget;
  const int split = detail::split_row(options.n);
  const bool dedup = options.strategy == Strategy::leaf_dedup;

  const auto work = [&](int worker) {
    detail::WorkerContext<std::remove_reference_t<Visit>> ctx(shared, visit, worker, jobs, split, options.n, dedup);
    auto gen = std::make_unique<detail::RowGenerator>(options.n, options.k, options.strategy, options.max_diameter);
    gen->run(ctx);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    threads.reserve(jobs);
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
    for (auto& t : threads) t.join();
  }
  EnumerateStats stats;
  stats.nodes = std::min(shared.nodes.load(), options.budget == 0 ? shared.nodes.load() : options.budget);
  stats.emitted = shared.emitted.load();
  stats.budget_exceeded = shared.budget_exceeded.load();
  stats.exhausted = !shared.stop.load();
  return stats;
}

/// Collects every generated graph (single worker).
inline std::vector<Graph> enumerate_graphs(EnumerateOptions options) {
  options.jobs = 1;
  std::vector<Graph> out;
  const auto stats = enumerate_degree_constrained(options, [&](int, const Graph& g) {
    out.push_back(g);
    return true;
  });
  if (stats.budget_exceeded) throw error("node budget exceeded while enumerating");
  return out;
}

}  // namespace mindiam
