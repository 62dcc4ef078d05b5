#pragma once

// Canonical labeling by equitable-partition refinement and exhaustive
// individualization. Every leaf of the search tree yields a relabeled
// adjacency code; the smallest code defines the canonical form. Subtrees are
// only skipped when an automorphism that fixes the current prefix maps them
// onto an explored sibling, so the minimum is never lost.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "mindiam/graph.hpp"
#include "mindiam/graph6.hpp"

namespace mindiam {

/// Isomorphism-invariant identifier: the graph6 text of the canonically
/// relabeled graph.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::string graph6) : graph6_(std::move(graph6)) {}

  const std::string& graph6() const noexcept { return graph6_; }
  Graph graph() const { return decode_graph6(graph6_); }

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  std::string graph6_;
};

namespace detail {

using Lab = std::array<std::uint8_t, 64>;
using Code = std::array<Row, 64>;

struct Partition {
  Lab lab{};                       // vertex at each position
  std::array<std::uint8_t, 64> len{};  // cell length at a cell start, 0 elsewhere
  int cells = 0;
};

class UnionFind {
 public:
  explicit UnionFind(int n) {
    for (int i = 0; i < n; ++i) parent_[i] = static_cast<std::uint8_t>(i);
  }
  int find(int x) noexcept {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) noexcept {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = static_cast<std::uint8_t>(std::min(a, b));
  }

 private:
  std::array<std::uint8_t, 64> parent_{};
};

class CanonicalSearch {
 public:
  CanonicalSearch(std::span<const Row> rows, std::span<const int> colors)
      : rows_(rows), n_(static_cast<int>(rows.size())) {
    find_twins(colors);
    Partition root = initial_partition(colors);
    std::array<std::uint8_t, 64> queue{};
    int qlen = 0;
    for (int c = 0; c < n_; c += root.len[c]) queue[qlen++] = static_cast<std::uint8_t>(c);
    refine(root, queue, qlen);
    search(root, 0);
  }

  const Lab& best_lab() const noexcept { return best_lab_; }

  std::vector<int> order() const { return {best_lab_.begin(), best_lab_.begin() + n_}; }

  Graph canonical_graph() const { return Graph::from_rows({best_code_.data(), static_cast<std::size_t>(n_)}); }

 private:
  using Perm = std::array<std::uint8_t, 64>;

  Partition initial_partition(std::span<const int> colors) const {
    Partition p;
    std::vector<int> verts(n_);
    std::iota(verts.begin(), verts.end(), 0);
    if (!colors.empty()) {
      std::stable_sort(verts.begin(), verts.end(), [&](int a, int b) { return colors[a] < colors[b]; });
    }
    for (int i = 0; i < n_; ++i) p.lab[i] = static_cast<std::uint8_t>(verts[i]);
    int start = 0;
    for (int i = 1; i <= n_; ++i) {
      if (i == n_ || (!colors.empty() && colors[verts[i]] != colors[verts[start]])) {
        p.len[start] = static_cast<std::uint8_t>(i - start);
        ++p.cells;
        start = i;
      }
    }
    return p;
  }

  // Same color and same neighborhood apart from each other: the transposition
  // is an automorphism.
  void find_twins(std::span<const int> colors) {
    UnionFind uf(n_);
    for (int a = 0; a < n_; ++a) {
      for (int b = a + 1; b < n_; ++b) {
        if (!colors.empty() && colors[a] != colors[b]) continue;
        if ((rows_[a] & ~bit(b)) == (rows_[b] & ~bit(a))) uf.unite(a, b);
      }
    }
    for (int v = 0; v < n_; ++v) {
      const int r = uf.find(v);
      if (r != v) twins_.emplace_back(r, v);
    }
  }

  void refine(Partition& p, std::array<std::uint8_t, 64>& queue, int qlen) const {
    std::array<bool, 64> queued{};
    for (int i = 0; i < qlen; ++i) queued[queue[i]] = true;
    // Ring buffer: at most one entry per cell start is live at a time.
    int head = 0;
    int count = qlen;
    std::array<std::uint8_t, 64> ring = queue;
    while (count > 0 && p.cells < n_) {
      const int s = ring[head];
      head = (head + 1) & 63;
      --count;
      queued[s] = false;
      Row splitter = 0;
      for (int i = s; i < s + p.len[s]; ++i) splitter |= bit(p.lab[i]);

      for (int c = 0; c < n_;) {
        const int cell_len = p.len[c];
        if (cell_len == 1) {
          ++c;
          continue;
        }
        std::array<std::uint8_t, 64> cnt{};
        bool uniform = true;
        for (int i = c; i < c + cell_len; ++i) {
          cnt[i] = static_cast<std::uint8_t>(std::popcount(rows_[p.lab[i]] & splitter));
          uniform = uniform && cnt[i] == cnt[c];
        }
        if (uniform) {
          c += cell_len;
          continue;
        }
        // insertion sort of the cell by count
        for (int i = c + 1; i < c + cell_len; ++i) {
          const auto v = p.lab[i];
          const auto k = cnt[i];
          int j = i - 1;
          while (j >= c && cnt[j] > k) {
            p.lab[j + 1] = p.lab[j];
            cnt[j + 1] = cnt[j];
            --j;
          }
          p.lab[j + 1] = v;
          cnt[j + 1] = k;
        }
        const bool was_queued = queued[c];
        int largest_start = c;
        int largest_len = 0;
        std::array<std::uint8_t, 64> starts{};
        int fragments = 0;
        for (int i = c; i < c + cell_len;) {
          int j = i;
          while (j < c + cell_len && cnt[j] == cnt[i]) ++j;
          p.len[i] = static_cast<std::uint8_t>(j - i);
          starts[fragments++] = static_cast<std::uint8_t>(i);
          if (j - i > largest_len) {
            largest_len = j - i;
            largest_start = i;
          }
          i = j;
        }
        p.cells += fragments - 1;
        for (int f = 0; f < fragments; ++f) {
          const int fs = starts[f];
          if (queued[fs]) continue;
          if (!was_queued && fs == largest_start) continue;
          queued[fs] = true;
          ring[(head + count) & 63] = static_cast<std::uint8_t>(fs);
          ++count;
        }
        c += cell_len;
      }
    }
  }

  void leaf(const Partition& p) {
    Lab inv{};
    for (int i = 0; i < n_; ++i) inv[p.lab[i]] = static_cast<std::uint8_t>(i);
    Code code{};
    for (int i = 0; i < n_; ++i) {
      Row out = 0;
      for (Row r = rows_[p.lab[i]]; r != 0; r &= r - 1) out |= bit(inv[std::countr_zero(r)]);
      code[i] = out;
    }
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = p.lab;
      first_code_ = best_code_ = code;
      return;
    }
    const auto cmp_first = compare(code, first_code_);
    if (cmp_first == 0) {
      record_automorphism(first_lab_, p.lab);
      return;
    }
    const auto cmp_best = compare(code, best_code_);
    if (cmp_best < 0) {
      best_lab_ = p.lab;
      best_code_ = code;
    } else if (cmp_best == 0) {
      record_automorphism(best_lab_, p.lab);
    }
  }

  int compare(const Code& a, const Code& b) const noexcept {
    for (int i = 0; i < n_; ++i) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }

  void record_automorphism(const Lab& from, const Lab& to) {
    Perm g{};
    for (int i = 0; i < n_; ++i) g[from[i]] = to[i];
    autos_.push_back(g);
  }

  void search(const Partition& p, Row prefix) {
    if (p.cells == n_) {
      leaf(p);
      return;
    }
    int c = 0;
    while (p.len[c] == 1) c += 1;
    const int cell_len = p.len[c];
    std::array<std::uint8_t, 64> members{};
    for (int i = 0; i < cell_len; ++i) members[i] = p.lab[c + i];

    UnionFind uf(n_);
    bool twins_done = false;
    std::size_t autos_seen = 0;
    Row tried = 0;
    for (int m = 0; m < cell_len; ++m) {
      const int u = members[m];
      if (tried != 0) {
        if (!twins_done) {
          for (auto [a, b] : twins_) {
            if (((prefix >> a) & 1U) == 0 && ((prefix >> b) & 1U) == 0) uf.unite(a, b);
          }
          twins_done = true;
        }
        for (; autos_seen < autos_.size(); ++autos_seen) {
          const Perm& g = autos_[autos_seen];
          bool fixes = true;
          for (Row r = prefix; r != 0 && fixes; r &= r - 1) {
            const int x = std::countr_zero(r);
            fixes = g[x] == x;
          }
          if (!fixes) continue;
          for (int x = 0; x < n_; ++x) uf.unite(x, g[x]);
        }
        const int root = uf.find(u);
        bool equivalent = false;
        for (Row t = tried; t != 0 && !equivalent; t &= t - 1) {
          equivalent = uf.find(std::countr_zero(t)) == root;
        }
        if (equivalent) continue;
      }
      tried |= bit(u);

      Partition child = p;
      // individualize u at the front of its cell
      int pos = c;
      while (child.lab[pos] != u) ++pos;
      std::swap(child.lab[pos], child.lab[c]);
      child.len[c] = 1;
      child.len[c + 1] = static_cast<std::uint8_t>(cell_len - 1);
      child.cells += 1;
      std::array<std::uint8_t, 64> queue{};
      queue[0] = static_cast<std::uint8_t>(c);
      refine(child, queue, 1);
      search(child, prefix | bit(u));
    }
  }

  std::span<const Row> rows_;
  int n_;
  std::vector<std::pair<int, int>> twins_;
  std::vector<Perm> autos_;
  bool have_first_ = false;
  Lab first_lab_{};
  Code first_code_{};
  Lab best_lab_{};
  Code best_code_{};
};

}  // namespace detail

/// Canonical vertex order: position i of the canonical graph holds vertex
/// `order[i]` of g. Vertices of different colors are never exchanged and
/// smaller colors come first.
inline std::vector<int> canonical_order(const Graph& g, std::span<const int> colors = {}) {
  if (!colors.empty() && static_cast<int>(colors.size()) != g.order()) {
    throw size_error("color vector size mismatch");
  }
  return detail::CanonicalSearch(g.rows(), colors).order();
}

inline Graph canonical_graph(const Graph& g, std::span<const int> colors = {}) {
  if (!colors.empty() && static_cast<int>(colors.size()) != g.order()) {
    throw size_error("color vector size mismatch");
  }
  return detail::CanonicalSearch(g.rows(), colors).canonical_graph();
}

inline CanonicalForm canonical_form(const Graph& g) { return CanonicalForm(encode_graph6(canonical_graph(g))); }

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  auto da = degree_sequence(a);
  auto db = degree_sequence(b);
  std::sort(da.begin(), da.end());
  std::sort(db.begin(), db.end());
  if (da != db) return false;
  return canonical_graph(a) == canonical_graph(b);
}

}  // namespace mindiam

template <>
struct std::hash<mindiam::CanonicalForm> {
  std::size_t operator()(const mindiam::CanonicalForm& f) const noexcept {
    return std::hash<std::string>{}(f.graph6());
  }
};
