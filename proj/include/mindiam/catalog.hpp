#pragma once

// The 26 published reference graphs with their claimed parameters, and a
// verifier that re-derives every claim from the stored data.
//
// Each entry was published three ways (edge list, adjacency matrix, graph6).
// Where the edge list and the matrix disagree the matrix wins and the entry is
// reported as corrected.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mindiam/canonical.hpp"
#include "mindiam/catalog_data.hpp"
#include "mindiam/errors.hpp"
#include "mindiam/graph.hpp"
#include "mindiam/graph6.hpp"

namespace mindiam {

struct CountClaim {
  std::uint64_t count = 0;
  bool lower_bound = false;

  std::string text() const {
    if (lower_bound) return ">=" + std::to_string(count);
    return count == 1 ? std::string("unique") : std::to_string(count);
  }
};

struct CatalogEntry {
  int n = 0;
  int k = 0;
  int d_claimed = 0;
  std::string name;  // empty when the graph has no common name
  std::string graph6;
  /// Reconciled edge list.
  Graph graph{1};
  CompletionRatio c;
  CountClaim claim;
  /// The edge list as printed, one "i-j" per line.
  std::string printed_edges;
  /// Edges present only in the printed list / only in the matrix (1-based).
  std::vector<std::pair<int, int>> printed_only;
  std::vector<std::pair<int, int>> matrix_only;

  bool corrected() const noexcept { return !printed_only.empty() || !matrix_only.empty(); }
};

namespace detail {

inline std::vector<std::pair<int, int>> split_pairs(std::string_view text) {
  std::vector<std::pair<int, int>> out;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    const auto dash = line.find('-');
    if (dash == std::string::npos) continue;
    int a = std::stoi(line.substr(0, dash));
    int b = std::stoi(line.substr(dash + 1));
    if (a > b) std::swap(a, b);
    out.emplace_back(a, b);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline CatalogEntry build_entry(const RawCatalogEntry& raw) {
  CatalogEntry e;
  e.n = raw.n;
  e.k = raw.k;
  e.d_claimed = raw.d;
  e.name = raw.name;
  e.graph6 = raw.graph6;
  e.c = completion_ratio(raw.n, raw.k);
  e.claim = {raw.claimed_count, raw.claim_is_lower_bound};
  e.printed_edges = raw.printed_edges;
  e.graph = parse_edge_list("n=" + std::to_string(raw.n) + "\n" + std::string(raw.matrix_edges));
  const auto printed = split_pairs(raw.printed_edges);
  const auto matrix = split_pairs(raw.matrix_edges);
  std::set_difference(printed.begin(), printed.end(), matrix.begin(), matrix.end(), std::back_inserter(e.printed_only));
  std::set_difference(matrix.begin(), matrix.end(), printed.begin(), printed.end(), std::back_inserter(e.matrix_only));
  return e;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& raw : detail::raw_catalog) out.push_back(detail::build_entry(raw));
    return out;
  }();
  return entries;
}

inline const CatalogEntry* find_entry(int n, int k) noexcept {
  for (const auto& e : catalog()) {
    if (e.n == n && e.k == k) return &e;
  }
  return nullptr;
}

/// Throws not_found_error listing the closest covered cells on a miss.
inline const CatalogEntry& lookup(int n, int k) {
  if (const auto* e = find_entry(n, k)) return *e;
  std::vector<std::pair<int, int>> cells;
  for (const auto& e : catalog()) cells.emplace_back(e.n, e.k);
  const auto distance = [&](const std::pair<int, int>& c) { return std::abs(c.first - n) + std::abs(c.second - k); };
  std::stable_sort(cells.begin(), cells.end(), [&](const auto& a, const auto& b) { return distance(a) < distance(b); });
  const int best = distance(cells.front());
  std::vector<std::pair<int, int>> nearest;
  for (const auto& c : cells) {
    if (distance(c) == best) nearest.push_back(c);
  }
  std::string msg = "no catalog entry for n=" + std::to_string(n) + " k=" + std::to_string(k) + "; nearest:";
  for (auto [cn, ck] : nearest) msg += " (n=" + std::to_string(cn) + ",k=" + std::to_string(ck) + ")";
  throw not_found_error(msg, std::move(nearest));
}

enum class LabelMatch { identical, isomorphic, different };

inline std::string_view to_string(LabelMatch m) noexcept {
  switch (m) {
    case LabelMatch::identical:
      return "identical";
    case LabelMatch::isomorphic:
      return "isomorphic";
    case LabelMatch::different:
      break;
  }
  return "different";
}

struct EntryReport {
  int n = 0;
  int k = 0;
  std::string name;
  int edges = 0;
  int edges_required = 0;
  bool degree_ok = false;
  bool connected = false;
  Hops diameter;
  int d_claimed = 0;
  bool ratio_ok = false;
  /// Did the printed edge list load on its own?
  std::optional<std::string> printed_error;
  bool corrected = false;
  std::vector<std::pair<int, int>> printed_only;
  std::vector<std::pair<int, int>> matrix_only;
  std::optional<std::string> graph6_error;
  LabelMatch graph6_match = LabelMatch::different;

  bool diameter_ok() const noexcept { return diameter.finite() && diameter == Hops(static_cast<unsigned>(d_claimed)); }

  bool pass() const noexcept {
    return edges == edges_required && degree_ok && connected && diameter_ok() && ratio_ok && !graph6_error &&
           graph6_match != LabelMatch::different;
  }
};

struct CatalogReport {
  std::vector<EntryReport> entries;

  bool pass() const noexcept {
    return std::all_of(entries.begin(), entries.end(), [](const EntryReport& e) { return e.pass(); });
  }
  std::size_t passed() const noexcept {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const EntryReport& e) { return e.pass(); }));
  }
};

inline EntryReport verify_entry(const CatalogEntry& e) {
  EntryReport r;
  r.n = e.n;
  r.k = e.k;
  r.name = e.name;
  r.edges = e.graph.edge_count();
  r.edges_required = required_edge_count(e.n, e.k);
  r.degree_ok = meets_degree_contract(e.graph, e.k);
  r.connected = is_connected(e.graph);
  r.diameter = diameter(e.graph);
  r.d_claimed = e.d_claimed;
  r.ratio_ok = CompletionRatio{r.edges, pair_count(e.n)} == e.c;
  try {
    (void)parse_edge_list("n=" + std::to_string(e.n) + "\n" + e.printed_edges);
  } catch (const error& ex) {
    r.printed_error = ex.what();
  }
  r.corrected = e.corrected();
  r.printed_only = e.printed_only;
  r.matrix_only = e.matrix_only;
  try {
    const Graph g = decode_graph6(e.graph6);
    if (g == e.graph) {
      r.graph6_match = LabelMatch::identical;
    } else if (are_isomorphic(g, e.graph)) {
      r.graph6_match = LabelMatch::isomorphic;
    }
  } catch (const error& ex) {
    r.graph6_error = ex.what();
  }
  return r;
}

inline CatalogReport verify_catalog() {
  CatalogReport report;
  for (const auto& e : catalog()) report.entries.push_back(verify_entry(e));
  return report;
}

/// Writes n<N>_k<K>.g6 and n<N>_k<K>.edges for every entry; returns the
/// number of files written.
inline int export_catalog(const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  int written = 0;
  for (const auto& e : catalog()) {
    const std::string stem = "n" + std::to_string(e.n) + "_k" + std::to_string(e.k);
    std::ofstream g6(dir / (stem + ".g6"));
    g6 << e.graph6 << '\n';
    std::ofstream edges(dir / (stem + ".edges"));
    edges << format_edge_list(e.graph);
    if (!g6 || !edges) throw error("cannot write catalog files to " + dir.string());
    written += 2;
  }
  return written;
}

}  // namespace mindiam
