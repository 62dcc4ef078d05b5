#pragma once

// Command-line front end. Every subcommand builds one JSON document; the text
// output is rendered from that same document, so both formats carry the same
// data.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mindiam/canonical.hpp"
#include "mindiam/catalog.hpp"
#include "mindiam/census.hpp"
#include "mindiam/graph.hpp"
#include "mindiam/graph6.hpp"
#include "mindiam/pcm.hpp"
#include "mindiam/search.hpp"
#include "mindiam/summary.hpp"

namespace mindiam::cli {

using json = nlohmann::ordered_json;

enum exit_code : int { ok = 0, failed = 1, usage = 2 };

namespace detail {

inline std::string decimal(double v, int places = 4) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", places, v);
  return buf;
}

inline json ratio_json(const CompletionRatio& c) {
  return {{"comparisons", c.comparisons}, {"possible", c.possible}, {"value", c.value()}};
}

inline std::string ratio_text(const json& c) {
  return std::to_string(c["comparisons"].get<int>()) + "/" + std::to_string(c["possible"].get<int>()) + "\xE2\x89\x88" +
         decimal(c["value"].get<double>());
}

inline std::string opt_int(const json& v) { return v.is_null() ? std::string("-") : std::to_string(v.get<long long>()); }

inline std::vector<std::string> read_lines(std::istream& in) {
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

inline std::string slurp(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Patterns without the connectivity requirement, for format conversion.
inline FillingPattern edges_of(const Graph& g) {
  FillingPattern p;
  p.n = g.order();
  for (const Edge& e : g.edges()) p.pairs.emplace_back(e.u + 1, e.v + 1);
  return p;
}

inline std::string render_graph(const Graph& g, const std::string& to) {
  if (to == "g6") return encode_graph6(g) + "\n";
  if (to == "edges") return format_edge_list(g);
  if (to == "matrix") return pattern_matrix(edges_of(g));
  if (to == "csv") return pattern_csv(edges_of(g));
  return format_mask(mask_from_pattern(edges_of(g)));
}

inline std::string render_pattern(const FillingPattern& p, const std::string& format) {
  if (format == "csv") return pattern_csv(p);
  if (format == "matrix") return pattern_matrix(p);
  if (format == "g6") return pattern_graph6(p) + "\n";
  std::string out;
  for (auto [i, j] : p.pairs) out += std::to_string(i) + "-" + std::to_string(j) + "\n";
  return out;
}

inline json entry_report_json(const EntryReport& r) {
  json pairs_printed = json::array();
  for (auto [a, b] : r.printed_only) pairs_printed.push_back(std::to_string(a) + "-" + std::to_string(b));
  json pairs_matrix = json::array();
  for (auto [a, b] : r.matrix_only) pairs_matrix.push_back(std::to_string(a) + "-" + std::to_string(b));
  json j = {{"n", r.n},
            {"k", r.k},
            {"name", r.name},
            {"pass", r.pass()},
            {"edges", r.edges},
            {"edges_required", r.edges_required},
            {"degree_ok", r.degree_ok},
            {"connected", r.connected},
            {"diameter", r.diameter.finite() ? json(r.diameter.value()) : json(nullptr)},
            {"d_claimed", r.d_claimed},
            {"ratio_ok", r.ratio_ok},
            {"graph6", r.graph6_error ? *r.graph6_error : std::string(to_string(r.graph6_match))},
            {"corrected", r.corrected},
            {"printed_only", pairs_printed},
            {"matrix_only", pairs_matrix},
            {"printed_list_error", r.printed_error ? json(*r.printed_error) : json(nullptr)}};
  return j;
}

inline std::string yes(bool b) { return b ? "yes" : "no"; }

// ---------------------------------------------------------------------------
// Text renderers

inline void text_info(const json& j, std::ostream& out) {
  out << "edges=" << j["edges"].get<int>() << " c=" << ratio_text(j["c"]) << " d_min=" << opt_int(j["d_min"]);
  if (j["in_catalog"].get<bool>()) {
    const auto name = j["catalog_name"].get<std::string>();
    out << (name.empty() ? std::string(" (catalog)") : " (catalog: " + name + ")");
  }
  out << '\n';
}

inline void text_census(const json& j, std::ostream& out) {
  out << j["n"].get<int>() << ' ' << j["k"].get<int>() << ' ' << opt_int(j["d_min"]) << ' '
      << j["optima_count"].get<unsigned long long>() << ' ' << (j["exhausted"].get<bool>() ? "true" : "false") << ' '
      << j["c"]["comparisons"].get<int>() << '/' << j["c"]["possible"].get<int>() << '\n';
  out << "# method=" << j["method"].get<std::string>();
  if (j["method"] == "census") {
    out << " mode=" << j["mode"].get<std::string>() << " total_connected=" << opt_int(j["total_connected"])
        << " nodes=" << j["nodes"].get<unsigned long long>() << " histogram=";
    if (j["histogram"].empty()) {
      out << '-';
    } else {
      bool first = true;
      for (const auto& [d, count] : j["histogram"].items()) {
        out << (first ? "" : ",") << d << ':' << count.get<unsigned long long>();
        first = false;
      }
    }
  } else {
    out << " target_d=" << j["target_d"].get<int>() << " seed=" << j["seed"].get<unsigned long long>()
        << " attempts=" << j["attempts"].get<unsigned long long>();
  }
  out << '\n';
  for (const auto& g : j["optima"]) out << g.get<std::string>() << '\n';
}

inline void text_search(const json& j, std::ostream& out) {
  out << j["n"].get<int>() << ' ' << j["k"].get<int>() << ' ' << j["target_d"].get<int>() << ' '
      << j["distinct"].get<unsigned long long>() << ' ' << j["attempts"].get<unsigned long long>() << ' '
      << j["seed"].get<unsigned long long>() << '\n';
  for (const auto& g : j["graphs"]) out << g.get<std::string>() << '\n';
}

inline void text_catalog_report(const json& j, std::ostream& out) {
  for (const auto& e : j["entries"]) {
    out << (e["pass"].get<bool>() ? "PASS" : "FAIL") << " n=" << e["n"].get<int>() << " k=" << e["k"].get<int>()
        << " d=" << opt_int(e["diameter"]) << "/" << e["d_claimed"].get<int>() << " edges=" << e["edges"].get<int>()
        << "/" << e["edges_required"].get<int>() << " regular=" << yes(e["degree_ok"].get<bool>())
        << " connected=" << yes(e["connected"].get<bool>()) << " c=" << yes(e["ratio_ok"].get<bool>())
        << " graph6=" << e["graph6"].get<std::string>();
    if (!e["name"].get<std::string>().empty()) out << " name=\"" << e["name"].get<std::string>() << '"';
    out << '\n';
    if (e["corrected"].get<bool>()) {
      out << "  corrected from adjacency matrix: printed-only";
      for (const auto& p : e["printed_only"]) out << ' ' << p.get<std::string>();
      out << "; matrix-only";
      for (const auto& p : e["matrix_only"]) out << ' ' << p.get<std::string>();
      out << '\n';
    }
    if (!e["printed_list_error"].is_null()) {
      out << "  printed edge list alone: " << e["printed_list_error"].get<std::string>() << '\n';
    }
  }
  out << "catalog: " << j["passed"].get<int>() << "/" << j["total"].get<int>() << " entries pass\n";
}

inline void text_verify_graphs(const json& j, std::ostream& out) {
  for (const auto& g : j["graphs"]) {
    out << (g["pass"].get<bool>() ? "PASS " : "FAIL ") << g["graph6"].get<std::string>();
    if (g.contains("error")) {
      out << " error=\"" << g["error"].get<std::string>() << "\"\n";
      continue;
    }
    out << " n=" << g["n"].get<int>() << " edges=" << g["edges"].get<int>()
        << " connected=" << yes(g["connected"].get<bool>()) << " d=" << opt_int(g["diameter"]);
    if (!g["expect_k"].is_null()) {
      out << " k=" << g["expect_k"].get<int>() << " degrees=" << yes(g["degree_ok"].get<bool>());
    }
    if (!g["expect_d"].is_null()) out << " expect_d=" << g["expect_d"].get<int>();
    out << '\n';
  }
}

inline void text_recommend(const json& j, std::ostream& out) {
  if (j.contains("error")) {
    out << "no pattern: " << j["error"].get<std::string>() << '\n';
    for (const auto& p : j["frontier"]) {
      out << "  k=" << p["k"].get<int>() << " d=" << p["d"].get<int>() << " comparisons=" << p["comparisons"].get<int>()
          << " pattern=" << yes(p["has_pattern"].get<bool>()) << '\n';
    }
    return;
  }
  out << "n=" << j["n"].get<int>() << " k=" << j["k"].get<int>() << " d=" << j["d"].get<int>()
      << " comparisons=" << j["c"]["comparisons"].get<int>() << " c=" << ratio_text(j["c"])
      << " source=" << j["source"].get<std::string>() << '\n';
  out << "rationale: " << j["rationale"].get<std::string>() << '\n';
  out << j["pattern"].get<std::string>();
}

inline void emit(const json& j, bool as_json, std::ostream& out, void (*text)(const json&, std::ostream&)) {
  if (as_json) {
    out << j.dump(2) << '\n';
  } else {
    text(j, out);
  }
}

}  // namespace detail

// ---------------------------------------------------------------------------

inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out, std::ostream& err) {
  using namespace detail;
  CLI::App app{"Minimal-diameter regular graphs as comparison patterns", "mindiam"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  int jobs = 1;
  app.add_flag("--json", as_json, "JSON output");
  auto* jobs_opt =
      app.add_option("--jobs", jobs, "Census worker threads")->envname("MINDIAM_JOBS")->check(CLI::Range(1, 256));

  // recommend
  auto* rec = app.add_subcommand("recommend", "Pick a comparison pattern for n items");
  int rec_n = 0;
  std::optional<int> rec_d;
  std::optional<int> rec_m;
  std::string rec_format = "pairs";
  bool rec_census = false;
  rec->add_option("--n", rec_n, "Items")->required();
  rec->add_option("--max-d", rec_d, "Largest acceptable diameter")->check(CLI::PositiveNumber);
  rec->add_option("--max-comparisons", rec_m, "Comparison budget")->check(CLI::PositiveNumber);
  rec->add_option("--format", rec_format, "Pattern output")->check(CLI::IsMember({"pairs", "csv", "matrix", "g6"}));
  rec->add_flag("--census-optimum", rec_census, "Use the census optimum with the smallest canonical form");

  // census
  auto* cen = app.add_subcommand("census", "Minimal-diameter census of k-(quasi-)regular graphs");
  int cen_n = 0;
  int cen_k = 0;
  bool cen_store = false;
  std::optional<std::uint64_t> cen_budget;
  bool cen_unbounded = false;
  bool cen_optima_only = false;
  std::optional<int> cen_max_d;
  std::string cen_strategy = "orderly";
  bool cen_force = false;
  std::uint64_t cen_seed = default_seed;
  std::uint64_t cen_attempts = 100'000;
  cen->add_option("--n", cen_n)->required();
  cen->add_option("--k", cen_k)->required();
  cen->add_flag("--store-optima", cen_store, "Print the optimal graphs");
  auto* budget_opt = cen->add_option("--budget", cen_budget, "Search node budget (default 1e8)")->check(CLI::PositiveNumber);
  cen->add_flag("--unbounded", cen_unbounded, "No node budget")->excludes(budget_opt);
  cen->add_flag("--optima-only", cen_optima_only, "Stop each BFS once worse than the best so far");
  cen->add_option("--max-d", cen_max_d, "Only count graphs up to this diameter")->check(CLI::PositiveNumber);
  cen->add_option("--strategy", cen_strategy)->check(CLI::IsMember({"orderly", "leaf-dedup"}));
  cen->add_flag("--force-exhaustive", cen_force, "Exhaustive census even where it is out of reach (needs --budget)");
  cen->add_option("--seed", cen_seed, "Seed when the cell is searched instead");
  cen->add_option("--attempts", cen_attempts, "Attempts when the cell is searched instead");

  // search
  auto* sea = app.add_subcommand("search", "Seeded random search for low-diameter graphs");
  SearchOptions so;
  sea->add_option("--n", so.n)->required();
  sea->add_option("--k", so.k)->required();
  sea->add_option("--target-d", so.target_d)->required()->check(CLI::PositiveNumber);
  sea->add_option("--seed", so.seed, "Random seed (default 1)");
  sea->add_option("--attempts", so.attempts, "Proposed swaps");
  sea->add_option("--distinct-goal", so.distinct_goal, "Stop after this many distinct graphs");

  // verify
  auto* ver = app.add_subcommand("verify", "Check catalog entries or graph6 strings");
  bool ver_catalog = false;
  std::string ver_g6;
  std::optional<int> ver_k;
  std::optional<int> ver_d;
  auto* cat_flag = ver->add_flag("--catalog", ver_catalog, "Verify every catalog entry");
  ver->add_option("--graph6", ver_g6, "Graph to check; '-' or absent reads lines from stdin")->excludes(cat_flag);
  ver->add_option("--expect-k", ver_k)->excludes(cat_flag);
  ver->add_option("--expect-d", ver_d)->excludes(cat_flag);

  // convert
  auto* con = app.add_subcommand("convert", "Convert between graph formats");
  std::string con_from;
  std::string con_to;
  std::string con_input;
  con->add_option("--from", con_from)->required()->check(CLI::IsMember({"g6", "edges", "mask"}));
  con->add_option("--to", con_to)->required()->check(CLI::IsMember({"g6", "edges", "matrix", "csv", "mask"}));
  con->add_option("--input", con_input, "Input file (default stdin)");

  // catalog
  auto* cat = app.add_subcommand("catalog", "Reference graphs");
  cat->require_subcommand(1);
  auto* cat_export = cat->add_subcommand("export", "Write .g6 and .edges files");
  std::string export_dir;
  cat_export->add_option("DIR", export_dir)->required();
  auto* cat_list = cat->add_subcommand("list", "List entries");

  // info
  auto* inf = app.add_subcommand("info", "Edge count, completion ratio and known minimal diameter");
  int inf_n = 0;
  int inf_k = 0;
  inf->add_option("--n", inf_n)->required();
  inf->add_option("--k", inf_k)->required();

  // summary
  auto* sum = app.add_subcommand("summary", "Minimal diameter table over a range of cells");
  int sum_from = 5;
  int sum_to = 20;
  std::vector<int> sum_k{3, 4, 5};
  SummaryOptions sum_opts;
  sum->add_option("--from", sum_from)->check(CLI::Range(3, 20));
  sum->add_option("--to", sum_to)->check(CLI::Range(3, 20));
  sum->add_option("--k", sum_k)->delimiter(',')->check(CLI::Range(3, 5));
  sum->add_option("--budget", sum_opts.budget)->check(CLI::PositiveNumber);
  sum->add_option("--seed", sum_opts.seed);
  sum->add_option("--attempts", sum_opts.search_attempts);

  try {
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return usage;
  }
  // CLI11 drops an environment value that fails the check instead of reporting it
  if (jobs_opt->count() == 0) {
    if (const char* env = std::getenv("MINDIAM_JOBS"); env && *env) {
      err << "MINDIAM_JOBS: expected an integer in [1, 256], got '" << env << "'\n";
      return usage;
    }
  }

  try {
    if (*inf) {
      json j = {{"n", inf_n}, {"k", inf_k}, {"edges", required_edge_count(inf_n, inf_k)},
                {"c", ratio_json(completion_ratio(inf_n, inf_k))}};
      const auto d = known_min_diameter(inf_n, inf_k);
      j["d_min"] = d ? json(*d) : json(nullptr);
      const auto* e = find_entry(inf_n, inf_k);
      j["in_catalog"] = e != nullptr;
      j["catalog_name"] = e ? e->name : std::string();
      emit(j, as_json, out, text_info);
      return ok;
    }

    if (*cen) {
      const bool routed = census_infeasible(cen_n, cen_k) && !cen_force;
      if (cen_force && !cen_budget) {
        err << "--force-exhaustive needs an explicit --budget\n";
        return usage;
      }
      json j = {{"n", cen_n}, {"k", cen_k}};
      if (routed) {
        validate_degree_query(cen_n, cen_k, std::nullopt);
        SearchOptions s;
        s.n = cen_n;
        s.k = cen_k;
        s.target_d = cen_max_d.value_or(2);
        s.seed = cen_seed;
        s.attempts = cen_attempts;
        const auto r = stochastic_low_diameter_search(s);
        j["d_min"] = r.graphs.empty() ? json(nullptr) : json(s.target_d);
        j["optima_count"] = r.distinct_count();
        j["exhausted"] = false;
        j["c"] = ratio_json(completion_ratio(cen_n, cen_k));
        j["method"] = "search";
        j["target_d"] = s.target_d;
        j["seed"] = r.seed;
        j["attempts"] = r.attempts;
        j["optima"] = json::array();
        if (cen_store) {
          for (const auto& f : r.graphs) j["optima"].push_back(f.graph6());
        }
      } else {
        CensusQuery q;
        q.n = cen_n;
        q.k = cen_k;
        q.census = cen_optima_only ? CensusMode::optima_only : CensusMode::full;
        q.store_optima = cen_store;
        q.budget = cen_unbounded ? 0 : cen_budget.value_or(default_node_budget);
        q.max_diameter = cen_max_d;
        q.jobs = jobs;
        q.strategy = cen_strategy == "orderly" ? Strategy::orderly : Strategy::leaf_dedup;
        const auto r = min_diameter_census(q);
        j["d_min"] = r.d_min ? json(*r.d_min) : json(nullptr);
        j["optima_count"] = r.optima_count;
        j["exhausted"] = r.exhausted;
        j["c"] = ratio_json(r.ratio());
        j["method"] = "census";
        j["mode"] = cen_optima_only ? "optima-only" : "full";
        j["total_connected"] = r.total_connected ? json(*r.total_connected) : json(nullptr);
        j["nodes"] = r.nodes;
        j["histogram"] = json::object();
        for (auto [d, c] : r.histogram) j["histogram"][std::to_string(d)] = c;
        j["optima"] = json::array();
        for (const auto& f : r.optima) j["optima"].push_back(f.graph6());
      }
      emit(j, as_json, out, text_census);
      return ok;
    }

    if (*sea) {
      const auto r = stochastic_low_diameter_search(so);
      json j = {{"n", so.n}, {"k", so.k}, {"target_d", so.target_d}, {"distinct", r.distinct_count()},
                {"attempts", r.attempts}, {"seed", r.seed}, {"graphs", json::array()}};
      for (const auto& f : r.graphs) j["graphs"].push_back(f.graph6());
      emit(j, as_json, out, text_search);
      return ok;
    }

    if (*ver) {
      if (ver_catalog) {
        const auto report = verify_catalog();
        json j = {{"entries", json::array()}, {"passed", report.passed()}, {"total", report.entries.size()}};
        for (const auto& e : report.entries) j["entries"].push_back(entry_report_json(e));
        j["pass"] = report.pass();
        emit(j, as_json, out, text_catalog_report);
        return report.pass() ? ok : failed;
      }
      std::vector<std::string> inputs;
      if (ver_g6.empty() || ver_g6 == "-") {
        inputs = read_lines(in);
      } else {
        inputs.push_back(ver_g6);
      }
      json j = {{"graphs", json::array()}};
      bool all = !inputs.empty();
      for (const auto& s : inputs) {
        json g = {{"graph6", s}};
        try {
          const Graph graph = decode_graph6(s);
          const Hops d = diameter(graph);
          const bool connected = d.finite();
          const bool degree_ok = !ver_k || (*ver_k < graph.order() && meets_degree_contract(graph, *ver_k));
          const bool d_ok = !ver_d || (connected && static_cast<int>(d.value()) == *ver_d);
          g["n"] = graph.order();
          g["edges"] = graph.edge_count();
          g["connected"] = connected;
          g["diameter"] = connected ? json(d.value()) : json(nullptr);
          g["expect_k"] = ver_k ? json(*ver_k) : json(nullptr);
          g["degree_ok"] = degree_ok;
          g["expect_d"] = ver_d ? json(*ver_d) : json(nullptr);
          g["pass"] = connected && degree_ok && d_ok;
        } catch (const error& ex) {
          g["error"] = ex.what();
          g["pass"] = false;
        }
        all = all && g["pass"].get<bool>();
        j["graphs"].push_back(g);
      }
      j["pass"] = all;
      emit(j, as_json, out, text_verify_graphs);
      return all ? ok : failed;
    }

    if (*con) {
      std::ifstream file;
      if (!con_input.empty()) {
        file.open(con_input);
        if (!file) {
          err << "cannot open " << con_input << '\n';
          return usage;
        }
      }
      std::istream& src = con_input.empty() ? in : file;
      std::vector<Graph> graphs;
      if (con_from == "g6") {
        for (const auto& line : read_lines(src)) graphs.push_back(decode_graph6(line));
      } else if (con_from == "edges") {
        graphs.push_back(parse_edge_list(slurp(src)));
      } else {
        graphs.push_back(graph_from_mask(parse_mask(slurp(src))));
      }
      json j = {{"to", con_to}, {"outputs", json::array()}};
      for (const auto& g : graphs) j["outputs"].push_back(render_graph(g, con_to));
      emit(j, as_json, out, [](const json& doc, std::ostream& o) {
        bool first = true;
        for (const auto& s : doc["outputs"]) {
          const bool block = doc["to"] != "g6";
          if (!first && block) o << '\n';
          o << s.get<std::string>();
          first = false;
        }
      });
      return ok;
    }

    if (*cat) {
      if (*cat_export) {
        const int files = export_catalog(export_dir);
        json j = {{"dir", export_dir}, {"files", files}};
        emit(j, as_json, out, [](const json& doc, std::ostream& o) {
          o << "wrote " << doc["files"].get<int>() << " files to " << doc["dir"].get<std::string>() << '\n';
        });
        return ok;
      }
      json j = {{"entries", json::array()}};
      for (const auto& e : catalog()) {
        j["entries"].push_back({{"n", e.n},
                                {"k", e.k},
                                {"d", e.d_claimed},
                                {"graph6", e.graph6},
                                {"claim", e.claim.text()},
                                {"name", e.name}});
      }
      (void)cat_list;
      emit(j, as_json, out, [](const json& doc, std::ostream& o) {
        for (const auto& e : doc["entries"]) {
          o << e["n"].get<int>() << ' ' << e["k"].get<int>() << ' ' << e["d"].get<int>() << ' '
            << e["graph6"].get<std::string>() << ' ' << e["claim"].get<std::string>();
          if (!e["name"].get<std::string>().empty()) o << ' ' << e["name"].get<std::string>();
          o << '\n';
        }
      });
      return ok;
    }

    if (*rec) {
      RecommendQuery q;
      q.n = rec_n;
      q.max_diameter = rec_d;
      q.max_comparisons = rec_m;
      q.prefer_census_optimum = rec_census;
      try {
        const auto r = recommend(q);
        json j = {{"n", r.n},
                  {"k", r.chosen_k},
                  {"d", r.expected_d},
                  {"c", ratio_json(r.c)},
                  {"source", r.source},
                  {"rationale", r.rationale},
                  {"format", rec_format},
                  {"pattern", render_pattern(r.pattern, rec_format)}};
        emit(j, as_json, out, text_recommend);
        return ok;
      } catch (const frontier_error& ex) {
        json j = {{"n", rec_n}, {"error", ex.what()}, {"frontier", json::array()}};
        for (const auto& p : ex.frontier()) {
          j["frontier"].push_back({{"k", p.k}, {"d", p.d}, {"comparisons", p.edges}, {"has_pattern", p.has_pattern}});
        }
        emit(j, as_json, out, text_recommend);
        return failed;
      }
    }

    if (*sum) {
      sum_opts.jobs = jobs;
      const auto rows = summary_table(sum_from, sum_to, sum_k, sum_opts);
      json j = {{"rows", json::array()}};
      for (const auto& r : rows) {
        j["rows"].push_back({{"n", r.n},
                             {"k", r.k},
                             {"d_min", r.d ? json(*r.d) : json(nullptr)},
                             {"count", r.count},
                             {"lower_bound", r.lower_bound},
                             {"c", ratio_json(r.c)},
                             {"method", r.searched ? "search" : "census"}});
      }
      emit(j, as_json, out, [](const json& doc, std::ostream& o) {
        o << " n  k  d  count     c\n";
        for (const auto& r : doc["rows"]) {
          char line[128];
          const std::string count =
              r["d_min"].is_null() ? std::string("-")
                                   : (r["lower_bound"].get<bool>() ? ">=" : "") + std::to_string(r["count"].get<unsigned long long>());
          std::snprintf(line, sizeof line, "%2d %2d %2s  %-8s  %d/%d (%s)%s\n", r["n"].get<int>(), r["k"].get<int>(),
                        opt_int(r["d_min"]).c_str(), count.c_str(), r["c"]["comparisons"].get<int>(),
                        r["c"]["possible"].get<int>(), decimal(r["c"]["value"].get<double>(), 3).c_str(),
                        r["method"] == "search" ? "  [search]" : "");
          o << line;
        }
      });
      return ok;
    }
  } catch (const error& ex) {
    err << "error: " << ex.what() << '\n';
    return usage;
  }
  return usage;
}

}  // namespace mindiam::cli
