#pragma once

// Command-line front end. Every subcommand parses its flags, calls one
// library operation and serializes the result; run() is usable in-process so
// tests can drive the exact same code path as the binary.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "spex/spex.hpp"

namespace spex::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kDomainError = 1, kUsageError = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rounds to 15 significant digits; the JSON writer then prints the shortest
/// representation, which has at most 15 digits.
inline Json num(double v) {
  if (!std::isfinite(v)) return nullptr;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return std::strtod(buf, nullptr);
}

inline Json num(const HighPrecision& v) { return num(static_cast<double>(v)); }

inline Json to_json(const PathPartition& p) { return p.parts(); }

inline PathPartition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      parts.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("partition must be a comma-separated list of positive integers, got '" + text + "'");
    }
  }
  if (parts.empty()) throw UsageError("empty partition");
  return PathPartition(std::move(parts));
}

inline Json to_json(const SpectralResult& r, bool with_perron) {
  Json j;
  j["rho"] = num(r.rho);
  j["iterations"] = r.iterations;
  j["residual"] = num(r.residual);
  if (with_perron) {
    Json p = Json::array();
    for (double x : r.perron) p.push_back(num(x));
    j["perron"] = std::move(p);
  }
  return j;
}

inline Json to_json(const AgreementReport& r) {
  Json j;
  j["claim"] = to_string(r.claim);
  j["param"] = r.param;
  j["max_total"] = r.max_total;
  j["checked"] = r.checked;
  j["free_count"] = r.free_count;
  j["mismatch_count"] = r.mismatches.size();
  Json m = Json::array();
  for (const auto& x : r.mismatches)
    m.push_back(Json{{"partition", to_json(x.partition)}, {"predicate", x.predicate}, {"oracle", x.oracle}});
  j["mismatches"] = std::move(m);
  return j;
}

inline Json to_json(const SearchReport& r, bool timing) {
  Json j;
  j["mode"] = to_string(r.mode);
  j["n"] = r.n;
  j["pattern"] = r.pattern.to_string();
  j["source"] = to_string(r.source);
  j["stats"] = Json{{"visited", r.stats.visited},
                    {"connected", r.stats.connected},
                    {"planar", r.stats.planar},
                    {"free", r.stats.free}};
  Json ranked = Json::array();
  for (std::size_t i = 0; i < r.ranked.size(); ++i) {
    const auto& c = r.ranked[i];
    Json e;
    e["rank"] = i + 1;
    e["graph6"] = c.graph6;
    if (c.partition) e["partition"] = to_json(*c.partition);
    e["rho"] = num(c.rho);
    e["residual"] = num(c.residual);
    e["planar"] = c.planar;
    e["free"] = c.free;
    ranked.push_back(std::move(e));
  }
  j["ranked"] = std::move(ranked);
  Json gaps = Json::array();
  for (auto g : r.gap_flags) gaps.push_back(to_string(g));
  j["gap_flags"] = std::move(gaps);
  j["matches_theorem_extremal"] = r.matches_theorem_extremal ? Json(*r.matches_theorem_extremal) : Json(nullptr);
  if (r.reference) {
    const auto& ref = *r.reference;
    Json e;
    e["label"] = ref.label;
    e["graph6"] = ref.graph6;
    e["rho"] = num(ref.rho);
    e["rho_closed_form"] = ref.rho_closed_form ? num(*ref.rho_closed_form) : Json(nullptr);
    e["top_vs_reference"] = to_string(ref.top_vs_reference);
    j["reference"] = std::move(e);
  } else {
    j["reference"] = nullptr;
  }
  Json diags = Json::array();
  for (const auto& d : r.diagnostics) diags.push_back(Json{{"line", d.line}, {"message", d.message}});
  j["stream_diagnostics"] = std::move(diags);
  if (timing) j["elapsed_seconds"] = num(r.elapsed_seconds);
  return j;
}

/// CSV columns: rank, graph6, rho, residual, flags.
inline std::string to_csv(const SearchReport& r) {
  std::ostringstream out;
  out << "rank,graph6,rho,residual,flags\n";
  char buf[64];
  for (std::size_t i = 0; i < r.ranked.size(); ++i) {
    const auto& c = r.ranked[i];
    std::string flags;
    flags += c.planar ? "planar" : "nonplanar";
    flags += c.free ? ";free" : ";contains";
    if (i < r.gap_flags.size()) flags += std::string(";") + to_string(r.gap_flags[i]);
    // graph6 may contain '"'; quote and double it
    std::string g6;
    for (char ch : c.graph6) g6 += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    out << i + 1 << ",\"" << g6 << "\",";
    std::snprintf(buf, sizeof buf, "%.15g", c.rho);
    out << buf << ',';
    std::snprintf(buf, sizeof buf, "%.15g", c.residual);
    out << buf << ',' << flags << '\n';
  }
  return out.str();
}

inline Json to_json(const AscentReport& r) {
  Json j;
  j["start"] = to_json(r.start);
  j["pattern"] = r.pattern.to_string();
  j["n"] = r.n;
  Json steps = Json::array();
  for (const auto& s : r.steps)
    steps.push_back(Json{{"s1", s.s1},
                         {"s2", s.s2},
                         {"result", to_json(s.result)},
                         {"rho_before", num(s.rho_before)},
                         {"rho_after", num(s.rho_after)},
                         {"ordering", to_string(s.ordering)}});
  j["steps"] = std::move(steps);
  j["excluded"] = r.excluded;
  j["is_local_max"] = r.is_local_max;
  j["is_extremal_partition"] = r.is_extremal_partition;
  return j;
}

inline Json to_json(const PerronBoundsReport& r) {
  Json j;
  j["u1"] = r.decomposition.u1;
  j["u2"] = r.decomposition.u2;
  j["partition"] = to_json(r.decomposition.partition);
  j["rho"] = num(r.rho);
  j["lower"] = num(r.lower);
  j["upper"] = num(r.upper);
  j["perron_u1"] = num(r.perron_u1);
  j["perron_u2"] = num(r.perron_u2);
  j["inside_count"] = r.inside_count;
  j["outside_count"] = r.entries.size() - r.inside_count;
  j["below_one_tenth_count"] = r.below_one_tenth_count;
  Json e = Json::array();
  for (const auto& x : r.entries)
    e.push_back(Json{{"vertex", x.vertex}, {"value", num(x.value)}, {"inside", x.inside},
                     {"below_one_tenth", x.below_one_tenth}});
  j["entries"] = std::move(e);
  return j;
}

struct CommandResult {
  bool ok = true;
  Json payload;
  std::vector<std::string> diagnostics;
};

namespace detail {

inline std::string read_all(std::istream& in) {
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> graph_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) lines.push_back(line);
  }
  return lines;
}

struct Io {
  std::istream& in;
  std::ostream& out;
};

inline std::string input_text(const std::string& file, Io& io) {
  if (file.empty() || file == "-") return read_all(io.in);
  std::ifstream f(file);
  if (!f) throw Error("cannot open input file '" + file + "'");
  return read_all(f);
}

inline std::vector<Graph> read_graphs(const std::string& file, Io& io) {
  std::vector<Graph> out;
  for (const auto& line : graph_lines(input_text(file, io))) out.push_back(parse_graph6(line));
  if (out.empty()) throw FormatError("no graph6 input");
  return out;
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write '" + path + "'");
  f << text;
}

}  // namespace detail

/// Executes one command line. JSON results go to `out`, single-line JSON
/// diagnostics to `err`. Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal spectral verification toolkit for planar graphs", "spex"};
  app.require_subcommand(1);
  detail::Io io{in, out};

  unsigned jobs = 1;
  std::uint64_t seed = 0;
  std::string out_path;
  bool no_timing = false;
  double tol = default_residual_tol();
  double gap_tol = kDefaultGapTol;
  app.add_option("--jobs", jobs, "Worker threads for searches")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "Seed for random corpus generation");
  app.add_option("--out", out_path, "Also write the JSON result to this file");
  app.add_flag("--no-timing", no_timing, "Omit timing fields from reports");
  app.add_option("--tol", tol, "Eigen-residual tolerance (default 1e-12, env SPEX_TOL)")->check(CLI::PositiveNumber);
  app.add_option("--gap-tol", gap_tol, "Spectral-radius comparison resolution")->check(CLI::PositiveNumber);

  std::string input_file;
  std::string forbid;
  std::string claim_text;
  std::string partition_text;
  std::string family;
  std::string csv_path;
  int n = 0, k = 0, l = 0, n1 = 0, n2 = 0, max_total = 0, count = 0;
  std::size_t top = 10;
  std::size_t max_iter = kDefaultMaxIter;
  bool with_perron = false, as_json = false, internal = false, trust_planar = false, fatal = false,
       connected_only = false;

  auto* construct = app.add_subcommand("construct", "Build a named graph and print its graph6");
  construct->add_option("--family", family,
                        "path|cycle|k2-bipartite|k2-plus|cll|theta|h|partition|extremal")
      ->required();
  construct->add_option("--n", n);
  construct->add_option("--k", k);
  construct->add_option("--l", l);
  construct->add_option("--n1", n1);
  construct->add_option("--n2", n2);
  construct->add_option("--partition", partition_text, "Path orders, e.g. 3,2,2 (joined with K2)");
  construct->add_option("--forbid", forbid, "cll:L or theta:K");
  construct->add_flag("--json", as_json);

  auto* rho = app.add_subcommand("rho", "Spectral radius of graph6 input (one record per line)");
  rho->add_option("file", input_file, "graph6 file; stdin when omitted");
  rho->add_flag("--perron", with_perron, "Include the Perron vector");
  rho->add_option("--max-iter", max_iter)->check(CLI::PositiveNumber);

  auto* planar = app.add_subcommand("planar", "Planarity of graph6 input");
  planar->add_option("file", input_file);

  auto* check_free = app.add_subcommand("check-free", "Brute-force pattern containment");
  check_free->add_option("--pattern", forbid, "cll:L or theta:K")->required();
  check_free->add_option("file", input_file);

  auto* predicate = app.add_subcommand("predicate", "Closed-form freeness of K2 + H");
  predicate->add_option("--claim", claim_text, "4, 8 or c33")->required();
  auto* pk = predicate->add_option("--k", k);
  auto* pl = predicate->add_option("--l", l);
  pk->excludes(pl);
  predicate->add_option("--partition", partition_text)->required();

  auto* ovp = app.add_subcommand("oracle-vs-predicate", "Exhaustive predicate check against brute force");
  ovp->add_option("--claim", claim_text)->required();
  auto* ok_ = ovp->add_option("--k", k);
  auto* ol_ = ovp->add_option("--l", l);
  ok_->excludes(ol_);
  ovp->add_option("--max-total", max_total)->required()->check(CLI::PositiveNumber);

  auto* fam = app.add_subcommand("family-search", "Rank K2 + H over admissible path unions");
  fam->add_option("--forbid", forbid)->required();
  fam->add_option("--n", n)->required();
  fam->add_option("--top", top)->check(CLI::PositiveNumber);
  fam->add_option("--csv", csv_path, "Also write the ranking as CSV");

  auto* ext = app.add_subcommand("extremal-search", "Exhaustive max-rho search among F-free planar graphs");
  ext->add_option("--forbid", forbid)->required();
  ext->add_option("--n", n)->required();
  auto* in_opt = ext->add_option("--input", input_file, "graph6 stream ('-' for stdin)");
  auto* int_opt = ext->add_flag("--internal", internal, "Enumerate connected graphs internally (n <= 8)");
  in_opt->excludes(int_opt);
  ext->add_flag("--trust-planar", trust_planar, "Stream comes from a planar-graph generator");
  ext->add_flag("--fatal", fatal, "Abort on malformed stream lines");
  ext->add_option("--top", top)->check(CLI::PositiveNumber);
  ext->add_option("--csv", csv_path);

  auto* perron = app.add_subcommand("perron-report", "Perron entries of a K2 + H graph vs [2/rho, 2/rho+6/rho^2]");
  perron->add_option("file", input_file);
  perron->add_option("--forbid", forbid, "Build the extremal construction instead of reading input");
  perron->add_option("--n", n);

  auto* ascent = app.add_subcommand("transform-ascent", "Apply (s1,s2)-transformations and compare rho");
  ascent->add_option("--partition", partition_text)->required();
  ascent->add_option("--forbid", forbid)->required();
  ascent->add_option("--n", n, "Defaults to partition total + 2");

  auto* corpus = app.add_subcommand("random-graphs", "Seeded random graph6 corpus");
  corpus->add_option("--n", n)->required()->check(CLI::Range(1, 62));
  corpus->add_option("--count", count)->required()->check(CLI::NonNegativeNumber);
  corpus->add_flag("--connected", connected_only);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << Json{{"status", "error"}, {"kind", "usage"}, {"message", e.what()}}.dump() << '\n';
    return kUsageError;
  }

  auto* sub = app.get_subcommands().front();
  const std::string command = sub->get_name();
  CommandResult result;
  try {
    auto need = [&](bool cond, const std::string& what) {
      if (!cond) throw UsageError(what);
    };
    auto param_kl = [&]() {
      need(k != 0 || l != 0 || claim_text == "c33", "--k or --l is required for claim " + claim_text);
      return k != 0 ? k : (l != 0 ? l : 3);
    };

    if (command == "construct") {
      std::vector<Graph> graphs;
      if (family == "path") graphs.push_back(path(n));
      else if (family == "cycle") graphs.push_back(cycle(n));
      else if (family == "k2-bipartite") graphs.push_back(k2_bipartite(n));
      else if (family == "k2-plus") graphs.push_back(k2_plus(n));
      else if (family == "cll") graphs.push_back(cll_pattern(l));
      else if (family == "theta") graphs = theta_family(k);
      else if (family == "h") graphs.push_back(join_k2(realize_partition(h_partition(n, n1, n2))));
      else if (family == "partition") graphs.push_back(join_k2(realize_partition(parse_partition(partition_text))));
      else if (family == "extremal") {
        need(!forbid.empty(), "--forbid is required for the extremal family");
        graphs.push_back(extremal_construction(ForbiddenPattern::parse(forbid), n));
      } else {
        throw UsageError("unknown family '" + family + "'");
      }
      if (!as_json) {
        std::string text;
        for (const auto& g : graphs) text += to_graph6(g) + "\n";
        out << text;
        if (!out_path.empty()) detail::write_file(out_path, text);
        return kOk;
      }
      Json arr = Json::array();
      for (const auto& g : graphs)
        arr.push_back(Json{{"graph6", to_graph6(g)}, {"n", g.order()}, {"m", g.size()}});
      result.payload = Json{{"family", family}, {"graphs", std::move(arr)}};
    } else if (command == "rho") {
      Json arr = Json::array();
      for (const auto& g : detail::read_graphs(input_file, io)) {
        Json rec;
        rec["graph6"] = to_graph6(g);
        rec["n"] = g.order();
        const Json fields = to_json(spectral_radius(g, tol, max_iter), with_perron);
        for (auto& [key, value] : fields.items()) rec[key] = value;
        arr.push_back(std::move(rec));
      }
      result.payload = arr.size() == 1 ? arr[0] : Json{{"graphs", std::move(arr)}};
    } else if (command == "planar") {
      Json arr = Json::array();
      for (const auto& g : detail::read_graphs(input_file, io)) {
        auto r = planarity(g);
        arr.push_back(Json{{"graph6", to_graph6(g)}, {"planar", r.planar}, {"reason", r.reason}});
      }
      result.payload = arr.size() == 1 ? arr[0] : Json{{"graphs", std::move(arr)}};
    } else if (command == "check-free") {
      const auto pattern = ForbiddenPattern::parse(forbid);
      std::vector<Graph> members;
      if (auto c = pattern.cll()) members.push_back(cll_pattern(c->l));
      else members = theta_family(pattern.theta()->k);
      Json arr = Json::array();
      for (const auto& g : detail::read_graphs(input_file, io)) {
        Json rec{{"graph6", to_graph6(g)}, {"pattern", pattern.to_string()}};
        Json witness = nullptr;
        for (const auto& m : members)
          if (auto emb = find_subgraph(g, m)) {
            witness = Json{{"member", to_graph6(m)}, {"embedding", *emb}};
            break;
          }
        rec["free"] = witness.is_null();
        rec["witness"] = std::move(witness);
        arr.push_back(std::move(rec));
      }
      result.payload = arr.size() == 1 ? arr[0] : Json{{"graphs", std::move(arr)}};
    } else if (command == "predicate") {
      const Claim claim = parse_claim(claim_text);
      const int param = param_kl();
      const auto p = parse_partition(partition_text);
      result.payload = Json{{"claim", to_string(claim)},
                            {"param", param},
                            {"partition", to_json(p)},
                            {"free", claim_predicate(claim, p, param)}};
    } else if (command == "oracle-vs-predicate") {
      const Claim claim = parse_claim(claim_text);
      result.payload = to_json(oracle_agreement(claim, param_kl(), max_total, jobs));
      result.ok = result.payload["mismatch_count"] == 0;
      if (!result.ok) result.diagnostics.push_back("predicate disagrees with brute force");
    } else if (command == "family-search") {
      SearchOptions opt{top, jobs, tol, gap_tol};
      auto report = family_search(ForbiddenPattern::parse(forbid), n, opt);
      result.payload = to_json(report, !no_timing);
      if (!csv_path.empty()) detail::write_file(csv_path, to_csv(report));
    } else if (command == "extremal-search") {
      need(internal || !input_file.empty(), "extremal-search needs --internal or --input FILE");
      SearchOptions opt{top, jobs, tol, gap_tol};
      const auto pattern = ForbiddenPattern::parse(forbid);
      SearchReport report;
      if (internal) {
        report = exhaustive_search(n, pattern, opt);
      } else if (input_file == "-") {
        report = exhaustive_search_stream(in, n, pattern, StreamOptions{trust_planar, fatal}, opt);
      } else {
        std::ifstream f(input_file);
        if (!f) throw Error("cannot open input file '" + input_file + "'");
        report = exhaustive_search_stream(f, n, pattern, StreamOptions{trust_planar, fatal}, opt);
      }
      result.payload = to_json(report, !no_timing);
      for (const auto& d : report.diagnostics)
        result.diagnostics.push_back("line " + std::to_string(d.line) + ": " + d.message);
      if (!csv_path.empty()) detail::write_file(csv_path, to_csv(report));
    } else if (command == "perron-report") {
      Graph g;
      if (!forbid.empty()) {
        need(n > 0, "--n is required with --forbid");
        g = extremal_construction(ForbiddenPattern::parse(forbid), n);
      } else {
        auto graphs = detail::read_graphs(input_file, io);
        need(graphs.size() == 1, "perron-report takes exactly one graph");
        g = graphs.front();
      }
      result.payload = to_json(perron_bounds_report(g, spectral_radius(g, tol)));
    } else if (command == "transform-ascent") {
      const auto p = parse_partition(partition_text);
      const int order = n != 0 ? n : p.total() + 2;
      result.payload = to_json(verify_transformation_ascent(p, ForbiddenPattern::parse(forbid), order, gap_tol));
    } else if (command == "random-graphs") {
      std::mt19937_64 rng(seed);
      std::bernoulli_distribution coin(0.5);
      std::string text;
      for (int made = 0; made < count;) {
        Graph g(static_cast<std::size_t>(n));
        for (int u = 0; u < n; ++u)
          for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
        if (connected_only && !is_connected(g)) continue;
        text += to_graph6(g) + "\n";
        ++made;
      }
      out << text;
      if (!out_path.empty()) detail::write_file(out_path, text);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << Json{{"status", "error"}, {"kind", "usage"}, {"command", command}, {"message", e.what()}}.dump() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << Json{{"status", "error"}, {"kind", "domain"}, {"command", command}, {"message", e.what()}}.dump() << '\n';
    return kDomainError;
  }

  Json envelope;
  envelope["status"] = result.ok ? "ok" : "error";
  envelope["command"] = command;
  envelope["payload"] = std::move(result.payload);
  envelope["diagnostics"] = result.diagnostics;
  const std::string text = envelope.dump(2) + "\n";
  out << text;
  if (!out_path.empty()) detail::write_file(out_path, text);
  if (!result.ok) {
    err << Json{{"status", "error"}, {"kind", "domain"}, {"command", command},
                {"message", result.diagnostics.empty() ? "failed" : result.diagnostics.front()}}
               .dump()
        << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace spex::cli
