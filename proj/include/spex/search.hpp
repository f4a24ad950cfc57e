#pragma once

// Verification searches for maximum spectral radius among F-free planar
// graphs: over K2 + H families (family mode) and over every connected graph
// of a small order or an external graph6 stream (exhaustive mode).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "spex/charpoly.hpp"
#include "spex/constructions.hpp"
#include "spex/enumeration.hpp"
#include "spex/error.hpp"
#include "spex/forbidden_pattern.hpp"
#include "spex/graph.hpp"
#include "spex/graph6.hpp"
#include "spex/parallel.hpp"
#include "spex/partitions.hpp"
#include "spex/patterns.hpp"
#include "spex/planarity.hpp"
#include "spex/spectral.hpp"

namespace spex {

enum class SearchMode { Exhaustive, Family };
enum class CandidateSource { Internal, Graph6Stream };
enum class GapFlag { Strict, Indistinguishable };

inline const char* to_string(SearchMode m) { return m == SearchMode::Family ? "family" : "exhaustive"; }
inline const char* to_string(CandidateSource s) {
  return s == CandidateSource::Internal ? "internal" : "graph6-stream";
}
inline const char* to_string(GapFlag f) { return f == GapFlag::Strict ? "Strict" : "Indistinguishable"; }

struct RankedCandidate {
  std::string graph6;                    // canonical form when available
  std::optional<PathPartition> partition;  // family mode only
  double rho = 0;
  double residual = 0;
  bool planar = false;  // re-verified after ranking
  bool free = false;    // re-verified by brute-force containment
};

/// A named comparison graph reported next to the search maximum.
struct ReferenceGraph {
  std::string label;
  std::string graph6;
  double rho = 0;
  std::optional<double> rho_closed_form;
  RhoOrdering top_vs_reference = RhoOrdering::Indistinguishable;
};

struct StreamDiagnostic {
  std::size_t line = 0;
  std::string message;
};

struct SearchStats {
  std::size_t visited = 0;     // candidates produced by the source
  std::size_t connected = 0;
  std::size_t planar = 0;
  std::size_t free = 0;        // also planar and connected
};

struct SearchReport {
  SearchMode mode = SearchMode::Family;
  int n = 0;
  ForbiddenPattern pattern = Cll{3};
  CandidateSource source = CandidateSource::Internal;
  std::vector<RankedCandidate> ranked;  // rho descending
  std::vector<GapFlag> gap_flags;       // ranked[i] vs ranked[i+1]
  SearchStats stats;
  std::optional<bool> matches_theorem_extremal;
  std::optional<ReferenceGraph> reference;
  std::vector<StreamDiagnostic> diagnostics;
  double elapsed_seconds = 0;
};

struct SearchOptions {
  std::size_t top_k = 10;
  unsigned jobs = 1;
  double tol = kDefaultResidualTol;
  double gap_tol = kDefaultGapTol;
};

namespace detail {

struct Scored {
  Graph graph;
  std::string key;
  std::optional<PathPartition> partition;
  double rho = 0;
  double residual = 0;
};

// rho descending; candidates whose values chain within gap_tol form one tie
// cluster, ordered by key ascending.
inline void rank(std::vector<Scored>& items, double gap_tol) {
  std::sort(items.begin(), items.end(), [](const Scored& a, const Scored& b) {
    if (a.rho != b.rho) return a.rho > b.rho;
    return a.key < b.key;
  });
  std::size_t start = 0;
  for (std::size_t i = 1; i <= items.size(); ++i) {
    if (i == items.size() || items[i - 1].rho - items[i].rho > gap_tol) {
      std::sort(items.begin() + static_cast<std::ptrdiff_t>(start), items.begin() + static_cast<std::ptrdiff_t>(i),
                [](const Scored& a, const Scored& b) { return a.key < b.key; });
      start = i;
    }
  }
}

inline GapFlag gap_between(const Scored& a, const Scored& b, double gap_tol) {
  double delta = a.rho - b.rho;
  if (std::abs(delta) <= 10 * gap_tol && a.graph.order() <= kCharpolyMaxOrder &&
      b.graph.order() <= kCharpolyMaxOrder)
    delta = static_cast<double>(largest_real_root(characteristic_polynomial(a.graph)) -
                                largest_real_root(characteristic_polynomial(b.graph)));
  return std::abs(delta) > gap_tol ? GapFlag::Strict : GapFlag::Indistinguishable;
}

inline void finish(SearchReport& report, std::vector<Scored> items, const SearchOptions& opt) {
  rank(items, opt.gap_tol);
  if (items.size() > opt.top_k) items.resize(opt.top_k);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const auto& s = items[i];
    report.ranked.push_back(RankedCandidate{s.key, s.partition, s.rho, s.residual, is_planar(s.graph),
                                            is_free(s.graph, report.pattern)});
    if (i + 1 < items.size()) report.gap_flags.push_back(gap_between(items[i], items[i + 1], opt.gap_tol));
  }
}

inline int pattern_part_bound(const ForbiddenPattern& pattern, int total) {
  if (auto c = pattern.cll()) return c->l == 3 ? (total <= 2 ? total : 1) : 2 * c->l - 4;
  return pattern.theta()->k - 3;
}

}  // namespace detail

/// Path partitions of n - 2 whose K2 + H host is pattern-free according to
/// the closed-form predicate, in enumeration order.
inline std::vector<PathPartition> family_candidates(const ForbiddenPattern& pattern, int n) {
  if (pattern.explicit_graph()) throw InvalidArgument("family search needs a cll or theta pattern");
  if (auto t = pattern.theta(); t && t->k == 4)
    throw InvalidArgument("family search does not cover theta:4; its extremal graph K_{2,n-2} is not K2 + H");
  if (n - 2 < 1) throw InvalidArgument("family search needs n >= 3");
  const int total = n - 2;
  std::vector<PathPartition> out;
  for_each_partition(total, std::min(total, detail::pattern_part_bound(pattern, total)), [&](PathPartition p) {
    if (structural_free_predicate(pattern, p)) out.push_back(std::move(p));
  });
  return out;
}

/// Ranks rho(K2 + realize(p)) over every predicate-admissible partition p of
/// n - 2. Flags whether the winner is the extremal partition H(n1, n2).
inline SearchReport family_search(const ForbiddenPattern& pattern, int n, SearchOptions opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  const auto partitions = family_candidates(pattern, n);
  auto scored = parallel_map(partitions.size(), opt.jobs, [&](std::size_t i) {
    Graph g = join_k2(realize_partition(partitions[i]));
    auto r = spectral_radius(g, opt.tol);
    std::string key = to_graph6(g);
    return detail::Scored{std::move(g), std::move(key), partitions[i], r.rho, r.residual};
  });

  SearchReport report;
  report.mode = SearchMode::Family;
  report.n = n;
  report.pattern = pattern;
  report.source = CandidateSource::Internal;
  report.stats = {partitions.size(), partitions.size(), partitions.size(), partitions.size()};
  detail::finish(report, std::move(scored), opt);

  const PathPartition extremal = extremal_partition(pattern, n);
  report.matches_theorem_extremal = !report.ranked.empty() && report.ranked.front().partition == extremal;
  const Graph eg = join_k2(realize_partition(extremal));
  ReferenceGraph ref{"K2+H(" + extremal.to_string() + ")", to_graph6(eg), spectral_radius(eg, opt.tol).rho,
                     std::nullopt, RhoOrdering::Indistinguishable};
  if (!report.ranked.empty())
    ref.top_vs_reference = compare_rho(parse_graph6(report.ranked.front().graph6), eg, opt.gap_tol);
  report.reference = std::move(ref);
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

struct StreamOptions {
  bool trust_planar = false;  // source is known to emit planar graphs only
  bool fatal_errors = false;  // malformed lines abort instead of being skipped
};

namespace detail {

struct Filtered {
  bool connected = false;
  bool planar = false;
  bool free = false;
  std::optional<Scored> scored;
};

inline Filtered evaluate_candidate(const Graph& g, const ForbiddenPattern& pattern, bool trust_planar,
                                   bool canonical, const SearchOptions& opt) {
  Filtered f;
  if (g.order() == 0 || !is_connected(g)) return f;
  f.connected = true;
  if (!trust_planar && !is_planar(g)) return f;
  f.planar = true;
  if (!is_free(g, pattern)) return f;
  f.free = true;
  auto r = spectral_radius(g, opt.tol);
  f.scored = Scored{g, canonical ? canonical_graph6(g) : to_graph6(g), std::nullopt, r.rho, r.residual};
  return f;
}

inline void attach_reference(SearchReport& report, const SearchOptions& opt) {
  const int n = report.n;
  std::optional<Graph> ref_graph;
  ReferenceGraph ref;
  if (auto t = report.pattern.theta(); t && t->k == 4 && n >= 3) {
    ref_graph = k2_bipartite(n);
    ref.label = "K_{2," + std::to_string(n - 2) + "}";
    ref.rho_closed_form = rho_closed_k2n2(n);
  } else if (!report.pattern.explicit_graph()) {
    try {
      ref_graph = extremal_construction(report.pattern, n);
      ref.label = "K2+H(" + extremal_partition(report.pattern, n).to_string() + ")";
    } catch (const InvalidArgument&) {
      return;  // n too small for the construction
    }
  } else {
    return;
  }
  ref.graph6 = ref_graph->order() <= kEnumerationMaxOrder ? canonical_graph6(*ref_graph) : to_graph6(*ref_graph);
  ref.rho = spectral_radius(*ref_graph, opt.tol).rho;
  if (!report.ranked.empty()) {
    const Graph top = parse_graph6(report.ranked.front().graph6);
    ref.top_vs_reference = compare_rho(top, *ref_graph, opt.gap_tol);
    report.matches_theorem_extremal = are_isomorphic(top, *ref_graph);
  }
  report.reference = std::move(ref);
}

inline SearchReport collect(std::vector<Filtered> evaluated, int n, const ForbiddenPattern& pattern,
                            CandidateSource source, const SearchOptions& opt) {
  SearchReport report;
  report.mode = SearchMode::Exhaustive;
  report.n = n;
  report.pattern = pattern;
  report.source = source;
  std::vector<Scored> scored;
  for (auto& f : evaluated) {
    ++report.stats.visited;
    report.stats.connected += f.connected;
    report.stats.planar += f.planar;
    report.stats.free += f.free;
    if (f.scored) scored.push_back(std::move(*f.scored));
  }
  finish(report, std::move(scored), opt);
  attach_reference(report, opt);
  return report;
}

}  // namespace detail

/// Exhaustive search over all connected graphs on n <= 8 vertices up to
/// isomorphism.
inline SearchReport exhaustive_search(int n, const ForbiddenPattern& pattern, SearchOptions opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  if (n < 1 || static_cast<std::size_t>(n) > kEnumerationMaxOrder)
    throw InvalidArgument("internal exhaustive search needs 1 <= n <= " + std::to_string(kEnumerationMaxOrder));
  const auto graphs = connected_graphs(static_cast<std::size_t>(n));
  auto evaluated = parallel_map(graphs.size(), opt.jobs, [&](std::size_t i) {
    return detail::evaluate_candidate(graphs[i], pattern, false, true, opt);
  });
  auto report = detail::collect(std::move(evaluated), n, pattern, CandidateSource::Internal, opt);
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

/// Exhaustive search over graph6 lines read from `in` (one graph per line,
/// blank lines ignored). Graphs of another order are skipped with a
/// diagnostic. Candidates are keyed by canonical graph6 when n <= 8 and by
/// their input encoding otherwise.
inline SearchReport exhaustive_search_stream(std::istream& in, int n, const ForbiddenPattern& pattern,
                                             StreamOptions stream = {}, SearchOptions opt = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Graph> graphs;
  std::vector<StreamDiagnostic> diagnostics;
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      Graph g = parse_graph6(line);
      if (static_cast<int>(g.order()) != n) {
        diagnostics.push_back({lineno, "order " + std::to_string(g.order()) + " != " + std::to_string(n)});
        continue;
      }
      graphs.push_back(std::move(g));
    } catch (const FormatError& e) {
      if (stream.fatal_errors) throw FormatError("line " + std::to_string(lineno) + ": " + e.what());
      diagnostics.push_back({lineno, e.what()});
    }
  }
  const bool canonical = static_cast<std::size_t>(n) <= kEnumerationMaxOrder;
  auto evaluated = parallel_map(graphs.size(), opt.jobs, [&](std::size_t i) {
    return detail::evaluate_candidate(graphs[i], pattern, stream.trust_planar, canonical, opt);
  });
  auto report = detail::collect(std::move(evaluated), n, pattern, CandidateSource::Graph6Stream, opt);
  report.diagnostics = std::move(diagnostics);
  report.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return report;
}

struct TransformStep {
  int s1 = 0;
  int s2 = 0;
  PathPartition result;
  double rho_before = 0;
  double rho_after = 0;
  RhoOrdering ordering = RhoOrdering::Indistinguishable;  // after vs before
};

struct AscentReport {
  PathPartition start;
  ForbiddenPattern pattern = Cll{3};
  int n = 0;
  std::vector<TransformStep> steps;  // only transformations that keep the host pattern-free
  std::size_t excluded = 0;          // applicable transformations that break freeness
  bool is_local_max = true;          // no kept step strictly increases rho
  bool is_extremal_partition = false;
};

namespace detail {

inline bool host_is_free(const ForbiddenPattern& pattern, const PathPartition& p) {
  if (pattern.cll() || (pattern.theta() && pattern.theta()->k >= 5)) return structural_free_predicate(pattern, p);
  return is_free(join_k2(realize_partition(p)), pattern);
}

}  // namespace detail

/// Applies every (s1,s2)-transformation available in p, keeps those whose
/// K2 + H host stays pattern-free, and compares rho before and after.
inline AscentReport verify_transformation_ascent(const PathPartition& p, const ForbiddenPattern& pattern, int n,
                                                 double gap_tol = kDefaultGapTol) {
  if (p.total() != n - 2)
    throw InvalidArgument("partition total " + std::to_string(p.total()) + " != n - 2 = " + std::to_string(n - 2));
  if (!detail::host_is_free(pattern, p))
    throw InvalidArgument("K2 + H(" + p.to_string() + ") is not " + pattern.to_string() + "-free");

  AscentReport report{p, pattern, n, {}, 0, true, false};
  try {
    report.is_extremal_partition = extremal_partition(pattern, n) == p;
  } catch (const InvalidArgument&) {
  }
  const Graph before = join_k2(realize_partition(p));
  std::vector<int> values = p.parts();
  values.erase(std::unique(values.begin(), values.end()), values.end());
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i; j < values.size(); ++j) {
      const int s1 = values[i], s2 = values[j];
      if (s1 == s2 && std::count(p.parts().begin(), p.parts().end(), s1) < 2) continue;
      PathPartition next = transform(p, s1, s2);
      if (!detail::host_is_free(pattern, next)) {
        ++report.excluded;
        continue;
      }
      const Graph after = join_k2(realize_partition(next));
      auto cmp = compare_rho_detailed(after, before, CompareOptions{gap_tol, false});
      if (cmp.ordering == RhoOrdering::Greater) report.is_local_max = false;
      report.steps.push_back({s1, s2, std::move(next), cmp.rho2, cmp.rho1, cmp.ordering});
    }
  return report;
}

}  // namespace spex
