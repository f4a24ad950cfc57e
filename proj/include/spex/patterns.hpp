#pragma once

// Subgraph containment (the brute-force oracle), the closed-form freeness
// predicates for K2 + H hosts, and recovery of the K2 + H structure.

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "spex/constructions.hpp"
#include "spex/error.hpp"
#include "spex/forbidden_pattern.hpp"
#include "spex/graph.hpp"
#include "spex/parallel.hpp"
#include "spex/partitions.hpp"

namespace spex {

namespace detail {

class SubgraphMatcher {
 public:
  SubgraphMatcher(const Graph& host, const Graph& pattern) : host_(host), pattern_(pattern) {
    order_pattern();
    host_degree_ = host.degrees();
  }

  std::optional<std::vector<Vertex>> run() {
    image_.assign(pattern_.order(), 0);
    used_ = VertexSet(host_.order());
    if (extend(0)) return image_;
    return std::nullopt;
  }

 private:
  // Each next pattern vertex maximizes its number of already-placed
  // neighbors (ties: higher degree, then lower id), so candidates come from
  // neighborhood intersections as early as possible.
  void order_pattern() {
    const std::size_t k = pattern_.order();
    std::vector<int> placed_nbrs(k, 0);
    std::vector<bool> placed(k, false);
    const auto deg = pattern_.degrees();
    for (std::size_t step = 0; step < k; ++step) {
      Vertex best = k;
      for (Vertex v = 0; v < k; ++v) {
        if (placed[v]) continue;
        if (best == k || std::tie(placed_nbrs[v], deg[v]) > std::tie(placed_nbrs[best], deg[best]))
          best = v;
      }
      placed[best] = true;
      std::vector<std::size_t> back;
      for (std::size_t i = 0; i < order_.size(); ++i)
        if (pattern_.has_edge(best, order_[i])) back.push_back(i);
      order_.push_back(best);
      back_edges_.push_back(std::move(back));
      pattern_degree_.push_back(deg[best]);
      pattern_.neighbors(best).for_each([&](Vertex u) { ++placed_nbrs[u]; });
    }
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    VertexSet cand(host_.order());
    if (back_edges_[depth].empty()) {
      for (Vertex v = 0; v < host_.order(); ++v) cand.set(v);
    } else {
      cand = host_.neighbors(image_[order_[back_edges_[depth].front()]]);
      for (std::size_t i = 1; i < back_edges_[depth].size(); ++i)
        cand &= host_.neighbors(image_[order_[back_edges_[depth][i]]]);
    }
    cand.subtract(used_);
    for (Vertex h = cand.first(); h != VertexSet::npos; h = cand.next(h + 1)) {
      if (host_degree_[h] < pattern_degree_[depth]) continue;
      image_[order_[depth]] = h;
      used_.set(h);
      if (extend(depth + 1)) return true;
      used_.reset(h);
    }
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<Vertex> order_;
  std::vector<std::vector<std::size_t>> back_edges_;
  std::vector<std::size_t> pattern_degree_;
  std::vector<std::size_t> host_degree_;
  std::vector<Vertex> image_;
  VertexSet used_;
};

}  // namespace detail

/// First embedding of `pattern` into `host` as a (not necessarily induced)
/// subgraph: entry i is the host vertex carrying pattern vertex i. Host
/// candidates are tried in ascending id order.
inline std::optional<std::vector<Vertex>> find_subgraph(const Graph& host, const Graph& pattern) {
  if (pattern.order() > host.order() || pattern.size() > host.size()) return std::nullopt;
  if (pattern.order() == 0) return std::vector<Vertex>{};
  return detail::SubgraphMatcher(host, pattern).run();
}

inline bool contains_subgraph(const Graph& host, const Graph& pattern) {
  return find_subgraph(host, pattern).has_value();
}

inline bool is_cll_free(const Graph& g, int l) {
  if (l < 3) throw InvalidArgument("is_cll_free needs l >= 3");
  return !contains_subgraph(g, cll_pattern(l));
}

inline bool is_theta_free(const Graph& g, int k) {
  if (k < 4) throw InvalidArgument("is_theta_free needs k >= 4");
  for (const auto& member : theta_family(k))
    if (contains_subgraph(g, member)) return false;
  return true;
}

inline bool is_free(const Graph& g, const ForbiddenPattern& pattern) {
  if (auto c = pattern.cll()) return is_cll_free(g, c->l);
  if (auto t = pattern.theta()) return is_theta_free(g, t->k);
  return !contains_subgraph(g, pattern.explicit_graph()->graph);
}

/// C_{l,l}-freeness of K2 + realize(p) in closed form (l >= 4). Missing parts
/// count as 0.
inline bool claim4_free_predicate(const PathPartition& p, int l) {
  if (l < 4) throw InvalidArgument("claim4 predicate needs l >= 4");
  const int n1 = p.part(0), n2 = p.part(1), n3 = p.part(2);
  return (n1 + n2 <= 2 * l - 4 && n1 <= l - 2) || (n1 + n2 <= 2 * l - 4 && n2 + n3 <= l - 3);
}

/// C_{3,3}-freeness of K2 + realize(p): H must be edgeless, unless the host
/// has fewer than the 5 vertices of C_{3,3} (total <= 2).
inline bool c33_free_predicate(const PathPartition& p) { return p.part(0) <= 1 || p.total() <= 2; }

/// Theta_k-freeness of K2 + realize(p) in closed form (k >= 5).
inline bool claim8_free_predicate(const PathPartition& p, int k) {
  if (k < 5) throw InvalidArgument("claim8 predicate needs k >= 5");
  return p.part(0) + p.part(1) <= k - 3;
}

enum class Claim { Claim4, Claim8, C33 };

inline const char* to_string(Claim c) {
  switch (c) {
    case Claim::Claim4: return "4";
    case Claim::Claim8: return "8";
    case Claim::C33: return "c33";
  }
  return "?";
}

inline Claim parse_claim(const std::string& s) {
  if (s == "4" || s == "claim4") return Claim::Claim4;
  if (s == "8" || s == "claim8") return Claim::Claim8;
  if (s == "c33") return Claim::C33;
  throw InvalidArgument("unknown claim '" + s + "' (expected 4, 8 or c33)");
}

inline bool claim_predicate(Claim claim, const PathPartition& p, int param) {
  switch (claim) {
    case Claim::Claim4: return claim4_free_predicate(p, param);
    case Claim::Claim8: return claim8_free_predicate(p, param);
    case Claim::C33: return c33_free_predicate(p);
  }
  return false;
}

/// The pattern whose freeness `claim` characterizes.
inline ForbiddenPattern claim_pattern(Claim claim, int param) {
  switch (claim) {
    case Claim::Claim4: return Cll{param};
    case Claim::Claim8: return Theta{param};
    case Claim::C33: return Cll{3};
  }
  throw InvalidArgument("unknown claim");
}

/// Closed-form freeness of K2 + realize(p) for a Cll or Theta(k >= 5) pattern.
inline bool structural_free_predicate(const ForbiddenPattern& pattern, const PathPartition& p) {
  if (auto c = pattern.cll()) return c->l == 3 ? c33_free_predicate(p) : claim4_free_predicate(p, c->l);
  if (auto t = pattern.theta(); t && t->k >= 5) return claim8_free_predicate(p, t->k);
  throw InvalidArgument("no closed-form predicate for pattern " + pattern.to_string());
}

struct JoinDecomposition {
  Vertex u1 = 0;  // u'
  Vertex u2 = 0;  // u''
  PathPartition partition;
};

/// Finds the lexicographically smallest adjacent pair {u', u''} dominating
/// every other vertex such that the remaining vertices induce a disjoint
/// union of paths.
inline std::optional<JoinDecomposition> decompose_join(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) return std::nullopt;
  std::vector<Vertex> dominating;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) dominating.push_back(v);
  for (std::size_t i = 0; i < dominating.size(); ++i)
    for (std::size_t j = i + 1; j < dominating.size(); ++j) {
      const Vertex a = dominating[i], b = dominating[j];
      std::vector<Vertex> rest;
      for (Vertex v = 0; v < n; ++v)
        if (v != a && v != b) rest.push_back(v);
      const Graph h = induced_subgraph(g, rest);
      bool paths = true;
      for (Vertex v = 0; v < h.order(); ++v)
        if (h.degree(v) > 2) paths = false;
      const std::size_t comps = component_count(h);
      if (!paths || h.size() + comps != h.order()) continue;
      std::vector<int> sizes;
      for (const auto& c : components(h)) sizes.push_back(static_cast<int>(c.order()));
      return JoinDecomposition{a, b, PathPartition(std::move(sizes))};
    }
  return std::nullopt;
}

struct PredicateMismatch {
  PathPartition partition;
  bool predicate = false;
  bool oracle = false;
};

struct AgreementReport {
  Claim claim = Claim::Claim4;
  int param = 0;
  int max_total = 0;
  std::size_t checked = 0;
  std::size_t free_count = 0;  // partitions whose host is pattern-free per the oracle
  std::vector<PredicateMismatch> mismatches;  // ascending lexicographic by parts
};

/// Compares the closed-form predicate against brute-force containment on
/// K2 + realize(p) for every partition p with total <= max_total.
inline AgreementReport oracle_agreement(Claim claim, int param, int max_total, unsigned jobs = 1) {
  const ForbiddenPattern pattern = claim_pattern(claim, param);
  std::vector<PathPartition> all;
  for (int total = 1; total <= max_total; ++total)
    for_each_partition(total, std::nullopt, [&](PathPartition p) { all.push_back(std::move(p)); });

  struct Outcome {
    bool predicate = false;
    bool oracle = false;
  };
  auto outcomes = parallel_map(all.size(), jobs, [&](std::size_t i) {
    return Outcome{claim_predicate(claim, all[i], param),
                   is_free(join_k2(realize_partition(all[i])), pattern)};
  });

  AgreementReport report{claim, param, max_total, all.size(), 0, {}};
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (outcomes[i].oracle) ++report.free_count;
    if (outcomes[i].predicate != outcomes[i].oracle)
      report.mismatches.push_back({all[i], outcomes[i].predicate, outcomes[i].oracle});
  }
  std::sort(report.mismatches.begin(), report.mismatches.end(),
            [](const auto& a, const auto& b) { return a.partition < b.partition; });
  return report;
}

}  // namespace spex
