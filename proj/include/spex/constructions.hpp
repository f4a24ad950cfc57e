#pragma once

// Builders for the graph families used throughout: paths, cycles, path
// unions joined to K2, K_{2,n-2} and its one-edge extension, the amalgamated
// cycle C_{l,l}, the Theta family, and the (s1,s2)-transformation on path
// unions.
//
// Labeling convention: path vertices are consecutive within each part, parts
// in non-increasing order, and the two dominating vertices u', u'' take the
// two highest ids.

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "spex/error.hpp"
#include "spex/forbidden_pattern.hpp"
#include "spex/graph.hpp"

namespace spex {

/// Orders of the paths in a disjoint union of paths, kept non-increasing.
class PathPartition {
 public:
  PathPartition() = default;
  explicit PathPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_)
      if (p < 1) throw InvalidArgument("path partition parts must be >= 1");
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
  }

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t count() const noexcept { return parts_.size(); }
  int total() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const noexcept { return parts_.empty(); }

  /// i-th largest part (0-based); missing parts read as 0.
  int part(std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  /// "3,2,2,1"
  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  friend bool operator==(const PathPartition&, const PathPartition&) = default;
  friend auto operator<=>(const PathPartition& a, const PathPartition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

inline Graph path(int k) {
  if (k < 1) throw InvalidArgument("path order must be >= 1");
  Graph g(static_cast<std::size_t>(k));
  for (int i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
  return g;
}

inline Graph cycle(int k) {
  if (k < 3) throw InvalidArgument("cycle order must be >= 3");
  Graph g(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) g.add_edge(i, (i + 1) % k);
  return g;
}

/// Path orders of H(n1, n2): one P_{n1}, as many P_{n2} as fit into the
/// remaining n-2-n1 vertices, plus one shorter remainder path if needed.
inline PathPartition h_partition(int n, int n1, int n2) {
  if (n2 < 1) throw InvalidArgument("h_partition: n2 must be >= 1");
  if (n2 > n1) throw InvalidArgument("h_partition: n2 must not exceed n1");
  if (n - 2 < n1) throw InvalidArgument("h_partition: n1 must not exceed n - 2");
  const int rest = n - 2 - n1;
  std::vector<int> parts{n1};
  parts.insert(parts.end(), static_cast<std::size_t>(rest / n2), n2);
  if (rest % n2 != 0) parts.push_back(rest % n2);
  return PathPartition(std::move(parts));
}

inline Graph realize_partition(const PathPartition& p) {
  Graph g(static_cast<std::size_t>(p.total()));
  Vertex base = 0;
  for (int len : p.parts()) {
    for (int i = 0; i + 1 < len; ++i) g.add_edge(base + i, base + i + 1);
    base += static_cast<Vertex>(len);
  }
  return g;
}

/// K2 + h: two new adjacent vertices joined to every vertex of h.
inline Graph join_k2(const Graph& h) {
  if (h.order() == 0) throw InvalidArgument("join_k2 needs a non-empty graph");
  const std::size_t n = h.order();
  Graph g(n + 2);
  for (auto [u, v] : h.edges()) g.add_edge(u, v);
  for (Vertex v = 0; v < n; ++v) {
    g.add_edge(v, n);
    g.add_edge(v, n + 1);
  }
  g.add_edge(n, n + 1);
  return g;
}

inline Graph k2_bipartite(int n) {
  if (n < 3) throw InvalidArgument("K_{2,n-2} needs n >= 3");
  const auto m = static_cast<Vertex>(n - 2);
  Graph g(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < m; ++v) {
    g.add_edge(v, m);
    g.add_edge(v, m + 1);
  }
  return g;
}

/// K_{2,n-2} plus the edge between vertices 0 and 1 of the large side.
inline Graph k2_plus(int n) {
  if (n < 4) throw InvalidArgument("K+_{2,n-2} needs n >= 4");
  Graph g = k2_bipartite(n);
  g.add_edge(0, 1);
  return g;
}

/// Two l-cycles through the shared vertex 0.
inline Graph cll_pattern(int l) {
  if (l < 3) throw InvalidArgument("C_{l,l} needs l >= 3");
  Graph g(static_cast<std::size_t>(2 * l - 1));
  for (int i = 0; i + 1 < l; ++i) g.add_edge(i, i + 1);
  g.add_edge(l - 1, 0);
  g.add_edge(0, l);
  for (int i = l; i + 1 < 2 * l - 1; ++i) g.add_edge(i, i + 1);
  g.add_edge(2 * l - 2, 0);
  return g;
}

/// C_a . C_b: a k-cycle 0..k-1 with the chord {0, a-1}, where a + b = k + 2.
inline Graph theta_graph(int a, int b) {
  if (a < 3 || b < 3) throw InvalidArgument("theta_graph needs both cycles of length >= 3");
  const int k = a + b - 2;
  Graph g = cycle(k);
  g.add_edge(0, a - 1);
  return g;
}

/// All Theta graphs on k vertices, C_3.C_{k-1} first.
inline std::vector<Graph> theta_family(int k) {
  if (k < 4) throw InvalidArgument("Theta family needs k >= 4");
  std::vector<Graph> out;
  for (int a = 3; a <= k / 2 + 1; ++a) out.push_back(theta_graph(a, k + 2 - a));
  return out;
}

/// (s1,s2)-transformation: P_{s1} u P_{s2} -> P_{s1+1} u P_{s2-1}, or
/// P_{s1+1} when s2 = 1.
inline PathPartition transform(const PathPartition& p, int s1, int s2) {
  if (s2 < 1) throw InvalidArgument("transform: s2 must be >= 1");
  if (s2 > s1) throw InvalidArgument("transform: s2 must not exceed s1");
  std::vector<int> parts = p.parts();
  auto take = [&](int value) {
    auto it = std::find(parts.begin(), parts.end(), value);
    if (it == parts.end())
      throw InvalidArgument("transform: part " + std::to_string(value) + " not present in " +
                            p.to_string());
    parts.erase(it);
  };
  take(s1);
  take(s2);
  parts.push_back(s1 + 1);
  if (s2 >= 2) parts.push_back(s2 - 1);
  return PathPartition(std::move(parts));
}

/// Path union of the extremal graph K2 + H for `pattern`; not defined for
/// Theta(4), whose extremal graph is K_{2,n-2}.
inline PathPartition extremal_partition(const ForbiddenPattern& pattern, int n) {
  if (auto c = pattern.cll()) {
    if (c->l == 3) return h_partition(n, 1, 1);
    return h_partition(n, c->l - 2, c->l - 2);
  }
  if (auto t = pattern.theta()) {
    if (t->k == 4) throw InvalidArgument("Theta(4) extremal graph is K_{2,n-2}, not K2 + H");
    return h_partition(n, (t->k - 2) / 2, (t->k - 3) / 2);
  }
  throw InvalidArgument("no extremal construction for explicit patterns");
}

inline Graph extremal_construction(const ForbiddenPattern& pattern, int n) {
  if (auto t = pattern.theta(); t && t->k == 4) return k2_bipartite(n);
  return join_k2(realize_partition(extremal_partition(pattern, n)));
}

}  // namespace spex
