#pragma once

// Canonical labeling and isomorph-free enumeration of small connected graphs.
//
// The canonical form is the lexicographically smallest graph6 string over
// all leaves of an individualization-refinement tree. No automorphism
// pruning is done, so the cost grows with |Aut(G)|; that is fine for the
// orders used here (n <= 8 for enumeration, small top-k lists otherwise).

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "spex/error.hpp"
#include "spex/graph.hpp"
#include "spex/graph6.hpp"

namespace spex {

inline constexpr std::size_t kEnumerationMaxOrder = 8;

namespace detail {

using Coloring = std::vector<std::size_t>;

// Iterated colour refinement to a stable partition. New colours are the rank
// of (old colour, sorted neighbour colours), which keeps the result
// isomorphism-invariant.
inline Coloring refine(const Graph& g, Coloring colors) {
  const std::size_t n = g.order();
  std::size_t classes = std::set<std::size_t>(colors.begin(), colors.end()).size();
  while (true) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = colors[v];
      g.neighbors(v).for_each([&](Vertex u) { sig[v].second.push_back(colors[u]); });
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (Vertex v = 0; v < n; ++v)
      colors[v] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), sig[v]) - sorted.begin());
    if (sorted.size() == classes) return colors;
    classes = sorted.size();
  }
}

inline void canonical_search(const Graph& g, const Coloring& colors, std::string& best) {
  const std::size_t n = g.order();
  // First colour class (by colour value) with more than one member.
  std::vector<std::size_t> size(n, 0);
  for (auto c : colors) ++size[c];
  std::size_t target = n;
  for (std::size_t c = 0; c < n; ++c)
    if (size[c] > 1) {
      target = c;
      break;
    }
  if (target == n) {
    std::string s = to_graph6(permuted(g, colors));
    if (best.empty() || s < best) best = std::move(s);
    return;
  }
  for (Vertex v = 0; v < n; ++v) {
    if (colors[v] != target) continue;
    Coloring next(n);
    for (Vertex u = 0; u < n; ++u) next[u] = 2 * colors[u] + (colors[u] == target && u != v ? 1 : 0);
    canonical_search(g, refine(g, std::move(next)), best);
  }
}

}  // namespace detail

/// graph6 of the canonical relabeling; equal strings iff isomorphic graphs.
inline std::string canonical_graph6(const Graph& g) {
  if (g.order() == 0) return to_graph6(g);
  std::string best;
  detail::canonical_search(g, detail::refine(g, detail::Coloring(g.order(), 0)), best);
  return best;
}

inline bool are_isomorphic(const Graph& a, const Graph& b) {
  return a.order() == b.order() && a.size() == b.size() && canonical_graph6(a) == canonical_graph6(b);
}

/// One canonical representative per isomorphism class of connected graphs on
/// n vertices, sorted by canonical graph6. Built by vertex augmentation:
/// every connected graph has a vertex whose deletion leaves it connected.
inline std::vector<Graph> connected_graphs(std::size_t n) {
  if (n == 0) throw InvalidArgument("connected_graphs needs n >= 1");
  if (n > kEnumerationMaxOrder)
    throw InvalidArgument("internal enumeration is limited to n <= " + std::to_string(kEnumerationMaxOrder));
  std::vector<std::string> level{to_graph6(Graph(1))};
  for (std::size_t order = 2; order <= n; ++order) {
    std::unordered_set<std::string> seen;
    const std::size_t prev = order - 1;
    for (const auto& code : level) {
      const Graph base = parse_graph6(code);
      for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << prev); ++mask) {
        Graph g(order);
        for (auto [u, v] : base.edges()) g.add_edge(u, v);
        for (Vertex u = 0; u < prev; ++u)
          if ((mask >> u) & 1U) g.add_edge(u, prev);
        seen.insert(canonical_graph6(g));
      }
    }
    level.assign(seen.begin(), seen.end());
    std::sort(level.begin(), level.end());
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (const auto& code : level) out.push_back(parse_graph6(code));
  return out;
}

}  // namespace spex
