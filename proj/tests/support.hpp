#pragma once

// Test-only generators and independent oracles. Nothing here calls into the
// code path it is used to check.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "spex/graph.hpp"

namespace spex::testing {

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// Random connected graph: random spanning tree plus extra edges.
inline Graph random_connected_graph(std::size_t n, double extra, std::mt19937_64& rng) {
  Graph g(n);
  for (Vertex v = 1; v < n; ++v) {
    std::uniform_int_distribution<Vertex> pick(0, v - 1);
    g.add_edge(pick(rng), v);
  }
  std::bernoulli_distribution coin(extra);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

/// Subgraph containment by trying every injective vertex map. Only for tiny
/// inputs (host^pattern maps).
inline bool brute_force_contains(const Graph& host, const Graph& pattern) {
  const std::size_t k = pattern.order(), n = host.order();
  if (k > n) return false;
  std::vector<Vertex> image(k);
  std::vector<bool> used(n, false);
  const auto pedges = pattern.edges();
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == k) {
      for (auto [a, b] : pedges)
        if (!host.has_edge(image[a], image[b])) return false;
      return true;
    }
    for (Vertex h = 0; h < n; ++h) {
      if (used[h]) continue;
      used[h] = true;
      image[i] = h;
      if (self(self, i + 1)) return true;
      used[h] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

/// Number of vertices on a longest simple path, by DFS from every vertex.
inline std::size_t longest_path_order(const Graph& g) {
  std::size_t best = g.order() > 0 ? 1 : 0;
  std::vector<bool> on(g.order(), false);
  auto dfs = [&](auto&& self, Vertex v, std::size_t len) -> void {
    best = std::max(best, len);
    on[v] = true;
    for (Vertex u = 0; u < g.order(); ++u)
      if (!on[u] && g.has_edge(v, u)) self(self, u, len + 1);
    on[v] = false;
  };
  for (Vertex v = 0; v < g.order(); ++v) dfs(dfs, v, 1);
  return best;
}

/// Characteristic polynomial det(xI - A) by Faddeev-LeVerrier over the
/// integers (ascending coefficients). Divisions by k are exact.
inline std::vector<std::int64_t> faddeev_leverrier(const Graph& g) {
  const std::size_t n = g.order();
  using Mat = std::vector<std::vector<std::int64_t>>;
  Mat a(n, std::vector<std::int64_t>(n, 0));
  for (auto [u, v] : g.edges()) a[u][v] = a[v][u] = 1;
  auto mul = [&](const Mat& x, const Mat& y) {
    Mat z(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t t = 0; t < n; ++t)
        if (x[i][t] != 0)
          for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][t] * y[t][j];
    return z;
  };
  std::vector<std::int64_t> c(n + 1, 0);
  c[n] = 1;
  Mat m(n, std::vector<std::int64_t>(n, 0));  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    Mat next = mul(a, m);
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    m = next;
    Mat am = mul(a, m);
    std::int64_t trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am[i][i];
    c[n - k] = -trace / static_cast<std::int64_t>(k);
  }
  return c;
}

}  // namespace spex::testing
