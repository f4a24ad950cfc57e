#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "spex/error.hpp"

namespace spex {

using Vertex = std::size_t;

/// Fixed-capacity set of vertex ids backed by 64-bit words.
/// Membership is O(1); iteration visits ids in ascending order.
class VertexSet {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  VertexSet() = default;
  explicit VertexSet(std::size_t capacity)
      : capacity_(capacity), words_((capacity + 63) / 64, 0) {}

  std::size_t capacity() const noexcept { return capacity_; }

  bool test(Vertex v) const noexcept {
    return (words_[v >> 6] >> (v & 63)) & 1U;
  }
  void set(Vertex v) noexcept { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void reset(Vertex v) noexcept { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
  }

  /// Smallest member >= from, or npos.
  std::size_t next(std::size_t from) const noexcept {
    if (from >= capacity_) return npos;
    std::size_t wi = from >> 6;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      if (w != 0) return (wi << 6) + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi == words_.size()) return npos;
      w = words_[wi];
    }
  }
  std::size_t first() const noexcept { return next(0); }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t v = first(); v != npos; v = next(v + 1)) fn(v);
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(count());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  /// Removes every member of o.
  VertexSet& subtract(const VertexSet& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::size_t capacity_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n, VertexSet(n)) {}

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edges_; }

  /// Inserts {u,v}. Returns false when the edge was already present.
  bool add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidArgument("self-loop requested at vertex " + std::to_string(u));
    if (adj_[u].test(v)) return false;
    adj_[u].set(v);
    adj_[v].set(u);
    ++edges_;
    return true;
  }

  /// Removes {u,v}. Returns false when the edge was absent.
  bool remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !adj_[u].test(v)) return false;
    adj_[u].reset(v);
    adj_[v].reset(u);
    --edges_;
    return true;
  }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u].test(v);
  }

  std::size_t degree(Vertex v) const {
    check_vertex(v);
    return adj_[v].count();
  }

  const VertexSet& neighbors(Vertex v) const {
    check_vertex(v);
    return adj_[v];
  }

  /// Edges as (u,v) with u < v, sorted lexicographically.
  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_);
    for (Vertex u = 0; u < order(); ++u)
      for (Vertex v = adj_[u].next(u + 1); v != VertexSet::npos; v = adj_[u].next(v + 1))
        out.emplace_back(u, v);
    return out;
  }

  std::vector<std::size_t> degrees() const {
    std::vector<std::size_t> d(order());
    for (Vertex v = 0; v < order(); ++v) d[v] = adj_[v].count();
    return d;
  }

  /// Full scan of the adjacency invariants (symmetry, no loops, edge count).
  bool is_consistent() const {
    std::size_t half = 0;
    for (Vertex u = 0; u < order(); ++u) {
      if (adj_[u].capacity() != order() || adj_[u].test(u)) return false;
      bool ok = true;
      adj_[u].for_each([&](Vertex v) {
        if (!adj_[v].test(u)) ok = false;
        ++half;
      });
      if (!ok) return false;
    }
    return half == 2 * edges_;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.edges_ == b.edges_ && a.adj_ == b.adj_;
  }

 private:
  void check_vertex(Vertex v) const {
    if (v >= order())
      throw InvalidArgument("vertex id " + std::to_string(v) + " out of range for order " +
                            std::to_string(order()));
  }

  std::vector<VertexSet> adj_;
  std::size_t edges_ = 0;
};

inline Graph new_graph(std::size_t n) { return Graph(n); }

inline std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

/// Component label per vertex; labels are assigned in order of smallest member.
inline std::vector<std::size_t> component_labels(const Graph& g) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(g.order(), unset);
  std::size_t next = 0;
  std::deque<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] != unset) continue;
    label[s] = next;
    queue.push_back(s);
    while (!queue.empty()) {
      Vertex u = queue.front();
      queue.pop_front();
      g.neighbors(u).for_each([&](Vertex v) {
        if (label[v] == unset) {
          label[v] = next;
          queue.push_back(v);
        }
      });
    }
    ++next;
  }
  return label;
}

inline std::size_t component_count(const Graph& g) {
  auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

inline bool is_connected(const Graph& g) {
  if (g.order() == 0) throw InvalidArgument("connectivity is undefined for the empty graph");
  return component_count(g) == 1;
}

/// Vertices of g2 are shifted by g1.order().
inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
  const std::size_t shift = g1.order();
  Graph out(shift + g2.order());
  for (auto [u, v] : g1.edges()) out.add_edge(u, v);
  for (auto [u, v] : g2.edges()) out.add_edge(u + shift, v + shift);
  return out;
}

/// Subgraph induced by `keep`, relabelled in ascending order of the kept ids.
inline Graph induced_subgraph(const Graph& g, const std::vector<Vertex>& keep) {
  Graph out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = i + 1; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j])) out.add_edge(i, j);
  return out;
}

/// Relabels so that vertex v of g becomes perm[v].
inline Graph permuted(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.order()) throw InvalidArgument("permutation size mismatch");
  Graph out(g.order());
  for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
  return out;
}

/// Components of g as separate graphs, in order of smallest member.
inline std::vector<Graph> components(const Graph& g) {
  auto labels = component_labels(g);
  std::size_t k = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<std::vector<Vertex>> members(k);
  for (Vertex v = 0; v < g.order(); ++v) members[labels[v]].push_back(v);
  std::vector<Graph> out;
  out.reserve(k);
  for (const auto& m : members) out.push_back(induced_subgraph(g, m));
  return out;
}

}  // namespace spex
