#pragma once

#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "spex/graph.hpp"

namespace spex {

struct PlanarityResult {
  bool planar = false;
  std::string reason;
};

/// Planarity decision. Graphs with |E| > 3n - 6 (n >= 3) are rejected by the
/// edge bound; everything else goes through the Boyer-Myrvold test.
inline PlanarityResult planarity(const Graph& g) {
  const std::size_t n = g.order();
  const std::size_t m = g.size();
  if (n >= 3 && m > 3 * n - 6)
    return {false, "edge bound: |E| = " + std::to_string(m) + " > 3n - 6 = " + std::to_string(3 * n - 6)};
  if (n < 5) return {true, "fewer than 5 vertices"};

  using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                           boost::property<boost::vertex_index_t, int>,
                                           boost::property<boost::edge_index_t, int>>;
  BoostGraph bg(n);
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  int idx = 0;
  for (auto [e, end] = boost::edges(bg); e != end; ++e) boost::put(boost::edge_index, bg, *e, idx++);

  const bool planar = boost::boyer_myrvold_planarity_test(bg);
  return {planar, planar ? "embedding exists" : "Kuratowski subgraph exists"};
}

inline bool is_planar(const Graph& g) { return planarity(g).planar; }

}  // namespace spex
