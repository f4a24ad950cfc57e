#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "spex/error.hpp"
#include "spex/graph.hpp"
#include "spex/patterns.hpp"
#include "spex/spectral.hpp"

namespace spex {

struct PerronEntry {
  Vertex vertex = 0;
  double value = 0;
  bool inside = false;           // value in [lower, upper]
  bool below_one_tenth = false;  // value <= 1/10
};

/// Perron entries of the path vertices of a K2 + H graph against the window
/// [2/rho, 2/rho + 6/rho^2]. Nothing is asserted: the window is only known to
/// hold for very large n, so this records where it does and does not.
struct PerronBoundsReport {
  JoinDecomposition decomposition;
  double rho = 0;
  double lower = 0;
  double upper = 0;
  double perron_u1 = 0;
  double perron_u2 = 0;
  std::vector<PerronEntry> entries;  // ascending vertex id
  std::size_t inside_count = 0;
  std::size_t below_one_tenth_count = 0;

  bool all_inside() const noexcept { return inside_count == entries.size(); }
};

/// Number of distinct values in `values` after merging runs that differ by at
/// most tol.
inline std::size_t distinct_values(std::vector<double> values, double tol) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  std::size_t count = 1;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (values[i] - values[i - 1] > tol) ++count;
  return count;
}

inline PerronBoundsReport perron_bounds_report(const Graph& g, const SpectralResult& r) {
  if (r.perron.size() != g.order()) throw InvalidArgument("perron_bounds_report: dimension mismatch");
  auto dec = decompose_join(g);
  if (!dec) throw InvalidArgument("perron_bounds_report: graph is not of the form K2 + (union of paths)");
  PerronBoundsReport out;
  out.rho = r.rho;
  out.lower = 2.0 / r.rho;
  out.upper = 2.0 / r.rho + 6.0 / (r.rho * r.rho);
  out.perron_u1 = r.perron[dec->u1];
  out.perron_u2 = r.perron[dec->u2];
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v == dec->u1 || v == dec->u2) continue;
    const double x = r.perron[v];
    PerronEntry e{v, x, x >= out.lower && x <= out.upper, x <= 0.1};
    out.inside_count += e.inside;
    out.below_one_tenth_count += e.below_one_tenth;
    out.entries.push_back(e);
  }
  out.decomposition = std::move(*dec);
  return out;
}

}  // namespace spex
