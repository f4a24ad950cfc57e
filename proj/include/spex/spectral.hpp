#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <string>
#include <vector>

#include "spex/charpoly.hpp"
#include "spex/error.hpp"
#include "spex/graph.hpp"

namespace spex {

inline constexpr double kDefaultResidualTol = 1e-12;
inline constexpr std::size_t kDefaultMaxIter = 1'000'000;
inline constexpr double kDefaultGapTol = 1e-9;

/// Residual tolerance default, overridable through SPEX_TOL.
inline double default_residual_tol() {
  if (const char* env = std::getenv("SPEX_TOL")) {
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return kDefaultResidualTol;
}

struct SpectralResult {
  double rho = 0;
  std::vector<double> perron;  // max entry exactly 1
  std::size_t iterations = 0;
  double residual = 0;  // max_v |(A x)_v - rho x_v|
};

namespace detail {

inline std::vector<std::vector<Vertex>> adjacency_lists(const Graph& g) {
  std::vector<std::vector<Vertex>> adj(g.order());
  for (Vertex v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v).to_vector();
  return adj;
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace detail

/// max_v |sum_{u in N(v)} x_u - rho x_v|
inline double eigen_residual(const Graph& g, const SpectralResult& r) {
  if (r.perron.size() != g.order())
    throw InvalidArgument("eigen_residual: vector has dimension " + std::to_string(r.perron.size()) +
                          ", graph has order " + std::to_string(g.order()));
  double worst = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    double s = 0;
    g.neighbors(v).for_each([&](Vertex u) { s += r.perron[u]; });
    worst = std::max(worst, std::abs(s - r.rho * r.perron[v]));
  }
  return worst;
}

/// Perron root and vector by power iteration on A + I (primitive for every
/// connected graph, so bipartite inputs do not oscillate), started from the
/// all-ones vector. Stops once the eigenequation residual is <= tol; the
/// eigenvalue estimate is the Rayleigh quotient of the current iterate.
inline SpectralResult spectral_radius(const Graph& g, double tol = kDefaultResidualTol,
                                      std::size_t max_iter = kDefaultMaxIter) {
  const std::size_t n = g.order();
  if (n == 0) throw InvalidArgument("spectral_radius: empty graph");
  if (!is_connected(g)) throw InvalidArgument("spectral_radius: graph is disconnected");
  const auto adj = detail::adjacency_lists(g);

  std::vector<double> x(n, 1.0);
  std::vector<double> ax(n);
  for (std::size_t it = 1; it <= max_iter; ++it) {
    for (Vertex v = 0; v < n; ++v) {
      double s = 0;
      for (Vertex u : adj[v]) s += x[u];
      ax[v] = s;
    }
    const double rho = detail::dot(x, ax) / detail::dot(x, x);
    double res = 0;
    for (Vertex v = 0; v < n; ++v) res = std::max(res, std::abs(ax[v] - rho * x[v]));
    if (res <= tol) return SpectralResult{rho, std::move(x), it, res};

    double top = 0;
    for (Vertex v = 0; v < n; ++v) {
      ax[v] += x[v];
      top = std::max(top, ax[v]);
    }
    for (Vertex v = 0; v < n; ++v) x[v] = ax[v] / top;
  }
  throw ConvergenceError("spectral_radius: residual above " + std::to_string(tol) + " after " +
                         std::to_string(max_iter) + " iterations");
}

/// Largest adjacency eigenvalue of a possibly disconnected graph: the maximum
/// over its components (isolated vertices contribute 0).
inline double spectral_radius_over_components(const Graph& g, double tol = kDefaultResidualTol,
                                              std::size_t max_iter = kDefaultMaxIter) {
  double best = 0;
  for (const auto& c : components(g)) best = std::max(best, spectral_radius(c, tol, max_iter).rho);
  return best;
}

/// sqrt(2n - 4), the spectral radius of K_{2,n-2}.
inline double rho_closed_k2n2(int n) {
  if (n < 3) throw InvalidArgument("rho_closed_k2n2 needs n >= 3");
  return std::sqrt(2.0 * n - 4.0);
}

/// 2 sum_{uv in E} y_u y_v / y^T y
inline double rayleigh_quotient(const Graph& g, const std::vector<double>& y) {
  if (y.size() != g.order()) throw InvalidArgument("rayleigh_quotient: dimension mismatch");
  double num = 0;
  for (auto [u, v] : g.edges()) num += 2.0 * y[u] * y[v];
  const double den = detail::dot(y, y);
  if (den == 0) throw InvalidArgument("rayleigh_quotient: zero vector");
  return num / den;
}

enum class RhoOrdering { Less, Greater, Indistinguishable };

inline const char* to_string(RhoOrdering o) {
  switch (o) {
    case RhoOrdering::Less: return "Less";
    case RhoOrdering::Greater: return "Greater";
    case RhoOrdering::Indistinguishable: return "Indistinguishable";
  }
  return "?";
}

struct CompareOptions {
  double gap_tol = kDefaultGapTol;
  /// Evaluate a disconnected input as the max over its components instead of
  /// rejecting it (needed when comparing against edge deletions).
  bool allow_disconnected = false;
};

struct RhoComparison {
  RhoOrdering ordering = RhoOrdering::Indistinguishable;
  double rho1 = 0;
  double rho2 = 0;
  bool used_oracle = false;
};

/// Compares rho(g1) with rho(g2) at resolution gap_tol. Near-ties on small
/// graphs (both n <= 12, power-iteration gap within 10 * gap_tol) are settled
/// by the exact characteristic-polynomial roots.
inline RhoComparison compare_rho_detailed(const Graph& g1, const Graph& g2, CompareOptions opt = {}) {
  const double tol = std::min(kDefaultResidualTol, opt.gap_tol / 10);
  auto rho_of = [&](const Graph& g) {
    if (opt.allow_disconnected && g.order() > 0 && !is_connected(g))
      return spectral_radius_over_components(g, tol);
    return spectral_radius(g, tol).rho;
  };
  RhoComparison out;
  out.rho1 = rho_of(g1);
  out.rho2 = rho_of(g2);
  double delta = out.rho1 - out.rho2;
  if (g1.order() <= kCharpolyMaxOrder && g2.order() <= kCharpolyMaxOrder &&
      std::abs(delta) <= 10 * opt.gap_tol) {
    const HighPrecision o1 = largest_real_root(characteristic_polynomial(g1));
    const HighPrecision o2 = largest_real_root(characteristic_polynomial(g2));
    delta = static_cast<double>(o1 - o2);
    out.used_oracle = true;
  }
  if (delta > opt.gap_tol)
    out.ordering = RhoOrdering::Greater;
  else if (delta < -opt.gap_tol)
    out.ordering = RhoOrdering::Less;
  return out;
}

inline RhoOrdering compare_rho(const Graph& g1, const Graph& g2, double gap_tol = kDefaultGapTol) {
  return compare_rho_detailed(g1, g2, CompareOptions{gap_tol, false}).ordering;
}

}  // namespace spex
