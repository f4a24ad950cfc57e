#pragma once

// Exact characteristic polynomial of an adjacency matrix and isolation of its
// largest real root. Used as an independent oracle for the power iteration.

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "spex/error.hpp"
#include "spex/graph.hpp"

namespace spex {

using HighPrecision = boost::multiprecision::cpp_bin_float_50;

inline constexpr std::size_t kCharpolyMaxOrder = 12;

namespace detail {

using Wide = __int128;
using WidePoly = std::vector<Wide>;  // ascending coefficients

inline void trim(WidePoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

inline WidePoly mul(const WidePoly& a, const WidePoly& b) {
  WidePoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

inline WidePoly sub(WidePoly a, const WidePoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

/// Exact quotient a / d where d is monic and divides a.
inline WidePoly div_exact_monic(WidePoly a, const WidePoly& d) {
  const std::size_t dd = d.size() - 1;
  if (a.size() - 1 < dd) {
    trim(a);
    if (a.size() == 1 && a[0] == 0) return a;
    throw Error("charpoly: inexact polynomial division");
  }
  WidePoly q(a.size() - dd, 0);
  for (std::size_t i = a.size(); i-- > dd;) {
    const Wide c = a[i];
    q[i - dd] = c;
    if (c != 0)
      for (std::size_t j = 0; j <= dd; ++j) a[i - dd + j] -= c * d[j];
  }
  for (std::size_t i = 0; i < dd; ++i)
    if (a[i] != 0) throw Error("charpoly: inexact polynomial division");
  trim(q);
  return q;
}

inline HighPrecision to_high(Wide v) {
  const bool neg = v < 0;
  auto mag = static_cast<unsigned __int128>(neg ? -v : v);
  HighPrecision hi = static_cast<std::uint64_t>(mag >> 64);
  HighPrecision lo = static_cast<std::uint64_t>(mag);
  HighPrecision r = hi * HighPrecision("18446744073709551616") + lo;
  return neg ? -r : r;
}

}  // namespace detail

/// det(xI - A) as ascending integer coefficients (size n+1, leading 1).
/// Bareiss fraction-free elimination over Z[x]; every pivot is a leading
/// principal minor of xI - A, hence monic and never zero.
inline std::vector<std::int64_t> characteristic_polynomial(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kCharpolyMaxOrder)
    throw InvalidArgument("charpoly oracle is limited to n <= " + std::to_string(kCharpolyMaxOrder));
  if (n == 0) return {1};

  std::vector<std::vector<detail::WidePoly>> m(n, std::vector<detail::WidePoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j)
        m[i][j] = {0, 1};
      else
        m[i][j] = {g.has_edge(i, j) ? detail::Wide{-1} : detail::Wide{0}};
    }

  detail::WidePoly prev{1};
  for (std::size_t k = 0; k + 1 < n; ++k) {
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        auto num = detail::sub(detail::mul(m[k][k], m[i][j]), detail::mul(m[i][k], m[k][j]));
        m[i][j] = detail::div_exact_monic(std::move(num), prev);
      }
    prev = m[k][k];
  }
  const auto& det = m[n - 1][n - 1];
  std::vector<std::int64_t> out(n + 1, 0);
  for (std::size_t i = 0; i < det.size(); ++i) out[i] = static_cast<std::int64_t>(det[i]);
  return out;
}

namespace detail {

inline HighPrecision eval(const std::vector<HighPrecision>& p, const HighPrecision& x) {
  HighPrecision acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

// Largest root of a real-rooted polynomial with positive leading coefficient.
// The largest root of p' lies below it and p increases to its right, so
// bisection on [root(p'), cauchy bound] brackets exactly one sign change.
inline HighPrecision largest_root(const std::vector<HighPrecision>& p, const HighPrecision& width) {
  const std::size_t deg = p.size() - 1;
  if (deg == 1) return -p[0] / p[1];
  std::vector<HighPrecision> dp(deg);
  for (std::size_t i = 1; i <= deg; ++i) dp[i - 1] = p[i] * static_cast<int>(i);

  HighPrecision lo = largest_root(dp, width);
  if (eval(p, lo) >= 0) return lo;
  HighPrecision bound = 0;
  for (std::size_t i = 0; i < deg; ++i) bound = std::max(bound, abs(p[i] / p[deg]));
  HighPrecision hi = bound + 1;
  if (hi <= lo) hi = lo + 1;
  while (hi - lo > width) {
    HighPrecision mid = (lo + hi) / 2;
    if (eval(p, mid) > 0)
      hi = mid;
    else
      lo = mid;
  }
  return (lo + hi) / 2;
}

}  // namespace detail

/// Largest real root of a polynomial whose roots are all real (adjacency
/// characteristic polynomials are), located to a half-width below 1e-15.
inline HighPrecision largest_real_root(const std::vector<std::int64_t>& coeffs) {
  std::vector<HighPrecision> p(coeffs.begin(), coeffs.end());
  while (p.size() > 1 && p.back() == 0) p.pop_back();
  if (p.size() < 2) throw InvalidArgument("largest_real_root needs a non-constant polynomial");
  if (p.back() < 0)
    for (auto& c : p) c = -c;
  return detail::largest_root(p, HighPrecision("1e-40"));
}

/// Spectral radius via the exact characteristic polynomial.
inline HighPrecision charpoly_rho_oracle(const Graph& g) {
  if (g.order() > kCharpolyMaxOrder)
    throw InvalidArgument("charpoly oracle is limited to n <= " + std::to_string(kCharpolyMaxOrder));
  if (!is_connected(g)) throw InvalidArgument("charpoly oracle needs a connected graph");
  return largest_real_root(characteristic_polynomial(g));
}

}  // namespace spex
