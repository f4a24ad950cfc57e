#pragma once

// graph6 interchange (McKay's nauty format). Only graph6 is supported;
// sparse6 and digraph6 inputs are rejected.

#include <cstdint>
#include <string>
#include <string_view>

#include "spex/error.hpp"
#include "spex/graph.hpp"

namespace spex {

inline constexpr std::uint64_t kGraph6MaxOrder = 68719476735ULL;  // 2^36 - 1

namespace detail {

inline std::string_view strip_line_end(std::string_view s) {
  if (!s.empty() && s.back() == '\n') s.remove_suffix(1);
  if (!s.empty() && s.back() == '\r') s.remove_suffix(1);
  return s;
}

inline int graph6_value(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u < 63 || u > 126)
    throw FormatError("graph6: byte " + std::to_string(u) + " outside printable range 63..126");
  return u - 63;
}

}  // namespace detail

inline Graph parse_graph6(std::string_view text) {
  text = detail::strip_line_end(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.empty()) throw FormatError("graph6: empty input");
  if (text.front() == ':') throw FormatError("graph6: sparse6 input is not supported");
  if (text.front() == '&') throw FormatError("graph6: digraph6 input is not supported");

  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto take = [&](std::size_t count) {
    if (text.size() - pos < count) throw FormatError("graph6: truncated size header");
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < count; ++i) v = (v << 6) | detail::graph6_value(text[pos++]);
    return v;
  };
  if (text[0] != '~') {
    n = take(1);
  } else if (text.size() > 1 && text[1] == '~') {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw FormatError("graph6: truncated adjacency data");
  if (text.size() - pos > bytes) throw FormatError("graph6: trailing bytes after adjacency data");

  Graph g(static_cast<std::size_t>(n));
  std::uint64_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int chunk = detail::graph6_value(text[pos + k / 6]);
      if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  for (; k < bytes * 6; ++k) {
    if ((detail::graph6_value(text[pos + k / 6]) >> (5 - k % 6)) & 1)
      throw FormatError("graph6: nonzero padding bits");
  }
  return g;
}

inline std::string to_graph6(const Graph& g) {
  const std::uint64_t n = g.order();
  if (n > kGraph6MaxOrder) throw InvalidArgument("graph6: order exceeds encodable range");
  std::string out;
  auto put = [&](std::uint64_t v, int chunks) {
    for (int c = chunks - 1; c >= 0; --c) out.push_back(static_cast<char>(((v >> (6 * c)) & 63) + 63));
  };
  if (n <= 62) {
    put(n, 1);
  } else if (n <= 258047) {
    out.push_back('~');
    put(n, 3);
  } else {
    out += "~~";
    put(n, 6);
  }
  int acc = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    const auto& row = g.neighbors(j);
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (row.test(i) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

}  // namespace spex
