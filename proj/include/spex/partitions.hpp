#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "spex/constructions.hpp"
#include "spex/error.hpp"

namespace spex {

namespace detail {

template <typename Fn>
void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, Fn& fn) {
  if (remaining == 0) {
    fn(PathPartition(prefix));
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, fn);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Visits every partition of `total` (parts <= max_part when given) once, in
/// descending lexicographic order: [4], [3,1], [2,2], [2,1,1], [1,1,1,1].
template <typename Fn>
void for_each_partition(int total, std::optional<int> max_part, Fn&& fn) {
  if (total < 1) throw InvalidArgument("enumerate_partitions: total must be >= 1");
  std::vector<int> prefix;
  detail::partitions_rec(total, max_part.value_or(total), prefix, fn);
}

inline std::vector<PathPartition> enumerate_partitions(int total, std::optional<int> max_part = {}) {
  std::vector<PathPartition> out;
  for_each_partition(total, max_part, [&](PathPartition p) { out.push_back(std::move(p)); });
  return out;
}

}  // namespace spex
