#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rgg/geograph.hpp"

namespace rgg {

/// Umbrella ordering of a connected vertex set: closed neighbourhoods are
/// contiguous ranges [lo[p], hi[p]] of positions with lo, hi nondecreasing.
/// Exists for unit interval graphs, which covers every d=1 instance and
/// points on a common line.
struct IntervalOrder {
  std::vector<std::size_t> order;  // position -> vertex
  std::vector<std::size_t> lo, hi;
};

/// Orders `vertices` by projection onto their spread direction and checks the
/// umbrella property on the actual graph. Nullopt when the check fails.
std::optional<IntervalOrder> umbrella_order(const GeometricGraph& g, std::span<const std::size_t> vertices);

/// Optimal values on an umbrella ordering (vertex ids in the result).
std::vector<std::size_t> interval_max_independent(const IntervalOrder& io);
std::vector<std::vector<std::size_t>> interval_min_clique_partition(const IntervalOrder& io);
std::vector<std::size_t> interval_min_dominating(const IntervalOrder& io);

}  // namespace rgg
