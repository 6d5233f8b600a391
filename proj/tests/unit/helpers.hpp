#pragma once

#include <cmath>
#include <cstdint>

#include "rgg/point_set.hpp"
#include "rgg/rng.hpp"

namespace rgg::test {

/// n uniform points in [0, side)^d.
inline PointSet random_points(CounterRng& rng, int dim, std::size_t n, double side) {
  PointSet ps(dim);
  std::vector<double> p(static_cast<std::size_t>(dim));
  while (ps.size() < n) {
    for (auto& c : p) c = rng.uniform(0.0, side);
    ps.push_back(p);
  }
  return ps;
}

/// Instance with a box side chosen so the graph at radius 1 is neither
/// empty nor complete.
inline PointSet random_instance(CounterRng& rng, int dim, std::size_t n) {
  const double side = dim == 1 ? 0.4 * static_cast<double>(n) : 0.8 * std::sqrt(static_cast<double>(n));
  return random_points(rng, dim, n, rng.uniform(0.5, 1.5) * side);
}

}  // namespace rgg::test
