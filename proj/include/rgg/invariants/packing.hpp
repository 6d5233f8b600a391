#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rgg/geograph.hpp"
#include "rgg/invariants/solve_result.hpp"

namespace rgg {

/// Connected pattern graph H on vertices 0..h-1.
struct Pattern {
  std::string name;
  std::size_t h = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  /// Accepts K<h> (complete), P<h> (path), C<h> (cycle, h >= 3), S<h> (star).
  static Pattern parse(const std::string& name);
  static Pattern complete(std::size_t h);
  static Pattern path(std::size_t h);
};

struct WeightedPattern {
  Pattern pattern;
  double value = 1.0;
};

/// Largest exact pattern size for the embedding search.
constexpr std::size_t kMaxExactPattern = 5;

/// psi_H: maximum number of vertex-disjoint copies of H (not necessarily
/// induced). K2 goes through maximum matching; other patterns through
/// embedding enumeration plus set-packing search.
SolveResult h_packing_number(const GeometricGraph& g, const Pattern& h, Mode mode = Mode::exact, const SolverLimits& lim = {});

/// Maximum total value of a packing mixing several patterns.
SolveResult multi_pattern_packing(const GeometricGraph& g, std::span<const WeightedPattern> patterns, Mode mode = Mode::exact,
                                  const SolverLimits& lim = {});

/// max_i value_i / h_i.
double packing_c3(std::span<const WeightedPattern> patterns);

/// Every vertex subset of size h whose induced subgraph contains a copy of H.
std::vector<std::vector<std::size_t>> pattern_embeddings(const GeometricGraph& g, const Pattern& h);

}  // namespace rgg
