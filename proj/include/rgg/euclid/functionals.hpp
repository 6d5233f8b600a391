#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rgg/euclid/weight.hpp"
#include "rgg/invariants/solve_result.hpp"
#include "rgg/point_set.hpp"

namespace rgg::euclid {

// All functionals use edge weight w(r^{-1}(y - x)) on the complete graph.

struct TourResult {
  double weight = 0.0;
  std::vector<std::size_t> order;  // Hamilton cycle, closing edge implied
  bool exact = false;
};

struct MatchResult {
  double weight = 0.0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool exact = false;
};

struct TreeResult {
  double weight = 0.0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool exact = true;
};

constexpr std::size_t kTspExactCap = 18;
constexpr std::size_t kMatchingExactCap = 20;
constexpr std::size_t kAssignmentCap = 4000;

/// Hilbert-curve order over the bounding cube; d = 1 sorts by coordinate.
std::vector<std::size_t> hilbert_order(const PointSet& ps);

/// Cycle weight of an order; n = 2 counts the edge twice, n <= 1 is 0.
double tour_weight(const EdgeWeights& w, const std::vector<std::size_t>& order);
std::vector<std::size_t> nearest_neighbor_tour(const EdgeWeights& w);
/// First-improvement 2-opt until no move helps. Never increases the weight.
void two_opt(const EdgeWeights& w, std::vector<std::size_t>& order);

/// Exact (Held-Karp, n <= 18) or best of nearest-neighbour and Hilbert
/// tours, each improved by 2-opt.
TourResult tsp(const PointSet& ps, const WeightFunction& w, double scale, Mode mode);

/// Minimum near-perfect matching: exact subset DP (n <= 20) or greedy plus
/// pairwise exchange.
MatchResult min_matching(const PointSet& ps, const WeightFunction& w, double scale, Mode mode);

/// Minimum bipartite matching under w*. Balanced sides go through the
/// Hungarian method; unbalanced sides through min_matching on U + V with
/// same-type edges weighted w_max, which must be finite. Edge indices refer
/// to U followed by V.
MatchResult bipartite_matching(const PointSet& u, const PointSet& v, const WeightFunction& w, double scale,
                               Mode mode = Mode::exact);

/// TSP on U + V under w*.
TourResult bipartite_tsp(const PointSet& u, const PointSet& v, const WeightFunction& w, double scale, Mode mode);

/// Exact minimum spanning tree (Prim on the complete graph).
TreeResult mst(const PointSet& ps, const WeightFunction& w, double scale);

/// Dense assignment: min over permutations of sum cost[i][perm[i]].
std::vector<std::size_t> hungarian(const std::vector<double>& cost, std::size_t n);

/// k = k' + 2, where k' counts the cubes of side delta/d within unit
/// distance of a given cube in the partition of R^d. Bounds the number of
/// short edges at a vertex of a suitable minimum spanning tree under W7.
std::size_t mst_short_degree_bound(int dim, double delta);

/// Weighted functional with the additivity constants it satisfies when w
/// has W1, W2 and W5 with c5 = 1.
struct WeightedFunctional {
  std::string name;  // tsp, mm, mst
  double c1 = 0.0;
  double c2 = 0.0;
  double (*exact)(const PointSet&, const WeightFunction&, double) = nullptr;
};

/// Constants for w; throws ValidationError unless w is flagged W5 with
/// c5 = 1 (MST additionally needs W7 for c2).
std::vector<WeightedFunctional> weighted_functionals(const WeightFunction& w, int dim);

}  // namespace rgg::euclid
