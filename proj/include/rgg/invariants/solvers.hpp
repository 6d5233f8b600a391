#pragma once

#include <span>
#include <string>
#include <vector>

#include "rgg/geograph.hpp"
#include "rgg/invariants/graph_view.hpp"
#include "rgg/invariants/solve_result.hpp"

namespace rgg {

/// Components above this size are never materialized as dense bitset graphs.
constexpr std::size_t kDenseComponentCap = 4096;

// Exact and heuristic graph parameters of G(X, r). Exact modes throw
// BudgetExceeded when the node cap is hit; heuristic modes return a
// certified bound (value is a witness size) and exact = false.

SolveResult independence_number(const GeometricGraph& g, Mode mode = Mode::exact, const SolverLimits& lim = {});
SolveResult domination_number(const GeometricGraph& g, Mode mode = Mode::exact, const SolverLimits& lim = {});
SolveResult clique_cover_number(const GeometricGraph& g, Mode mode = Mode::exact, const SolverLimits& lim = {});
/// Single-guard-move eternal domination. Components larger than
/// lim.eternal_cap give a bounds-only result (alpha, theta).
SolveResult eternal_domination_number(const GeometricGraph& g, const SolverLimits& lim = {});
/// Same game with several guards allowed per vertex.
SolveResult eternal_domination_multiguard(const GeometricGraph& g, const SolverLimits& lim = {});
SolveResult vertex_cover_number(const GeometricGraph& g, Mode mode = Mode::exact, const SolverLimits& lim = {});
/// Maximum matching (psi for H = K2), exact at any size.
SolveResult matching_number(const GeometricGraph& g);
/// Edge cover number of G minus its isolated vertices.
SolveResult edge_cover_number(const GeometricGraph& g);

// Component-level building blocks (local ids of a DenseGraph).
std::vector<std::size_t> dense_max_independent(const DenseGraph& dg, std::uint64_t node_cap, std::uint64_t& nodes);
std::vector<std::vector<std::size_t>> dense_min_clique_partition(const DenseGraph& dg, std::size_t lower_bound,
                                                                 std::uint64_t node_cap, std::uint64_t& nodes);
std::vector<std::size_t> dense_min_dominating(const DenseGraph& dg, std::uint64_t node_cap, std::uint64_t& nodes);

// Sparse heuristics over the whole graph.
std::vector<std::size_t> greedy_independent_set(const GeometricGraph& g);
std::vector<std::vector<std::size_t>> greedy_clique_partition(const GeometricGraph& g);
std::vector<std::size_t> greedy_dominating_set(const GeometricGraph& g);

// Independent checkers for certificates.
bool is_independent(const GeometricGraph& g, std::span<const std::size_t> s);
bool is_dominating(const GeometricGraph& g, std::span<const std::size_t> s);
bool is_clique_partition(const GeometricGraph& g, const std::vector<std::vector<std::size_t>>& parts);
bool is_matching(const GeometricGraph& g, std::span<const std::pair<std::size_t, std::size_t>> m);
/// Covers every non-isolated vertex using graph edges.
bool is_edge_cover(const GeometricGraph& g, std::span<const std::pair<std::size_t, std::size_t>> e);

}  // namespace rgg
