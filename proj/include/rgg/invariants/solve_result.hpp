#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace rgg {

enum class Mode { exact, heuristic };

/// Budgets for the exact solvers. Exceeding one throws BudgetExceeded.
struct SolverLimits {
  std::uint64_t node_cap = 10'000'000;
  /// Largest connected component handed to the eternal-domination game search.
  std::size_t eternal_cap = 16;
};

struct SolveResult {
  double value = 0.0;
  bool exact = true;
  double lower = 0.0;
  double upper = 0.0;
  /// "vertex_set", "partition", "edge_set" or "guards"; empty when absent.
  std::string witness_kind;
  std::vector<std::size_t> vertices;
  std::vector<std::vector<std::size_t>> parts;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  double elapsed_ms = 0.0;
};

Mode parse_mode(const std::string& s);
const char* to_string(Mode m);

}  // namespace rgg
