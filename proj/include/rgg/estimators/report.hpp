#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace rgg::est {

/// Summary of one Monte Carlo experiment. Everything except elapsed_ms is a
/// pure function of (seed, parameters), whatever the worker count.
struct EstimatorReport {
  std::string mode;        // box, cluster, thermo, dense
  std::string functional;
  std::string weight;      // weighted functionals only
  int dim = 0;
  double lambda = 0.0;
  double s = 0.0;
  std::size_t n = 0;
  double t = 0.0;
  double r = 0.0;
  std::size_t reps = 0;
  double mean = 0.0;
  double stderr_ = 0.0;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;
  /// Replications whose value came from a heuristic solver after the exact
  /// one ran out of budget.
  std::size_t heuristic_reps = 0;
  /// Replications abandoned entirely; the statistics cover the rest.
  std::size_t failed_reps = 0;
  std::vector<double> values;

  bool partial() const { return heuristic_reps > 0 || failed_reps > 0; }
};

struct MeanStderr {
  double mean = 0.0;
  double stderr_ = 0.0;
};

/// Sample mean and sd/sqrt(n), summed in index order (Neumaier).
MeanStderr summarize(const std::vector<double>& values);

/// Calls fn(i) for i in [0, n) on `workers` threads (0 = hardware
/// concurrency). The exception thrown by the lowest failing index is
/// rethrown after all workers stop.
void parallel_for(std::size_t n, unsigned workers, const std::function<void(std::size_t)>& fn);

}  // namespace rgg::est
