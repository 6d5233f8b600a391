#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rgg/distribution.hpp"
#include "rgg/estimators/report.hpp"
#include "rgg/euclid/weight.hpp"
#include "rgg/invariants/registry.hpp"
#include "rgg/point_set.hpp"

namespace rgg::est {

/// zeta_r(X) for either a graph functional or a weighted one.
struct TargetValue {
  double value = 0.0;
  bool exact = true;
};

struct EstimatorOptions {
  unsigned workers = 0;
  /// exact: try the exact solver, fall back to the heuristic on budget
  /// exhaustion and count the replication as heuristic.
  /// heuristic: skip the exact attempt.
  Mode mode = Mode::exact;
  SolverLimits limits{};
  bool keep_values = true;
  /// Guard on the expected number of points per replication.
  double expected_cap = 2e6;
};

class EstimatorTarget {
 public:
  using Eval = std::function<TargetValue(const PointSet&, double r, Mode, const SolverLimits&)>;

  EstimatorTarget(std::string name, int dim, Eval eval, std::string weight = {})
      : name_(std::move(name)), weight_(std::move(weight)), dim_(dim), eval_(std::move(eval)) {}

  static EstimatorTarget graph(const FunctionalDescriptor& f);
  /// name in {tsp, mm, mst}.
  static EstimatorTarget weighted(const std::string& name, const euclid::WeightFunction& w, int dim);

  const std::string& name() const { return name_; }
  const std::string& weight() const { return weight_; }
  int dim() const { return dim_; }
  TargetValue operator()(const PointSet& ps, double r, Mode mode, const SolverLimits& lim) const {
    return eval_(ps, r, mode, lim);
  }

 private:
  std::string name_;
  std::string weight_;
  int dim_;
  Eval eval_;
};

/// Mean of zeta(H_{lambda,s}) / (lambda s^d) over independent boxes.
EstimatorReport estimate_rho_box(const EstimatorTarget& f, double lambda, double s, std::size_t reps,
                                 std::uint64_t seed, const EstimatorOptions& opt = {});

/// Cluster C_o of the origin in G(H_lambda + {o}, 1), grown by window
/// doubling, averaged as zeta(C_o) / |C_o|. Requires c1 = 0. Throws
/// BudgetExceeded when a cluster exceeds cluster_cap points.
EstimatorReport estimate_rho_cluster(const FunctionalDescriptor& f, double lambda, std::size_t reps,
                                     std::uint64_t seed, std::size_t cluster_cap = 100000,
                                     const EstimatorOptions& opt = {});

/// The cluster of the origin for one replication; exposed for testing.
PointSet origin_cluster(double lambda, int dim, CounterRng rng, std::size_t cluster_cap, double initial_side = 4.0);

/// n^{-1} zeta_{r_n}(X_n) with r_n = (t/n)^{1/d}, one report per n.
std::vector<EstimatorReport> lln_thermo_run(const EstimatorTarget& f, const Distribution& mu, double t,
                                            const std::vector<std::size_t>& n_grid, std::size_t reps,
                                            std::uint64_t seed, const EstimatorOptions& opt = {});

using RadiusRule = std::function<double(std::size_t n, int dim)>;
/// n^{-1/(2d)}.
double default_dense_radius(std::size_t n, int dim);

/// r_n^d zeta_{r_n}(X_n), one report per n.
std::vector<EstimatorReport> lln_dense_run(const EstimatorTarget& f, const Distribution& mu, const RadiusRule& rule,
                                           const std::vector<std::size_t>& n_grid, std::size_t reps,
                                           std::uint64_t seed, const EstimatorOptions& opt = {});

struct SweepRow {
  EstimatorReport report;
  double lambda_rho = 0.0;
  double lambda_rho_stderr = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<std::string> violations;
  /// Reference used for the density bound, when one is known.
  std::optional<double> zeta_bar;
};

/// Box estimates over a lambda grid (sorted ascending) with the structural
/// checks of rho: lambda rho <= zeta_bar, lambda rho nondecreasing under P6,
/// rho nonincreasing under P7, rho <= c1 + zeta({o}), and rho near zeta({o})
/// at small lambda when c1 = 0. All comparisons allow 3 standard errors.
SweepResult rho_curve_sweep(const FunctionalDescriptor& f, std::vector<double> lambda_grid, double s,
                            std::size_t reps, std::uint64_t seed, const EstimatorOptions& opt = {});

}  // namespace rgg::est
