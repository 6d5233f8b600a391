#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rgg/geograph.hpp"
#include "rgg/invariants/solve_result.hpp"

namespace rgg {

using GraphSolver = std::function<SolveResult(const GeometricGraph&, Mode, const SolverLimits&)>;

/// A registered graph functional zeta together with its structural constants.
///
/// Atomic entries carry their own c1, c2, zeta({o}), K and property flags.
/// Decomposed entries (vc, psi:H, eta) have the form
///   zeta = c3 |X| - zeta' + zeta''
/// and name their pieces; the structural constants of a decomposed entry are
/// those of zeta', and property checks apply to the pieces.
struct FunctionalDescriptor {
  std::string name;
  int dim = 0;
  GraphSolver solve;
  double c1 = 0.0;
  double c2 = 0.0;
  double zeta_singleton = 0.0;
  double K = 0.0;
  std::optional<double> c3;
  std::string prime;   // zeta'
  std::string second;  // zeta'' (empty when zero)
  /// sup of zeta over finite subsets of B_{1/2}(o).
  double p5_bound = 0.0;
  bool p6 = false;
  bool p7 = false;
  bool p8 = true;

  bool decomposed() const { return c3.has_value(); }
  /// Exact value at scale r = 1. Throws BudgetExceeded when the solver
  /// cannot certify the value.
  double evaluate(const PointSet& x, const SolverLimits& lim = {}) const;
  double evaluate(const GeometricGraph& g, const SolverLimits& lim = {}) const;
};

/// max(c1 + zeta({o}), c2 - zeta({o})).
double smoothness_constant(double c1, double c2, double zeta_singleton);

/// All graph functionals for dimension d, atomic entries first.
const std::vector<FunctionalDescriptor>& registry(int dim);
const FunctionalDescriptor& find_functional(const std::string& name, int dim);

}  // namespace rgg
