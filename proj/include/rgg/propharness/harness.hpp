#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rgg/invariants/registry.hpp"
#include "rgg/point_set.hpp"

namespace rgg::prop {

/// P2 P3 P4 P5' P6 P7 P8 SMOOTH act on a functional; the rest are
/// cross-functional identities and ignore it.
const std::vector<std::string>& property_ids();
const std::vector<std::string>& functional_properties();
bool is_functional_property(const std::string& id);

enum class Split { hyperplane, random, slabs };

struct PropertyCase {
  std::string property;
  int dim = 2;
  std::size_t n_min = 2;
  std::size_t n_max = 20;
  /// Mean number of points per unit volume; drawn log-uniformly per trial.
  /// The default range puts the unit radius near the typical
  /// nearest-neighbour distance.
  double intensity_lo = 0.3;
  double intensity_hi = 3.0;
  Split split = Split::hyperplane;
  std::size_t parts = 3;  // k for the k-part forms
  std::size_t trials = 1000;
  std::uint64_t seed = 1;
  unsigned workers = 0;
};

struct Failure {
  std::uint64_t seed = 0;
  std::size_t index = 0;
  std::string detail;
  std::string instance;  // point CSV
};

struct PropertyReport {
  std::string property;
  std::string functional;
  int dim = 0;
  std::size_t trials = 0;
  std::size_t passed = 0;
  std::size_t violations = 0;
  std::size_t skipped = 0;
  /// The functional is not flagged for this property; nothing ran.
  bool not_applicable = false;
  /// Functionals actually exercised (pieces of a decomposed entry).
  std::vector<std::string> checked;
  std::vector<Failure> failures;  // first few, in trial order
  double elapsed_ms = 0.0;

  bool ok() const { return violations == 0; }
};

enum class Outcome { pass, fail, skip };

struct TrialResult {
  Outcome outcome = Outcome::pass;
  std::string detail;
  PointSet instance;
};

/// Failures retained per report.
constexpr std::size_t kKeptFailures = 10;

/// Runs case.trials randomized checks. Functional properties other than P2
/// and P8 run on the pieces of a decomposed entry.
PropertyReport run_property(const PropertyCase& c, const FunctionalDescriptor& f);

/// Re-runs one trial; identical to what run_property saw at that index.
TrialResult replay(const PropertyCase& c, const FunctionalDescriptor& f, std::size_t index);

/// Instance generator shared by all properties (deterministic in seed, index).
PointSet generate_instance(const PropertyCase& c, std::uint64_t seed, std::size_t index);

struct SuiteOptions {
  std::size_t trials = 200;
  std::vector<int> dims{1, 2};
  unsigned workers = 0;
  std::string only_property;
  std::string only_functional;
};

struct SuiteReport {
  std::vector<PropertyReport> reports;
  bool ok() const;
  std::size_t violations() const;
};

/// Default case matrix over the given functionals: every functional
/// property for atomic entries, P2 and P8 for decomposed ones (their
/// pieces are registered atomically), then each identity once per
/// dimension.
SuiteReport run_all(std::uint64_t seed, const SuiteOptions& opt, const std::vector<FunctionalDescriptor>& functionals);
/// Same over the registry of each dimension.
SuiteReport run_all(std::uint64_t seed, const SuiteOptions& opt = {});

}  // namespace rgg::prop
