#pragma once

#include <optional>
#include <span>
#include <vector>

#include "rgg/rng.hpp"

namespace rgg {

/// Piecewise-constant density on the half-open cube Q_side = [-side/2, side/2)^d,
/// split into cubic cells of edge 1/cells_per_unit. Values are f_mu per cell in
/// row-major order (axis 0 slowest).
struct BlockedDensity {
  double side = 1.0;
  int cells_per_unit = 1;
  std::vector<double> values;
};

/// Uniform measure on the segment [a, b] carrying the given total mass.
struct Segment {
  std::vector<double> a;
  std::vector<double> b;
  double mass = 0.0;
};

/// Diffuse probability measure: blocked absolutely continuous part plus an
/// optional singular part made of segment measures.
class Distribution {
 public:
  static Distribution uniform(int dim);
  static Distribution blocked(int dim, BlockedDensity density);
  /// Pure singular measure: all mass uniform on [a, b].
  static Distribution on_segment(std::vector<double> a, std::vector<double> b);
  /// Mixture: ac part (may be null) plus singular segments.
  static Distribution mixture(int dim, std::optional<BlockedDensity> ac, std::vector<Segment> singular);

  int dim() const { return dim_; }
  bool is_uniform() const { return uniform_; }
  const std::optional<BlockedDensity>& ac_part() const { return ac_; }
  const std::vector<Segment>& singular_part() const { return singular_; }

  double ac_mass() const;
  double singular_mass() const;
  double total_mass() const { return ac_mass() + singular_mass(); }

  /// Throws ValidationError when mass deviates from 1 by more than 1e-12,
  /// or any density value / segment mass is negative.
  void validate() const;

  /// f_mu(x) for the absolutely continuous part.
  double density_at(std::span<const double> x) const;
  /// mu-mass of the axis-aligned box [lo, hi).
  double box_mass(std::span<const double> lo, std::span<const double> hi) const;
  /// Lebesgue measure of {f_mu > 0}.
  double support_volume() const;

  void sample(CounterRng& rng, std::span<double> out) const;

 private:
  int grid_per_axis() const;

  int dim_ = 0;
  bool uniform_ = false;
  std::optional<BlockedDensity> ac_;
  std::vector<Segment> singular_;
  std::vector<double> cell_cdf_;
  std::vector<double> segment_cdf_;
};

}  // namespace rgg
