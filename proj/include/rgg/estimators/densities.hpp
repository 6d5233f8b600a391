#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rgg/invariants/registry.hpp"
#include "rgg/point_set.hpp"

namespace rgg::est {

enum class ConstantKind { exact_reference, lower_bound, upper_bound };

struct DensityConstant {
  std::string name;  // alpha_bar, kappa_bar, theta_bar, zeta_bar
  int dim = 0;
  double value = 0.0;
  ConstantKind kind = ConstantKind::exact_reference;
};

const char* to_string(ConstantKind k);

/// Known values: alpha_bar for d <= 3 (1, sqrt(4/3), sqrt 2), kappa_bar for
/// d <= 2 (1/2, sqrt(4/27)), theta_bar = 1 for d = 1 and the hexagon upper
/// bound sqrt(64/27) for d = 2.
std::optional<DensityConstant> density_constant(const std::string& name, int dim);

/// Reference for zeta_bar of a registered functional, when one is known:
/// alpha_bar for functionals whose sup over Q_s is attained by packings,
/// theta_bar for theta, and theta_bar as an upper bound for gammainf.
std::optional<DensityConstant> zeta_bar_reference(const std::string& functional, int dim);

struct LatticeResult {
  PointSet points;
  double density = 0.0;
  bool verified = false;
};

constexpr double kPackingGuard = 1e-9;
constexpr double kCoveringGuard = 1e-6;

/// Integer (d = 1) or triangular (d = 2) lattice of the given spacing,
/// clipped to Q_s. `verified` says whether all pairwise distances exceed 1.
LatticeResult lattice_packing_density(int dim, double s, double spacing = 1.0 + kPackingGuard);

/// Every pairwise distance exceeds min_dist.
bool verify_separation(const PointSet& ps, double min_dist);

/// Covering lattice with circumradius 1 - kCoveringGuard (spacing 2 - 2g in
/// d = 1, triangular in d = 2), scaled by density_factor^{-1/d}. `points`
/// are the lattice centres within unit distance of Q_s; `verified` is the
/// coverage check of the closed cube by their unit balls. `density` counts
/// centres inside Q_s.
LatticeResult lattice_covering_density(int dim, double s, double density_factor = 1.0);

struct HexagonResult {
  double density = 0.0;  // hexagon centres in Q_s per unit area
  std::size_t cells_meeting = 0;
  double max_diameter = 0.0;
  bool verified = false;
};

/// Tiling of the plane by regular hexagons of diameter 1.
HexagonResult hexagon_partition_density(double s);

/// Lower bound on zeta*(Q_s) / s^d by search: a packing seed (lattice plus
/// random insertions) followed, when budget remains, by random insertions
/// that strictly increase zeta. `budget` counts candidate points.
double zeta_star_lower(const FunctionalDescriptor& f, double s, std::size_t budget, std::uint64_t seed = 1);

struct CoveringBounds {
  std::optional<double> lower;
  double upper = 0.0;
  std::size_t net_size = 0;
  std::size_t bad = 0;
  std::size_t empty_cells = 0;
  std::vector<std::size_t> dominating_set;
  bool dominating_verified = false;
  bool net_verified = false;
  bool degenerate = false;
  std::string notice;
};

/// Bounds on gamma(G(X, r)) for X in Q_1 from a covering net of Q_{1/r}
/// (scaled frame) with balls of radius 1 - delta whose centres are more
/// than 3 delta apart. Upper: k + K0 * bad, realised by an explicit
/// dominating set, K0 = kappa(B_2). Lower: r^{-d} (1 + d delta)^{-d}
/// kappa_bar - (empty cells of side about delta), d <= 2 only.
CoveringBounds domination_bounds_via_covering(const PointSet& ps, double r, double delta);

}  // namespace rgg::est
