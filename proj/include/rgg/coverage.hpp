#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "rgg/point_set.hpp"

namespace rgg {

/// Outcome of a covering certificate check. When `covered` is false,
/// `witness` is either a point of the region that no ball contains
/// (`uncovered_point` true) or the centre of a cell the check could not
/// certify at the finest resolution.
struct CoverageCheck {
  bool covered = false;
  bool uncovered_point = false;
  std::vector<double> witness;
  std::size_t cells = 0;
};

// Does the union of closed balls B(c, radius) cover the region? A cell is
// certified when one ball contains it entirely, i.e. the distance from the
// cell centre to the nearest centre plus the cell half-diagonal is at most
// radius. Cells are bisected until certified or below `min_cell`. The check
// is sound: it never accepts a region with an uncovered point. In d = 1 the
// union of intervals is compared exactly.

CoverageCheck verify_box_coverage(const PointSet& centers, double radius, std::span<const double> lo,
                                  std::span<const double> hi, double min_cell = 1e-7);
/// Region: closed ball of radius `region_radius` about the origin.
CoverageCheck verify_ball_coverage(const PointSet& centers, double radius, double region_radius,
                                   double min_cell = 1e-7);

}  // namespace rgg
