#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rgg/point_set.hpp"

namespace rgg {

/// Uniform bucket grid over the bounding box of a point set. Cell side is at
/// least `min_side`, enlarged when needed so the cell count stays O(n).
/// Coordinates are kept sorted by cell in structure-of-arrays form so that
/// each cell is a contiguous run for the vector kernels.
class CellGrid {
 public:
  CellGrid() = default;
  CellGrid(const PointSet& ps, double min_side);

  std::size_t size() const { return perm_.size(); }
  double cell_side() const { return side_; }

  /// Original indices of points with |p - q| <= r, unordered.
  void within(std::span<const double> q, double r, std::vector<std::uint32_t>& out) const;
  std::size_t count_within(std::span<const double> q, double r) const;
  /// Squared distance from q to the nearest point within r; +inf if none.
  double nearest_sqdist_within(std::span<const double> q, double r) const;

 private:
  template <class Fn>
  void for_cells_near(std::span<const double> q, double r, Fn&& fn) const;

  int dim_ = 0;
  double side_ = 1.0;
  std::vector<double> lo_;
  std::vector<std::int64_t> extent_;   // cells per axis
  std::vector<std::size_t> start_;     // CSR offsets, one per cell + 1
  std::vector<std::uint32_t> perm_;    // sorted position -> original index
  std::vector<std::vector<double>> axes_;  // sorted SoA coordinates
};

}  // namespace rgg
