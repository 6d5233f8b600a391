#include "rgg/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rgg/cell_grid.hpp"
#include "rgg/errors.hpp"

namespace rgg {

namespace {

constexpr std::size_t kCellBudget = 200'000'000;

/// Exact 1-d check: sorted union of [c - radius, c + radius] contains [lo, hi].
CoverageCheck interval_coverage(const PointSet& centers, double radius, double lo, double hi) {
  CoverageCheck out;
  std::vector<double> c(centers.coords().begin(), centers.coords().end());
  std::sort(c.begin(), c.end());
  double reach = lo;  // [lo, reach] is covered once the first interval starts
  bool started = false;
  for (double x : c) {
    ++out.cells;
    if (x - radius > reach) {
      const double gap_end = std::min(x - radius, hi);
      out.uncovered_point = true;
      out.witness = {started ? (reach + gap_end) / 2.0 : lo};
      return out;
    }
    reach = std::max(reach, x + radius);
    started = started || x + radius >= lo;
    if (started && reach >= hi) {
      out.covered = true;
      return out;
    }
  }
  out.uncovered_point = true;
  out.witness = {started ? (reach + hi) / 2.0 : lo};
  return out;
}

struct Cell {
  std::vector<double> center;
  std::vector<double> half;  // half side per axis
};

template <class Intersects, class Contains>
CoverageCheck bisect(const PointSet& centers, double radius, Cell root, double min_cell, Intersects&& intersects,
                     Contains&& contains) {
  const int d = centers.dim();
  if (d > 3) throw UnsupportedDimension("coverage check supports d <= 3");
  CoverageCheck out;
  CellGrid grid(centers, radius);
  std::vector<Cell> stack{std::move(root)};
  while (!stack.empty()) {
    Cell c = std::move(stack.back());
    stack.pop_back();
    if (++out.cells > kCellBudget) throw BudgetExceeded("coverage check: cell budget exceeded");
    double hd2 = 0.0;
    for (double h : c.half) hd2 += h * h;
    const double hd = std::sqrt(hd2);
    if (!intersects(c.center, hd)) continue;
    const double near2 = grid.nearest_sqdist_within(c.center, radius);
    const double near = std::sqrt(near2);
    if (near + hd <= radius) continue;
    const bool inside = contains(c.center);
    if (inside && !(near <= radius)) {
      out.uncovered_point = true;
      out.witness = c.center;
      return out;
    }
    if (2.0 * *std::max_element(c.half.begin(), c.half.end()) < min_cell) {
      out.witness = c.center;
      return out;
    }
    // split into 2^d children
    for (int mask = 0; mask < (1 << d); ++mask) {
      Cell child;
      child.center = c.center;
      child.half = c.half;
      for (int k = 0; k < d; ++k) {
        child.half[k] = c.half[k] / 2.0;
        child.center[k] += (mask >> k & 1) ? child.half[k] : -child.half[k];
      }
      stack.push_back(std::move(child));
    }
  }
  out.covered = true;
  return out;
}

}  // namespace

CoverageCheck verify_box_coverage(const PointSet& centers, double radius, std::span<const double> lo,
                                  std::span<const double> hi, double min_cell) {
  const int d = static_cast<int>(lo.size());
  if (hi.size() != lo.size()) throw ValidationError("verify_box_coverage: bound dimension mismatch");
  if (centers.empty()) {
    CoverageCheck out;
    out.uncovered_point = true;
    out.witness.assign(lo.begin(), lo.end());
    return out;
  }
  if (centers.dim() != d) throw ValidationError("verify_box_coverage: centre dimension mismatch");
  if (d == 1) return interval_coverage(centers, radius, lo[0], hi[0]);
  Cell root;
  for (int k = 0; k < d; ++k) {
    root.center.push_back((lo[k] + hi[k]) / 2.0);
    root.half.push_back((hi[k] - lo[k]) / 2.0);
  }
  return bisect(
      centers, radius, std::move(root), min_cell, [](const std::vector<double>&, double) { return true; },
      [](const std::vector<double>&) { return true; });
}

CoverageCheck verify_ball_coverage(const PointSet& centers, double radius, double region_radius, double min_cell) {
  const int d = centers.dim();
  if (centers.empty()) {
    CoverageCheck out;
    out.uncovered_point = true;
    out.witness.assign(static_cast<std::size_t>(std::max(d, 1)), 0.0);
    return out;
  }
  if (d == 1) return interval_coverage(centers, radius, -region_radius, region_radius);
  Cell root;
  root.center.assign(static_cast<std::size_t>(d), 0.0);
  root.half.assign(static_cast<std::size_t>(d), region_radius);
  auto norm = [](const std::vector<double>& x) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return std::sqrt(s);
  };
  return bisect(
      centers, radius, std::move(root), min_cell,
      [&](const std::vector<double>& x, double hd) { return norm(x) - hd <= region_radius; },
      [&](const std::vector<double>& x) { return norm(x) <= region_radius; });
}

}  // namespace rgg
