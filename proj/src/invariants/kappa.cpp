#include "rgg/invariants/kappa.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "rgg/coverage.hpp"
#include "rgg/errors.hpp"

namespace rgg {

namespace {

constexpr double kRingRadius = 1.7;
constexpr int kRingCount = 7;

std::size_t cube_cells_per_axis(int dim) {
  return static_cast<std::size_t>(std::floor(2.0 * std::sqrt(static_cast<double>(dim)))) + 1;
}

}  // namespace

PointSet kappa_construction(int dim) {
  if (dim <= 0) throw ValidationError("kappa_construction: dimension must be positive");
  if (dim == 1) return PointSet(1, {{-1.0}, {1.0}});
  if (dim == 2) {
    PointSet ps(2);
    ps.push_back(std::vector<double>{0.0, 0.0});
    for (int k = 0; k < kRingCount; ++k) {
      const double a = 2.0 * std::numbers::pi * k / kRingCount;
      ps.push_back(std::vector<double>{kRingRadius * std::cos(a), kRingRadius * std::sin(a)});
    }
    return ps;
  }
  const std::size_t m = cube_cells_per_axis(dim);
  const double side = 4.0 / static_cast<double>(m);
  std::size_t total = 1;
  for (int k = 0; k < dim; ++k) total *= m;
  if (total > 50'000'000) throw UnsupportedDimension("kappa_construction: cube covering too large to list");
  PointSet ps(dim);
  ps.reserve(total);
  std::vector<double> p(static_cast<std::size_t>(dim));
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    for (int k = dim - 1; k >= 0; --k) {
      p[k] = -2.0 + (static_cast<double>(rem % m) + 0.5) * side;
      rem /= m;
    }
    ps.push_back(p);
  }
  return ps;
}

std::size_t kappa_ball_constant(int dim) {
  if (dim <= 0) throw ValidationError("kappa_ball_constant: dimension must be positive");
  if (dim >= 4) {
    std::size_t total = 1;
    for (int k = 0; k < dim; ++k) total *= cube_cells_per_axis(dim);
    return total;
  }
  static std::mutex mu;
  static std::map<int, std::size_t> verified;
  std::lock_guard lock(mu);
  if (auto it = verified.find(dim); it != verified.end()) return it->second;
  const PointSet centers = kappa_construction(dim);
  const CoverageCheck check = verify_ball_coverage(centers, 1.0, 2.0, 1e-6);
  if (!check.covered) throw std::logic_error("kappa_ball_constant: covering construction failed verification");
  verified[dim] = centers.size();
  return centers.size();
}

}  // namespace rgg
