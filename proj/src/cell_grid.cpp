#include "rgg/cell_grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rgg/errors.hpp"
#include "rgg/simd/kernels.hpp"

namespace rgg {

CellGrid::CellGrid(const PointSet& ps, double min_side) : dim_(ps.dim()) {
  if (!(min_side > 0.0) || !std::isfinite(min_side)) throw ValidationError("CellGrid: cell side must be positive and finite");
  const std::size_t n = ps.size();
  const auto d = static_cast<std::size_t>(dim_);
  lo_.assign(d, 0.0);
  std::vector<double> hi(d, 0.0);
  for (std::size_t k = 0; k < d; ++k) {
    lo_[k] = std::numeric_limits<double>::infinity();
    hi[k] = -std::numeric_limits<double>::infinity();
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      lo_[k] = std::min(lo_[k], ps.coord(i, static_cast<int>(k)));
      hi[k] = std::max(hi[k], ps.coord(i, static_cast<int>(k)));
    }
  }
  if (n == 0) std::fill(hi.begin(), hi.end(), 0.0), std::fill(lo_.begin(), lo_.end(), 0.0);

  side_ = min_side;
  const double cap = std::max(64.0, 4.0 * static_cast<double>(n));
  for (;;) {
    double cells = 1.0;
    for (std::size_t k = 0; k < d; ++k) cells *= std::floor((hi[k] - lo_[k]) / side_) + 1.0;
    if (cells <= cap) break;
    side_ *= std::max(1.01, std::pow(cells / cap, 1.0 / dim_));
  }
  extent_.resize(d);
  std::size_t total = 1;
  for (std::size_t k = 0; k < d; ++k) {
    extent_[k] = static_cast<std::int64_t>(std::floor((hi[k] - lo_[k]) / side_)) + 1;
    total *= static_cast<std::size_t>(extent_[k]);
  }

  std::vector<std::size_t> cell_of(n);
  start_.assign(total + 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t flat = 0;
    for (std::size_t k = 0; k < d; ++k) {
      auto c = static_cast<std::int64_t>(std::floor((ps.coord(i, static_cast<int>(k)) - lo_[k]) / side_));
      c = std::clamp<std::int64_t>(c, 0, extent_[k] - 1);
      flat = flat * static_cast<std::size_t>(extent_[k]) + static_cast<std::size_t>(c);
    }
    cell_of[i] = flat;
    ++start_[flat + 1];
  }
  for (std::size_t c = 0; c < total; ++c) start_[c + 1] += start_[c];
  perm_.resize(n);
  std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
  for (std::size_t i = 0; i < n; ++i) perm_[fill[cell_of[i]]++] = static_cast<std::uint32_t>(i);
  axes_.assign(d, std::vector<double>(n));
  for (std::size_t pos = 0; pos < n; ++pos) {
    for (std::size_t k = 0; k < d; ++k) axes_[k][pos] = ps.coord(perm_[pos], static_cast<int>(k));
  }
}

template <class Fn>
void CellGrid::for_cells_near(std::span<const double> q, double r, Fn&& fn) const {
  if (perm_.empty()) return;
  const auto d = static_cast<std::size_t>(dim_);
  std::vector<std::int64_t> lo(d), hi(d), cur(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double a = std::floor((q[k] - r - lo_[k]) / side_);
    const double b = std::floor((q[k] + r - lo_[k]) / side_);
    if (b < 0.0 || a > static_cast<double>(extent_[k] - 1)) return;
    lo[k] = std::max<std::int64_t>(0, static_cast<std::int64_t>(a));
    hi[k] = std::min<std::int64_t>(extent_[k] - 1, static_cast<std::int64_t>(b));
    cur[k] = lo[k];
  }
  // odometer over the box of cells; runs along the last axis are contiguous
  for (;;) {
    std::size_t flat = 0;
    for (std::size_t k = 0; k + 1 < d; ++k) flat = (flat + static_cast<std::size_t>(cur[k])) * static_cast<std::size_t>(extent_[k + 1]);
    const std::size_t first = flat + static_cast<std::size_t>(lo[d - 1]);
    const std::size_t last = flat + static_cast<std::size_t>(hi[d - 1]);
    const std::size_t b = start_[first], e = start_[last + 1];
    if (e > b) fn(b, e);
    std::size_t k = d - 1;
    for (;;) {
      if (k == 0) return;
      --k;
      if (++cur[k] <= hi[k]) break;
      cur[k] = lo[k];
    }
  }
}

namespace {

inline double row_sqdist(const std::vector<std::vector<double>>& axes, std::size_t pos, std::span<const double> q) {
  double s = 0.0;
  for (std::size_t k = 0; k < axes.size(); ++k) {
    const double t = axes[k][pos] - q[k];
    s += t * t;
  }
  return s;
}

}  // namespace

void CellGrid::within(std::span<const double> q, double r, std::vector<std::uint32_t>& out) const {
  out.clear();
  const double r2 = r * r;
  if (dim_ <= simd::kMaxSoaDim) {
    const auto& kt = simd::active();
    std::vector<std::uint32_t> buf;
    for_cells_near(q, r, [&](std::size_t b, std::size_t e) {
      simd::SoaView v;
      v.dim = dim_;
      v.count = e - b;
      for (int k = 0; k < dim_; ++k) v.axes[k] = axes_[static_cast<std::size_t>(k)].data() + b;
      buf.resize(v.count);
      const std::size_t m = kt.collect_within(v, q.data(), r2, 0, buf.data());
      for (std::size_t t = 0; t < m; ++t) out.push_back(perm_[b + buf[t]]);
    });
    return;
  }
  for_cells_near(q, r, [&](std::size_t b, std::size_t e) {
    for (std::size_t pos = b; pos < e; ++pos) {
      if (row_sqdist(axes_, pos, q) <= r2) out.push_back(perm_[pos]);
    }
  });
}

std::size_t CellGrid::count_within(std::span<const double> q, double r) const {
  const double r2 = r * r;
  std::size_t m = 0;
  if (dim_ <= simd::kMaxSoaDim) {
    const auto& kt = simd::active();
    for_cells_near(q, r, [&](std::size_t b, std::size_t e) {
      simd::SoaView v;
      v.dim = dim_;
      v.count = e - b;
      for (int k = 0; k < dim_; ++k) v.axes[k] = axes_[static_cast<std::size_t>(k)].data() + b;
      m += kt.count_within(v, q.data(), r2);
    });
    return m;
  }
  for_cells_near(q, r, [&](std::size_t b, std::size_t e) {
    for (std::size_t pos = b; pos < e; ++pos) m += row_sqdist(axes_, pos, q) <= r2;
  });
  return m;
}

double CellGrid::nearest_sqdist_within(std::span<const double> q, double r) const {
  double best = std::numeric_limits<double>::infinity();
  if (dim_ <= simd::kMaxSoaDim) {
    const auto& kt = simd::active();
    for_cells_near(q, r, [&](std::size_t b, std::size_t e) {
      simd::SoaView v;
      v.dim = dim_;
      v.count = e - b;
      for (int k = 0; k < dim_; ++k) v.axes[k] = axes_[static_cast<std::size_t>(k)].data() + b;
      best = std::min(best, kt.min_sqdist(v, q.data()));
    });
  } else {
    for_cells_near(q, r, [&](std::size_t b, std::size_t e) {
      for (std::size_t pos = b; pos < e; ++pos) best = std::min(best, row_sqdist(axes_, pos, q));
    });
  }
  return best <= r * r ? best : std::numeric_limits<double>::infinity();
}

}  // namespace rgg
