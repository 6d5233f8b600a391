#include "rgg/invariants/interval.hpp"

#include <algorithm>
#include <numeric>

namespace rgg {

std::optional<IntervalOrder> umbrella_order(const GeometricGraph& g, std::span<const std::size_t> vertices) {
  const PointSet& ps = g.points();
  const std::size_t m = vertices.size();
  const int d = ps.dim();
  IntervalOrder io;
  if (m == 0) return io;

  // spread direction: from the first vertex to the farthest one, then from
  // that one to its farthest (two sweeps approximate the diameter)
  auto farthest = [&](std::size_t from) {
    std::size_t best = from;
    double bd = -1.0;
    for (std::size_t v : vertices) {
      const double s = ps.squared_distance(from, v);
      if (s > bd) bd = s, best = v;
    }
    return best;
  };
  const std::size_t a = farthest(vertices[0]);
  const std::size_t b = farthest(a);
  std::vector<double> dir(static_cast<std::size_t>(d), 0.0);
  for (int k = 0; k < d; ++k) dir[k] = ps.coord(b, k) - ps.coord(a, k);
  if (d == 1) dir[0] = 1.0;

  std::vector<double> proj(m);
  for (std::size_t i = 0; i < m; ++i) {
    double s = 0.0;
    for (int k = 0; k < d; ++k) s += (ps.coord(vertices[i], k) - ps.coord(a, k)) * dir[k];
    proj[i] = s;
  }
  std::vector<std::size_t> idx(m);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    if (proj[x] != proj[y]) return proj[x] < proj[y];
    return vertices[x] < vertices[y];
  });
  io.order.resize(m);
  for (std::size_t p = 0; p < m; ++p) io.order[p] = vertices[idx[p]];

  std::vector<std::size_t> pos_of(g.size(), m);
  for (std::size_t p = 0; p < m; ++p) pos_of[io.order[p]] = p;
  io.lo.resize(m);
  io.hi.resize(m);
  for (std::size_t p = 0; p < m; ++p) {
    std::size_t lo = p, hi = p, cnt = 1;
    for (std::uint32_t u : g.neighbors(io.order[p])) {
      const std::size_t q = pos_of[u];
      if (q == m) return std::nullopt;  // neighbour outside the set
      lo = std::min(lo, q);
      hi = std::max(hi, q);
      ++cnt;
    }
    if (hi - lo + 1 != cnt) return std::nullopt;
    if (p > 0 && (lo < io.lo[p - 1] || hi < io.hi[p - 1])) return std::nullopt;
    io.lo[p] = lo;
    io.hi[p] = hi;
  }
  return io;
}

std::vector<std::size_t> interval_max_independent(const IntervalOrder& io) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < io.order.size(); p = io.hi[p] + 1) out.push_back(io.order[p]);
  return out;
}

std::vector<std::vector<std::size_t>> interval_min_clique_partition(const IntervalOrder& io) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t p = 0; p < io.order.size(); p = io.hi[p] + 1) {
    out.emplace_back(io.order.begin() + static_cast<std::ptrdiff_t>(p), io.order.begin() + static_cast<std::ptrdiff_t>(io.hi[p]) + 1);
  }
  return out;
}

std::vector<std::size_t> interval_min_dominating(const IntervalOrder& io) {
  // leftmost undominated vertex p is best served by position hi[p], whose
  // reach hi[hi[p]] is the largest among N[p]
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < io.order.size();) {
    const std::size_t c = io.hi[p];
    out.push_back(io.order[c]);
    p = io.hi[c] + 1;
  }
  return out;
}

}  // namespace rgg
