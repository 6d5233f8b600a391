#include "rgg/geograph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>

#include "rgg/cell_grid.hpp"
#include "rgg/errors.hpp"

namespace rgg {

GeometricGraph::GeometricGraph(PointSet points, double radius) : points_(std::move(points)), radius_(radius) {
  if (!(radius > 0.0) || !std::isfinite(radius)) throw ValidationError("build_graph: radius must be positive and finite");
  const std::size_t n = points_.size();
  offsets_.assign(n + 1, 0);
  if (n == 0) return;
  const CellGrid grid(points_, radius);
  std::vector<std::uint32_t> buf;
  std::vector<std::vector<std::uint32_t>> lists(n);
  for (std::size_t i = 0; i < n; ++i) {
    grid.within(points_[i], radius, buf);
    auto& l = lists[i];
    for (std::uint32_t j : buf) {
      if (j != i) l.push_back(j);
    }
    std::sort(l.begin(), l.end());
    offsets_[i + 1] = offsets_[i] + l.size();
  }
  adj_.reserve(offsets_[n]);
  for (auto& l : lists) adj_.insert(adj_.end(), l.begin(), l.end());
}

bool GeometricGraph::adjacent(std::size_t u, std::size_t v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), static_cast<std::uint32_t>(v));
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> GeometricGraph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(edge_count());
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::uint32_t j : neighbors(i)) {
      if (j > i) out.emplace_back(static_cast<std::uint32_t>(i), j);
    }
  }
  return out;
}

void GeometricGraph::write_edge_list(std::ostream& out) const {
  for (const auto& [i, j] : edges()) out << i << ' ' << j << '\n';
}

GeometricGraph build_graph(const PointSet& ps, double r) { return GeometricGraph(ps, r); }

std::vector<Cluster> components(const GeometricGraph& g) {
  const std::size_t n = g.size();
  std::vector<char> seen(n, 0);
  std::vector<Cluster> out;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < n; ++s) {
    if (seen[s]) continue;
    Cluster c;
    c.root = s;
    seen[s] = 1;
    stack.push_back(s);
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      c.members.push_back(v);
      for (std::uint32_t u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          stack.push_back(u);
        }
      }
    }
    std::sort(c.members.begin(), c.members.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::size_t component_count(const GeometricGraph& g) {
  // union-find avoids materializing member lists
  const std::size_t n = g.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::size_t count = n;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::uint32_t u : g.neighbors(v)) {
      if (u < v) continue;
      const std::size_t a = find(v), b = find(u);
      if (a != b) {
        parent[a] = b;
        --count;
      }
    }
  }
  return count;
}

std::size_t isolated_count(const GeometricGraph& g) {
  std::size_t m = 0;
  for (std::size_t v = 0; v < g.size(); ++v) m += g.degree(v) == 0;
  return m;
}

Cluster cluster_of(const GeometricGraph& g, std::size_t v) {
  if (v >= g.size()) throw ValidationError("cluster_of: vertex index out of range");
  std::vector<char> seen(g.size(), 0);
  Cluster c;
  c.root = v;
  std::vector<std::size_t> stack{v};
  seen[v] = 1;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    c.members.push_back(x);
    for (std::uint32_t u : g.neighbors(x)) {
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  std::sort(c.members.begin(), c.members.end());
  return c;
}

std::vector<std::size_t> boundary_set(const PointSet& y, const PointSet& z, double r) {
  if (!(r > 0.0)) throw ValidationError("boundary_set: radius must be positive");
  std::vector<std::size_t> out;
  if (y.empty() || z.empty()) return out;
  if (y.dim() != z.dim()) throw ValidationError("boundary_set: dimension mismatch");
  const CellGrid grid(z, r);
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double best = grid.nearest_sqdist_within(y[i], r);
    if (best == 0.0) {
      // squared distance can underflow to 0 for distinct points; confirm exactly
      std::vector<std::uint32_t> hits;
      grid.within(y[i], r, hits);
      for (std::uint32_t j : hits) {
        auto a = y[i];
        auto b = z[j];
        if (std::equal(a.begin(), a.end(), b.begin())) throw ValidationError("boundary_set: Y and Z overlap");
      }
    }
    if (best <= r * r) out.push_back(i);
  }
  return out;
}

}  // namespace rgg
