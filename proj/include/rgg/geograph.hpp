#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include "rgg/point_set.hpp"

namespace rgg {

/// G(X, r): vertex i is point i; {i, j} is an edge iff |x_i - x_j| <= r.
/// Adjacency is stored CSR style with each neighbour list sorted.
class GeometricGraph {
 public:
  GeometricGraph() = default;
  GeometricGraph(PointSet points, double radius);

  const PointSet& points() const { return points_; }
  double radius() const { return radius_; }
  std::size_t size() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return adj_.size() / 2; }

  std::span<const std::uint32_t> neighbors(std::size_t v) const {
    return {adj_.data() + offsets_[v], offsets_[v + 1] - offsets_[v]};
  }
  std::size_t degree(std::size_t v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const;

  /// Edges (i, j) with i < j in lexicographic order.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;
  /// `i j` per line, 0-based.
  void write_edge_list(std::ostream& out) const;

 private:
  PointSet points_;
  double radius_ = 1.0;
  std::vector<std::size_t> offsets_;
  std::vector<std::uint32_t> adj_;
};

GeometricGraph build_graph(const PointSet& ps, double r);

struct Cluster {
  std::size_t root = 0;
  std::vector<std::size_t> members;  // sorted
};

/// Connected components, ordered by smallest member.
std::vector<Cluster> components(const GeometricGraph& g);
std::size_t component_count(const GeometricGraph& g);
std::size_t isolated_count(const GeometricGraph& g);
Cluster cluster_of(const GeometricGraph& g, std::size_t v);

/// Indices of points of Y lying within distance r of some point of Z.
/// Y and Z must be disjoint.
std::vector<std::size_t> boundary_set(const PointSet& y, const PointSet& z, double r);

}  // namespace rgg
