#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "oracles/brute_force.hpp"
#include "rgg/cell_grid.hpp"
#include "rgg/errors.hpp"
#include "rgg/geograph.hpp"
#include "rgg/pointproc.hpp"
#include "rgg/simd/kernels.hpp"
#include "unit/helpers.hpp"

using namespace rgg;

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> brute_edges(const PointSet& ps, double r) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> e;
  for (std::uint32_t i = 0; i < ps.size(); ++i) {
    for (std::uint32_t j = i + 1; j < ps.size(); ++j) {
      if (ps.squared_distance(i, j) <= r * r) e.emplace_back(i, j);
    }
  }
  return e;
}

}  // namespace

TEST_SUITE("geograph") {
  TEST_CASE("small examples") {
    const GeometricGraph g = build_graph(PointSet{1, {{0.0}, {0.5}, {2.0}}}, 1.0);
    CHECK(g.edge_count() == 1);
    CHECK(g.adjacent(0, 1));
    CHECK(component_count(g) == 2);
    CHECK(build_graph(PointSet{2, {{0.3, 0.3}}}, 1.0).edge_count() == 0);
    CHECK(components(build_graph(PointSet(2), 1.0)).empty());
    CHECK(component_count(build_graph(PointSet{2, {{0, 0}, {0.1, 0}, {0, 0.1}}}, 1.0)) == 1);
    CHECK_THROWS_AS(build_graph(PointSet{1, {{0.0}}}, 0.0), ValidationError);
  }

  TEST_CASE("closed ball convention keeps ties") {
    const GeometricGraph g = build_graph(PointSet{1, {{0.0}, {1.0}}}, 1.0);
    CHECK(g.edge_count() == 1);
  }

  TEST_CASE("grid matches brute force") {
    CounterRng rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
      const int d = 1 + trial % 4;
      const std::size_t n = 1 + rng.below(500);
      const PointSet ps = test::random_points(rng, d, n, 1.0);
      const double r = rng.uniform(0.01, 0.4);
      CHECK(build_graph(ps, r).edges() == brute_edges(ps, r));
    }
    const PointSet ps = sample_binomial(Distribution::uniform(2), 200, 1);
    CHECK(build_graph(ps, 0.1).edges() == brute_edges(ps, 0.1));
  }

  TEST_CASE("isolated and component counts") {
    CounterRng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      const PointSet ps = test::random_instance(rng, 1 + trial % 2, 1 + rng.below(20));
      const GeometricGraph g = build_graph(ps, 1.0);
      const auto adj = oracle::adjacency(ps, 1.0);
      std::size_t iso = 0;
      for (auto m : adj) iso += m == 0;
      CHECK(isolated_count(g) == iso);
      CHECK(component_count(g) == static_cast<std::size_t>(oracle::component_count(adj)));
      CHECK(components(g).size() == component_count(g));
      for (const auto& c : components(g)) {
        for (std::size_t v : c.members) CHECK(cluster_of(g, v).members == c.members);
      }
    }
    PointSet edgeless(2);
    for (int i = 0; i < 6; ++i) edgeless.push_back(std::vector<double>{3.0 * i, 0.0});
    CHECK(isolated_count(build_graph(edgeless, 1.0)) == 6);
    CHECK(isolated_count(build_graph(PointSet{2, {{0, 0}, {0.1, 0}, {0, 0.1}}}, 1.0)) == 0);
  }

  TEST_CASE("boundary set") {
    CHECK(boundary_set(PointSet{1, {{0.0}}}, PointSet(1), 1.0).empty());
    CHECK(boundary_set(PointSet{1, {{0.0}}}, PointSet{1, {{0.5}}}, 1.0) == std::vector<std::size_t>{0});
    CHECK_THROWS_AS(boundary_set(PointSet{1, {{0.0}}}, PointSet{1, {{0.0}}}, 1.0), ValidationError);
    CounterRng rng(8);
    for (int trial = 0; trial < 30; ++trial) {
      const PointSet y = test::random_points(rng, 2, 40, 5.0);
      const PointSet z = test::random_points(rng, 2, 40, 5.0);
      std::vector<std::size_t> expect;
      for (std::size_t i = 0; i < y.size(); ++i) {
        for (std::size_t j = 0; j < z.size(); ++j) {
          if (squared_distance(y[i], z[j]) <= 1.0) {
            expect.push_back(i);
            break;
          }
        }
      }
      CHECK(boundary_set(y, z, 1.0) == expect);
    }
  }

  TEST_CASE("scaling then radius 1 equals radius r") {
    const PointSet ps = sample_binomial(Distribution::uniform(2), 300, 9);
    const double r = 0.08;
    CHECK(build_graph(scaled(ps, 1.0 / r), 1.0).edges() == build_graph(ps, r).edges());
  }

  TEST_CASE("edge list export") {
    std::ostringstream out;
    build_graph(PointSet{1, {{0.0}, {0.5}, {2.0}}}, 1.0).write_edge_list(out);
    CHECK(out.str() == "0 1\n");
  }

  TEST_CASE("vector kernels agree with the scalar reference") {
    CounterRng rng(31);
    const std::vector<const simd::KernelTable*> tables{&simd::scalar_kernels(), simd::avx2_kernels(), simd::neon_kernels()};
    for (int d = 1; d <= 3; ++d) {
      const PointSet ps = test::random_points(rng, d, 203, 1.0);
      std::vector<std::vector<double>> axes(static_cast<std::size_t>(d));
      for (std::size_t i = 0; i < ps.size(); ++i) {
        for (int k = 0; k < d; ++k) axes[k].push_back(ps.coord(i, k));
      }
      simd::SoaView view{};
      for (int k = 0; k < d; ++k) view.axes[k] = axes[k].data();
      view.dim = d;
      view.count = ps.size();
      const double q[3] = {0.5, 0.25, 0.75};
      std::vector<double> ref(ps.size()), got(ps.size());
      simd::scalar_kernels().sqdist_batch(view, q, ref.data());
      for (const auto* t : tables) {
        if (!t) continue;
        CAPTURE(t->name);
        t->sqdist_batch(view, q, got.data());
        CHECK(got == ref);
        std::vector<std::uint32_t> a(ps.size()), b(ps.size());
        a.resize(simd::scalar_kernels().collect_within(view, q, 0.04, 3, a.data()));
        b.resize(t->collect_within(view, q, 0.04, 3, b.data()));
        CHECK(a == b);
        CHECK(t->count_within(view, q, 0.04) == a.size());
        CHECK(t->min_sqdist(view, q) == simd::scalar_kernels().min_sqdist(view, q));
      }
    }
  }

  TEST_CASE("cell grid queries") {
    CounterRng rng(77);
    const PointSet ps = test::random_points(rng, 2, 400, 3.0);
    const CellGrid grid(ps, 0.3);
    for (int t = 0; t < 50; ++t) {
      const std::vector<double> q{rng.uniform(-1, 4), rng.uniform(-1, 4)};
      const double r = rng.uniform(0.05, 0.6);
      std::vector<std::uint32_t> got;
      grid.within(q, r, got);
      std::sort(got.begin(), got.end());
      std::vector<std::uint32_t> expect;
      double best = std::numeric_limits<double>::infinity();
      for (std::uint32_t i = 0; i < ps.size(); ++i) {
        const double d2 = squared_distance(ps[i], q);
        if (d2 <= r * r) {
          expect.push_back(i);
          best = std::min(best, d2);
        }
      }
      CHECK(got == expect);
      CHECK(grid.count_within(q, r) == expect.size());
      CHECK(grid.nearest_sqdist_within(q, r) == best);
    }
  }
}
