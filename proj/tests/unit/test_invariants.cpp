#include <cmath>

#include "doctest.h"
#include "oracles/brute_force.hpp"
#include "rgg/coverage.hpp"
#include "rgg/errors.hpp"
#include "rgg/invariants/eternal.hpp"
#include "rgg/invariants/kappa.hpp"
#include "rgg/invariants/packing.hpp"
#include "rgg/invariants/registry.hpp"
#include "rgg/invariants/solvers.hpp"
#include "unit/helpers.hpp"

using namespace rgg;

namespace {

const PointSet kPath3{1, {{0.0}, {0.9}, {1.8}}};

PointSet clique_points(int n) {
  PointSet ps(2);
  for (int i = 0; i < n; ++i) ps.push_back(std::vector<double>{0.05 * std::cos(i), 0.05 * std::sin(i)});
  return ps;
}

PointSet edgeless_points(int n) {
  PointSet ps(2);
  for (int i = 0; i < n; ++i) ps.push_back(std::vector<double>{2.0 * i, 0.0});
  return ps;
}

}  // namespace

TEST_SUITE("invariants") {
  TEST_CASE("path P3") {
    const GeometricGraph g = build_graph(kPath3, 1.0);
    CHECK(independence_number(g).value == 2);
    CHECK(domination_number(g).value == 1);
    CHECK(domination_number(g).vertices == std::vector<std::size_t>{1});
    CHECK(clique_cover_number(g).value == 2);
    CHECK(eternal_domination_number(g).value == 2);
    CHECK(eternal_domination_multiguard(g).value == 2);
    CHECK(h_packing_number(g, Pattern::parse("K2")).value == 1);
    CHECK(vertex_cover_number(g).value == 1);
  }

  TEST_CASE("complete and edgeless graphs") {
    const GeometricGraph k = build_graph(clique_points(7), 1.0);
    CHECK(independence_number(k).value == 1);
    CHECK(clique_cover_number(k).value == 1);
    CHECK(eternal_domination_number(k).value == 1);
    CHECK(eternal_domination_multiguard(k).value == 1);
    CHECK(vertex_cover_number(k).value == 6);
    CHECK(h_packing_number(k, Pattern::parse("K3")).value == 2);
    CHECK(edge_cover_number(build_graph(clique_points(4), 1.0)).value == 2);

    const GeometricGraph e = build_graph(edgeless_points(6), 1.0);
    CHECK(domination_number(e).value == 6);
    CHECK(clique_cover_number(e).value == 6);
    CHECK(eternal_domination_number(e).value == 6);
    CHECK(vertex_cover_number(e).value == 0);
    CHECK(edge_cover_number(e).value == 0);

    const GeometricGraph empty = build_graph(PointSet(2), 1.0);
    for (const auto& f : registry(2)) {
      CAPTURE(f.name);
      CHECK(f.evaluate(empty) == 0.0);
    }
  }

  TEST_CASE("edge plus isolated vertex") {
    const GeometricGraph g = build_graph(PointSet{1, {{0.0}, {0.5}, {3.0}}}, 1.0);
    const SolveResult r = edge_cover_number(g);
    CHECK(r.value == 1);
    CHECK(is_edge_cover(g, r.edges));
  }

  TEST_CASE("exact solvers equal brute force") {
    CounterRng rng(123);
    for (int trial = 0; trial < 150; ++trial) {
      const int d = 1 + trial % 2;
      const std::size_t n = 1 + rng.below(12);
      const PointSet ps = test::random_instance(rng, d, n);
      const GeometricGraph g = build_graph(ps, 1.0);
      const auto adj = oracle::adjacency(ps, 1.0);
      CAPTURE(trial);
      CAPTURE(to_csv_string(ps));

      const SolveResult a = independence_number(g);
      CHECK(a.value == oracle::alpha(adj));
      CHECK(is_independent(g, a.vertices));
      CHECK(a.vertices.size() == a.value);

      const SolveResult gm = domination_number(g);
      CHECK(gm.value == oracle::gamma(adj));
      CHECK(is_dominating(g, gm.vertices));

      const SolveResult th = clique_cover_number(g);
      CHECK(th.value == oracle::theta(adj));
      CHECK(is_clique_partition(g, th.parts));
      if (d == 1) CHECK(th.value == a.value);

      CHECK(vertex_cover_number(g).value == oracle::vertex_cover(adj));
      const SolveResult m = matching_number(g);
      CHECK(m.value == oracle::matching(adj));
      CHECK(is_matching(g, m.edges));
      CHECK(h_packing_number(g, Pattern::parse("K3")).value == oracle::triangle_packing(adj));
      if (n <= 10) CHECK(edge_cover_number(g).value == oracle::edge_cover(adj));
      CHECK(edge_cover_number(g).value == n - m.value - isolated_count(g));

      if (n <= 9) {
        const SolveResult ed = eternal_domination_number(g);
        CHECK(ed.exact);
        CHECK(ed.value == oracle::eternal(adj));
        CHECK(eternal_domination_multiguard(g).value == ed.value);
        CHECK(gm.value <= a.value);
        CHECK(a.value <= ed.value);
        CHECK(ed.value <= th.value);
      }
    }
  }

  TEST_CASE("heuristic modes bracket the exact value") {
    CounterRng rng(9);
    for (int trial = 0; trial < 40; ++trial) {
      const PointSet ps = test::random_instance(rng, 2, 5 + rng.below(40));
      const GeometricGraph g = build_graph(ps, 1.0);
      for (auto* solve : {&independence_number, &domination_number, &clique_cover_number}) {
        const SolveResult ex = (*solve)(g, Mode::exact, {});
        const SolveResult h = (*solve)(g, Mode::heuristic, {});
        CHECK(h.lower <= ex.value);
        CHECK(ex.value <= h.upper);
      }
      CHECK(is_independent(g, independence_number(g, Mode::heuristic).vertices));
      CHECK(is_dominating(g, domination_number(g, Mode::heuristic).vertices));
      CHECK(is_clique_partition(g, clique_cover_number(g, Mode::heuristic).parts));
    }
  }

  TEST_CASE("eternal safe families are closed under attack") {
    CounterRng rng(55);
    for (int trial = 0; trial < 30; ++trial) {
      const PointSet ps = test::random_instance(rng, 2, 3 + rng.below(8));
      const GeometricGraph g = build_graph(ps, 1.0);
      const auto k = static_cast<std::size_t>(eternal_domination_number(g).value);
      const auto family = eternal_safe_family(g, k);
      CHECK_FALSE(family.empty());
      CHECK(is_eternal_safe_family(g, family));
      if (k > 1) CHECK(eternal_safe_family(g, k - 1).empty());
    }
  }

  TEST_CASE("eternal domination above the cap returns bounds") {
    PointSet ps(1);
    for (int i = 0; i < 30; ++i) ps.push_back(std::vector<double>{0.3 * i + 0.01 * (i % 3)});
    SolverLimits lim;
    lim.eternal_cap = 4;
    const SolveResult r = eternal_domination_number(build_graph(ps, 1.0), lim);
    CHECK(r.lower <= r.value);
    CHECK(r.value <= r.upper);
  }

  TEST_CASE("packing patterns") {
    CHECK_THROWS_AS(Pattern::parse("X3"), ValidationError);
    CHECK_THROWS_AS(Pattern::parse("C2"), ValidationError);
    CHECK(Pattern::parse("P3").edges.size() == 2);
    const GeometricGraph g = build_graph(kPath3, 1.0);
    CHECK(h_packing_number(g, Pattern::parse("P3")).value == 1);
    const std::vector<WeightedPattern> mix{{Pattern::parse("K2"), 1.0}, {Pattern::parse("K3"), 2.0}};
    CHECK(packing_c3(mix) == doctest::Approx(2.0 / 3.0));
    const GeometricGraph k = build_graph(clique_points(5), 1.0);
    CHECK(multi_pattern_packing(k, mix).value == 3.0);
  }

  TEST_CASE("kappa ball constant") {
    CHECK(kappa_ball_constant(1) == 2);
    CHECK(kappa_ball_constant(2) == 8);
    CHECK(kappa_ball_constant(3) == 64);
    CHECK(kappa_ball_constant(4) == 625);
    // negative control: dropping any ball breaks the covering
    for (int d = 1; d <= 2; ++d) {
      const PointSet full = kappa_construction(d);
      for (std::size_t drop = 0; drop < full.size(); ++drop) {
        std::vector<std::size_t> keep;
        for (std::size_t i = 0; i < full.size(); ++i) {
          if (i != drop) keep.push_back(i);
        }
        CHECK_FALSE(verify_ball_coverage(full.subset(keep), 1.0, 2.0, 1e-6).covered);
      }
    }
  }

  TEST_CASE("registry constants") {
    const auto& alpha = find_functional("alpha", 2);
    CHECK(alpha.K == 1.0);
    CHECK(alpha.c2 == 1.0);
    CHECK(find_functional("sigma", 2).c2 == 10.0);
    CHECK(find_functional("gamma", 2).c2 == 9.0);
    CHECK(find_functional("gamma", 1).c2 == 3.0);
    for (const auto& f : registry(2)) {
      CAPTURE(f.name);
      CHECK(f.K == std::max(f.c1 + f.zeta_singleton, f.c2 - f.zeta_singleton));
    }
    CHECK(find_functional("eta", 2).c3 == 0.5);
    CHECK_THROWS_AS(find_functional("nope", 2), ValidationError);
  }
}
