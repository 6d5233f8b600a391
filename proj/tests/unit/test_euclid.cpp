#include <cmath>
#include <set>

#include "doctest.h"
#include "oracles/brute_force.hpp"
#include "rgg/errors.hpp"
#include "rgg/euclid/functionals.hpp"
#include "rgg/geograph.hpp"
#include "rgg/pointproc.hpp"
#include "unit/helpers.hpp"

using namespace rgg;
using namespace rgg::euclid;

namespace {

oracle::Weights matrix(const PointSet& ps, const WeightFunction& w, double scale) {
  const std::size_t n = ps.size();
  oracle::Weights m(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) m[i][j] = w.between(ps[std::min(i, j)], ps[std::max(i, j)], scale);
    }
  }
  return m;
}

bool is_cycle(const std::vector<std::size_t>& order, std::size_t n) {
  std::set<std::size_t> s(order.begin(), order.end());
  return order.size() == n && s.size() == n && (n == 0 || *s.rbegin() == n - 1);
}

double recompute(const PointSet& ps, const WeightFunction& w, double scale, const std::vector<std::pair<std::size_t, std::size_t>>& e) {
  double t = 0;
  for (auto [a, b] : e) t += w.between(ps[std::min(a, b)], ps[std::max(a, b)], scale);
  return t;
}

}  // namespace

TEST_SUITE("euclid") {
  TEST_CASE("weight library and truncation") {
    const auto norm1 = parse_weight("pow:1", 2);
    const std::vector<double> x{2.0, 0.0};
    CHECK(norm1(x) == doctest::Approx(2.0));
    CHECK(truncate(norm1, 1.0)(x) == 1.0);
    CHECK(truncate(norm1, 0.0)(x) == 0.0);
    CHECK(parse_weight("trunc:pow:2:0.8", 2)(x) == doctest::Approx(0.8));
    CHECK(parse_weight("trunc:pow:2:0.8", 2).flags.w5.has_value());
    CHECK(*parse_weight("trunc:pow:2:0.81", 2).flags.w5 == doctest::Approx(0.9));
    CHECK(parse_weight("restrict:log:0.5", 2)(std::vector<double>{0.4, 0.0}) == 0.0);
    CHECK_THROWS_AS(parse_weight("bogus", 2), ValidationError);
    CHECK_THROWS_AS(parse_weight("pow:x", 2), ValidationError);
    CHECK_THROWS_AS(parse_weight("trunc:pow:2", 2), ValidationError);
  }

  TEST_CASE("weight validation") {
    for (const char* spec : {"indicator", "log", "normsin", "powmix", "pow:1.5", "trunc:pow:2:0.8", "trunc:log:1.5",
                             "trunc:normsin:3", "trunc:powmix:2", "restrict:log:0.3", "restrict:trunc:pow:1:2:0.5"}) {
      for (int d = 1; d <= 3; ++d) {
        CAPTURE(spec);
        CAPTURE(d);
        for (const auto& c : validate_weight(parse_weight(spec, d), d)) {
          CAPTURE(c.flag);
          CHECK(c.pass);
        }
      }
    }
    auto bad = parse_weight("pow:1", 2);
    bad.flags.w5 = 1.0;
    bool caught = false;
    for (const auto& c : validate_weight(bad, 2)) {
      if (c.flag == "W5") {
        caught = !c.pass && !c.counterexample.empty();
      }
    }
    CHECK(caught);
    // a non-symmetric weight claiming W1
    WeightFunction skew("skew", [](std::span<const double> v) { return v[0] > 0 ? 1.0 : 0.0; }, 1.0);
    skew.flags.w1 = true;
    CHECK_FALSE(validate_weight(skew, 2)[0].pass);
  }

  TEST_CASE("tsp small cases") {
    const auto w = parse_weight("pow:1", 2);
    CHECK(tsp(PointSet(2), w, 1.0, Mode::exact).weight == 0.0);
    CHECK(tsp(PointSet{2, {{0.3, 0.1}}}, w, 1.0, Mode::exact).weight == 0.0);
    CHECK(tsp(PointSet{2, {{0, 0}, {3, 4}}}, w, 1.0, Mode::exact).weight == doctest::Approx(10.0));
    CHECK(tsp(PointSet{2, {{0, 0}, {3, 4}}}, w, 2.0, Mode::exact).weight == doctest::Approx(5.0));
    PointSet big(2);
    for (int i = 0; i < 19; ++i) big.push_back(std::vector<double>{1.0 * i, 0.5 * (i % 3)});
    CHECK_THROWS_AS(tsp(big, w, 1.0, Mode::exact), BudgetExceeded);
    CHECK(tsp(big, w, 1.0, Mode::heuristic).order.size() == 19);
  }

  TEST_CASE("solvers equal brute force") {
    CounterRng rng(404);
    const std::vector<WeightFunction> weights{parse_weight("pow:1", 2), parse_weight("pow:2", 2),
                                              parse_weight("indicator", 2), parse_weight("trunc:pow:1:0.7", 2),
                                              parse_weight("normsin", 2)};
    for (int trial = 0; trial < 100; ++trial) {
      const auto& w = weights[static_cast<std::size_t>(trial) % weights.size()];
      const double scale = rng.uniform(0.3, 2.0);
      const std::size_t n = rng.below(10);
      const PointSet ps = test::random_points(rng, 2, n, 2.0);
      const auto m = matrix(ps, w, scale);
      CAPTURE(trial);
      const TourResult t = tsp(ps, w, scale, Mode::exact);
      CHECK(t.weight == doctest::Approx(oracle::tsp(m)).epsilon(1e-9));
      CHECK(is_cycle(t.order, n));
      const TourResult h = tsp(ps, w, scale, Mode::heuristic);
      CHECK(h.weight >= t.weight - 1e-9);
      const MatchResult mm = min_matching(ps, w, scale, Mode::exact);
      CHECK(mm.weight == doctest::Approx(oracle::min_matching(m)).epsilon(1e-9));
      CHECK(mm.edges.size() == n / 2);
      CHECK(recompute(ps, w, scale, mm.edges) == doctest::Approx(mm.weight).epsilon(1e-9));
      CHECK(min_matching(ps, w, scale, Mode::heuristic).weight >= mm.weight - 1e-9);
      if (n <= 8) {
        const TreeResult tr = mst(ps, w, scale);
        CHECK(tr.weight == doctest::Approx(oracle::mst(m)).epsilon(1e-9));
        CHECK(oracle::mst_subsets(m) == doctest::Approx(oracle::mst(m)).epsilon(1e-12));
        CHECK(tr.edges.size() == (n ? n - 1 : 0));
        CHECK(recompute(ps, w, scale, tr.edges) == doctest::Approx(tr.weight).epsilon(1e-9));
      }
      const std::size_t k = rng.below(8);
      const PointSet u = test::random_points(rng, 2, k, 2.0);
      const PointSet v = test::random_points(rng, 2, k, 2.0);
      oracle::Weights bm(k, std::vector<double>(k));
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) bm[i][j] = w.between(u[i], v[j], scale);
      }
      CHECK(bipartite_matching(u, v, w, scale).weight == doctest::Approx(oracle::assignment(bm)).epsilon(1e-9));
    }
  }

  TEST_CASE("matching and bipartite examples") {
    const auto w = parse_weight("pow:1", 1);
    CHECK(min_matching(PointSet{1, {{0.0}}}, w, 1.0, Mode::exact).weight == 0.0);
    const MatchResult m = min_matching(PointSet{1, {{0.0}, {1.0}, {3.0}}}, w, 1.0, Mode::exact);
    CHECK(m.weight == doctest::Approx(1.0));
    CHECK(m.edges.size() == 1);
    const auto capped = parse_weight("trunc:pow:1:1", 2);
    const MatchResult b = bipartite_matching(PointSet{2, {{0, 0}}}, PointSet{2, {{0.1, 0}}}, capped, 1.0);
    CHECK(b.weight == doctest::Approx(0.1));
    CHECK(bipartite_matching(PointSet(2), PointSet(2), capped, 1.0).weight == 0.0);
    CHECK_THROWS_AS(bipartite_matching(PointSet{2, {{0, 0}}}, PointSet{2, {{1, 0}, {2, 0}}}, parse_weight("pow:1", 2), 1.0),
                    ValidationError);
    // unbalanced: one cross edge plus the excluded vertex
    const MatchResult ub = bipartite_matching(PointSet{2, {{0, 0}}}, PointSet{2, {{0.2, 0}, {5, 0}}}, capped, 1.0);
    CHECK(ub.weight == doctest::Approx(0.2));
    CHECK(bipartite_tsp(PointSet{2, {{0, 0}}}, PointSet{2, {{0.3, 0}}}, capped, 1.0, Mode::exact).weight ==
          doctest::Approx(0.6));
    CHECK(bipartite_tsp(PointSet(2), PointSet(2), capped, 1.0, Mode::exact).weight == 0.0);
  }

  TEST_CASE("bipartite tsp equals brute force") {
    CounterRng rng(17);
    const auto w = parse_weight("trunc:pow:1:1.2", 2);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t k = 1 + rng.below(4);
      const PointSet u = test::random_points(rng, 2, k, 2.0);
      const PointSet v = test::random_points(rng, 2, k, 2.0);
      const PointSet all = u.joined(v);
      oracle::Weights m(2 * k, std::vector<double>(2 * k, 0.0));
      for (std::size_t i = 0; i < 2 * k; ++i) {
        for (std::size_t j = 0; j < 2 * k; ++j) {
          if (i == j) continue;
          m[i][j] = ((i < k) == (j < k)) ? w.w_max() : w.between(all[std::min(i, j)], all[std::max(i, j)], 1.0);
        }
      }
      CHECK(bipartite_tsp(u, v, w, 1.0, Mode::exact).weight == doctest::Approx(oracle::tsp(m)).epsilon(1e-9));
    }
  }

  TEST_CASE("mst with indicator weight counts components") {
    CounterRng rng(3);
    const auto w = indicator_weight(2);
    for (int trial = 0; trial < 50; ++trial) {
      const PointSet ps = test::random_instance(rng, 2, 1 + rng.below(60));
      const double r = rng.uniform(0.5, 1.5);
      CHECK(mst(ps, w, r).weight == static_cast<double>(component_count(build_graph(ps, r))) - 1.0);
    }
    CHECK(mst(PointSet(2), w, 1.0).weight == 0.0);
  }

  TEST_CASE("hilbert order") {
    const PointSet line{1, {{0.5}, {-1.0}, {0.2}}};
    CHECK(hilbert_order(line) == std::vector<std::size_t>{1, 2, 0});
    CHECK(hilbert_order(PointSet{2, {{0.1, 0.1}}}) == std::vector<std::size_t>{0});
    // four grid points: the curve visits them as a cycle without crossing
    const PointSet sq{2, {{0.25, 0.25}, {0.75, 0.75}, {0.25, 0.75}, {0.75, 0.25}}};
    const auto order = hilbert_order(sq);
    const auto w = parse_weight("pow:1", 2);
    const EdgeWeights ew(sq, w, 1.0);
    CHECK(tour_weight(ew, order) == doctest::Approx(2.0));
    CHECK_THROWS_AS(hilbert_order(PointSet{4, {{0, 0, 0, 0}, {1, 1, 1, 1}}}), UnsupportedDimension);
  }

  TEST_CASE("two-opt never loses to nearest neighbour") {
    CounterRng rng(12);
    const auto w = parse_weight("pow:1", 2);
    for (int trial = 0; trial < 20; ++trial) {
      const PointSet ps = test::random_points(rng, 2, 10 + rng.below(200), 1.0);
      const EdgeWeights ew(ps, w, 1.0);
      auto order = nearest_neighbor_tour(ew);
      const double before = tour_weight(ew, order);
      two_opt(ew, order);
      CHECK(tour_weight(ew, order) <= before);
      CHECK(is_cycle(order, ps.size()));
    }
  }

  TEST_CASE("truncation is monotone") {
    CounterRng rng(21);
    const auto w = parse_weight("pow:1", 2);
    const auto wa = truncate(w, 0.5);
    for (int trial = 0; trial < 20; ++trial) {
      const PointSet ps = test::random_points(rng, 2, 2 + rng.below(9), 2.0);
      CHECK(tsp(ps, wa, 1.0, Mode::exact).weight <= tsp(ps, w, 1.0, Mode::exact).weight + 1e-12);
      CHECK(min_matching(ps, wa, 1.0, Mode::exact).weight <= min_matching(ps, w, 1.0, Mode::exact).weight + 1e-12);
      CHECK(mst(ps, wa, 1.0).weight <= mst(ps, w, 1.0).weight + 1e-12);
    }
  }

  TEST_CASE("scaling identity") {
    CounterRng rng(5);
    const double c5 = 2.5;
    const auto w = parse_weight("trunc:pow:1:2.5", 2);
    WeightFunction w2("scaled", [w, c5](std::span<const double> x) {
      std::vector<double> y(x.begin(), x.end());
      for (auto& c : y) c *= c5;
      return w(y);
    }, w.w_max());
    for (int trial = 0; trial < 10; ++trial) {
      const PointSet ps = test::random_points(rng, 2, 3 + rng.below(7), 5.0);
      CHECK(tsp(ps, w, 1.0, Mode::exact).weight ==
            doctest::Approx(tsp(scaled(ps, 1.0 / c5), w2, 1.0, Mode::exact).weight).epsilon(1e-9));
    }
  }

  TEST_CASE("short degree constant") {
    // side 1/2 in d = 2: the 7 x 7 block of offsets minus the 12 with gap > 1
    CHECK(mst_short_degree_bound(2, 1.0) == 37 + 2);
    CHECK(mst_short_degree_bound(1, 1.0) == 5 + 2);
    const auto fs = weighted_functionals(indicator_weight(2), 2);
    REQUIRE(fs.size() == 3);
    CHECK(fs[0].c1 == 2.0);
    CHECK(fs[1].c2 == 1.0);
    CHECK(fs[2].c2 == 39.0);
    CHECK_THROWS_AS(weighted_functionals(parse_weight("pow:1", 2), 2), ValidationError);
  }
}
