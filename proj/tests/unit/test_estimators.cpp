#include <cmath>

#include "doctest.h"
#include "oracles/monte_carlo.hpp"
#include "rgg/errors.hpp"
#include "rgg/estimators/densities.hpp"
#include "rgg/estimators/estimators.hpp"
#include "rgg/geograph.hpp"
#include "rgg/invariants/solvers.hpp"
#include "rgg/pointproc.hpp"

using namespace rgg;
using namespace rgg::est;

TEST_SUITE("estimators") {

TEST_CASE("summarize matches textbook formulas") {
  const auto m = summarize({1.0, 2.0, 3.0, 4.0});
  CHECK(m.mean == doctest::Approx(2.5));
  CHECK(m.stderr_ == doctest::Approx(std::sqrt(5.0 / 3.0 / 4.0)));
  CHECK(summarize({}).mean == 0.0);
  CHECK(summarize({7.0}).stderr_ == 0.0);
}

TEST_CASE("parallel_for visits every index and rethrows") {
  std::vector<int> hit(100, 0);
  parallel_for(hit.size(), 4, [&](std::size_t i) { hit[i] += 1; });
  for (int h : hit) CHECK(h == 1);
  CHECK_THROWS_AS(parallel_for(10, 3, [](std::size_t i) { if (i == 5) throw ValidationError("x"); }), ValidationError);
}

TEST_CASE("isolated vertices in d=1 match the closed form and a plain Monte Carlo") {
  const auto r = estimate_rho_box(EstimatorTarget::graph(find_functional("sigma", 1)), 1.0, 40.0, 500, 1);
  const double closed = std::exp(-2.0);
  CHECK(std::fabs(r.mean - closed) <= std::max(3.0 * r.stderr_, 0.02));
  CHECK(r.values.size() == 500);
  CHECK(r.heuristic_reps == 0);
  // the brute oracle itself agrees with the closed form (frozen seed)
  const double brute = oracle::isolated_rho_1d(1.0, 40.0, 400, 99);
  CHECK(std::fabs(brute - closed) < 0.01);
}

TEST_CASE("estimator reports are independent of the worker count") {
  const auto f = EstimatorTarget::graph(find_functional("alpha", 2));
  EstimatorOptions one, many;
  one.workers = 1;
  many.workers = 4;
  const auto a = estimate_rho_box(f, 1.0, 6.0, 30, 17, one);
  const auto b = estimate_rho_box(f, 1.0, 6.0, 30, 17, many);
  CHECK(a.values == b.values);
  CHECK(a.mean == b.mean);
  CHECK(a.stderr_ == b.stderr_);
  const auto c = estimate_rho_box(f, 1.0, 6.0, 30, 18, one);
  CHECK(c.values != a.values);
}

TEST_CASE("components estimate never exceeds one") {
  for (double lambda : {0.2, 1.0, 3.0}) {
    // per box the ratio is comps / E|X|, so only the mean is bounded
    const auto r = estimate_rho_box(EstimatorTarget::graph(find_functional("comps", 2)), lambda, 5.0, 200, 3);
    CHECK(r.mean <= 1.0 + 3.0 * r.stderr_);
  }
}

TEST_CASE("expected-size guard") {
  EstimatorOptions o;
  o.expected_cap = 100;
  CHECK_THROWS_AS(estimate_rho_box(EstimatorTarget::graph(find_functional("sigma", 2)), 10.0, 10.0, 1, 1, o),
                  ValidationError);
}

TEST_CASE("budget exhaustion falls back to a flagged heuristic value") {
  EstimatorOptions o;
  o.limits.node_cap = 1;
  const auto r = estimate_rho_box(EstimatorTarget::graph(find_functional("gamma", 2)), 4.0, 6.0, 4, 5, o);
  CHECK(r.heuristic_reps > 0);
  CHECK(r.partial());
}

TEST_CASE("origin cluster is a connected component containing the origin") {
  for (std::uint64_t k = 0; k < 20; ++k) {
    const PointSet c = origin_cluster(0.8, 2, CounterRng(k, 12), 100000, 2.0);
    CHECK(c[0][0] == 0.0);
    CHECK(c[0][1] == 0.0);
    CHECK(component_count(build_graph(c, 1.0)) == 1);
  }
  CHECK_THROWS_AS(origin_cluster(3.0, 2, CounterRng(1, 12), 50), BudgetExceeded);
}

TEST_CASE("cluster and box estimators agree in d=1") {
  for (const char* name : {"alpha", "comps", "sigma"}) {
    const auto& f = find_functional(name, 1);
    const auto b = estimate_rho_box(EstimatorTarget::graph(f), 0.5, 50.0, 400, 2);
    const auto c = estimate_rho_cluster(f, 0.5, 1500, 3);
    CHECK(std::fabs(b.mean - c.mean) <= 3.0 * std::hypot(b.stderr_, c.stderr_) + 0.02);
  }
  // c1 != 0 is refused
  FunctionalDescriptor bad = find_functional("alpha", 1);
  bad.c1 = 1.0;
  CHECK_THROWS_AS(estimate_rho_cluster(bad, 0.5, 1, 1), ValidationError);
}

TEST_CASE("cluster estimate tends to zeta({o}) for small lambda") {
  const auto r = estimate_rho_cluster(find_functional("alpha", 2), 0.01, 500, 4);
  CHECK(r.mean > 0.97);
  CHECK(r.mean <= 1.0);
}

TEST_CASE("thermodynamic run") {
  const auto rs = lln_thermo_run(EstimatorTarget::graph(find_functional("sigma", 2)), Distribution::uniform(2), 2.0,
                                 {400, 800}, 20, 9);
  REQUIRE(rs.size() == 2);
  CHECK(rs[0].r == doctest::Approx(std::sqrt(2.0 / 400.0)));
  // sigma / n -> e^{-t pi} in the interior; boundary effects push it up slightly
  for (const auto& r : rs) CHECK(r.mean == doctest::Approx(std::exp(-2.0 * M_PI)).epsilon(0.6));
  // huge radius: complete graph, gamma / n = 1 / n
  const auto big = lln_thermo_run(EstimatorTarget::graph(find_functional("gamma", 2)), Distribution::uniform(2), 1e6,
                                   {50}, 3, 1);
  CHECK(big[0].mean == doctest::Approx(1.0 / 50.0));
}

TEST_CASE("dense run of domination in d=1 approaches kappa_bar") {
  const auto rs = lln_dense_run(EstimatorTarget::graph(find_functional("gamma", 1)), Distribution::uniform(1), {},
                                {2500}, 10, 1);
  CHECK(rs[0].r == doctest::Approx(0.02));
  CHECK(std::fabs(rs[0].mean - 0.5) < 0.1);
  // r >= 1: gamma = 1, so r^d gamma = r
  const auto tiny = lln_dense_run(EstimatorTarget::graph(find_functional("gamma", 1)), Distribution::uniform(1),
                                  [](std::size_t, int) { return 2.0; }, {5}, 2, 1);
  CHECK(tiny[0].mean == doctest::Approx(2.0));
}

TEST_CASE("weighted targets") {
  const auto w = euclid::indicator_weight(2);
  const auto mst = EstimatorTarget::weighted("mst", w, 2);
  const PointSet ps(2, {{0, 0}, {0.5, 0}, {3, 0}});
  CHECK(mst(ps, 1.0, Mode::exact, {}).value == 1.0);
  CHECK_THROWS_AS(EstimatorTarget::weighted("nope", w, 2), ValidationError);
  const auto tsp = EstimatorTarget::weighted("tsp", euclid::power_weight(1.0, 2), 2);
  CHECK(tsp(ps, 1.0, Mode::exact, {}).value == doctest::Approx(6.0));
}

TEST_CASE("density references") {
  CHECK(density_constant("alpha_bar", 2)->value == doctest::Approx(1.1547005));
  CHECK(density_constant("kappa_bar", 2)->value == doctest::Approx(0.3849002));
  CHECK(density_constant("theta_bar", 2)->kind == ConstantKind::upper_bound);
  CHECK(!density_constant("kappa_bar", 3));
  for (int d : {1, 2}) CHECK(density_constant("kappa_bar", d)->value <= density_constant("alpha_bar", d)->value);
  CHECK(zeta_bar_reference("gamma", 2)->value == doctest::Approx(std::sqrt(4.0 / 3.0)));
  CHECK(!zeta_bar_reference("psi:K2", 2));
}

TEST_CASE("lattice packings") {
  const auto p1 = lattice_packing_density(1, 100);
  CHECK(p1.verified);
  CHECK(std::fabs(p1.density - 1.0) <= 0.02);
  const auto p2 = lattice_packing_density(2, 100);
  CHECK(p2.verified);
  CHECK(std::fabs(p2.density / std::sqrt(4.0 / 3.0) - 1.0) <= 0.02);
  CHECK_FALSE(lattice_packing_density(2, 10, 0.99).verified);
  CHECK_FALSE(lattice_packing_density(1, 10, 0.99).verified);
  CHECK_THROWS_AS(lattice_packing_density(3, 10), UnsupportedDimension);
}

TEST_CASE("lattice coverings") {
  const auto c1 = lattice_covering_density(1, 100);
  CHECK(c1.verified);
  CHECK(std::fabs(c1.density / 0.5 - 1.0) <= 0.02);
  const auto c2 = lattice_covering_density(2, 30);
  CHECK(c2.verified);
  CHECK(std::fabs(c2.density / std::sqrt(4.0 / 27.0) - 1.0) <= 0.05);
  CHECK_FALSE(lattice_covering_density(2, 10, 0.5).verified);
  CHECK_FALSE(lattice_covering_density(1, 10, 0.5).verified);
}

TEST_CASE("hexagon partition") {
  const auto h = hexagon_partition_density(100);
  CHECK(h.verified);
  CHECK(h.max_diameter <= 1.0 + 1e-12);
  CHECK(std::fabs(h.density / std::sqrt(64.0 / 27.0) - 1.0) <= 0.02);
  const auto tiny = hexagon_partition_density(0.01);
  CHECK(tiny.cells_meeting >= 1);
  CHECK(tiny.verified);
}

TEST_CASE("zeta star lower bounds") {
  const auto& a1 = find_functional("alpha", 1);
  for (double s : {0.5, 1.0, 2.5, 5.0, 5.5}) {
    const double v = zeta_star_lower(a1, s, 200, 3) * s;
    // exact: ceil(s) points fit in a half-open interval of length s
    CHECK(v <= std::ceil(s));
    CHECK(v >= std::ceil(s) - 1);
  }
  CHECK(zeta_star_lower(a1, 5.0, 200) * 5.0 == 5.0);
  const auto& a2 = find_functional("alpha", 2);
  const double lattice = lattice_packing_density(2, 6).density;
  CHECK(zeta_star_lower(a2, 6.0, 300) >= lattice);
  CHECK(zeta_star_lower(a2, 0.0, 10) == 0.0);
  CHECK_THROWS_AS(zeta_star_lower(find_functional("gamma", 2), 3.0, 10), ValidationError);
  // theta can only improve on the packing seed
  CHECK(zeta_star_lower(find_functional("theta", 2), 3.0, 200) >= lattice_packing_density(2, 3).density);
}

TEST_CASE("domination bounds via covering sandwich the solvers") {
  const PointSet x = sample_binomial(Distribution::uniform(2), 3000, 5);
  const double r = 0.1;
  const auto b = domination_bounds_via_covering(x, r, 0.1);
  const auto g = build_graph(x, r);
  CHECK(b.net_verified);
  CHECK(b.dominating_verified);
  CHECK(is_dominating(g, b.dominating_set));
  CHECK(static_cast<double>(b.dominating_set.size()) <= b.upper);
  const auto gh = domination_number(g, Mode::heuristic);
  REQUIRE(b.lower);
  CHECK(*b.lower <= gh.value);
  CHECK(gh.value <= b.upper);
}

TEST_CASE("domination bounds: full net coverage and degenerate inputs") {
  // a point at every site of a fine grid: every net ball is good
  PointSet grid(1);
  for (int i = 0; i < 1000; ++i) grid.push_back(std::vector<double>{-0.5 + i / 1000.0});
  const auto b = domination_bounds_via_covering(grid, 0.05, 0.2);
  CHECK(b.bad == 0);
  CHECK(b.upper == static_cast<double>(b.net_size));
  CHECK(b.dominating_verified);
  REQUIRE(b.lower);
  CHECK(*b.lower <= static_cast<double>(domination_number(build_graph(grid, 0.05)).value));

  const auto e = domination_bounds_via_covering(PointSet(2), 0.2, 0.1);
  CHECK(e.degenerate);
  CHECK(e.dominating_set.empty());
  CHECK(!e.notice.empty());

  const auto d3 = domination_bounds_via_covering(PointSet(3, {{0, 0, 0}}), 0.5, 0.1);
  CHECK(!d3.lower);
  CHECK_THROWS_AS(domination_bounds_via_covering(PointSet(2, {{0.7, 0}}), 0.2, 0.1), ValidationError);
  CHECK_THROWS_AS(domination_bounds_via_covering(PointSet(2), 0.2, 0.3), ValidationError);
}

TEST_CASE("rho sweep checks") {
  EstimatorOptions o;
  o.mode = Mode::heuristic;
  const auto a = rho_curve_sweep(find_functional("alpha", 2), {2.0, 4.0}, 8.0, 10, 1, o);
  CHECK(a.violations.empty());
  REQUIRE(a.zeta_bar);
  CHECK(a.rows[1].lambda_rho >= a.rows[0].lambda_rho);
  const auto c = rho_curve_sweep(find_functional("comps", 1), {0.01, 0.5, 2.0}, 30.0, 30, 2);
  CHECK(c.violations.empty());
  // negative control: pretend alpha has zeta({o}) = 0.5
  FunctionalDescriptor bad = find_functional("alpha", 1);
  bad.zeta_singleton = 0.5;
  const auto v = rho_curve_sweep(bad, {0.01, 0.5}, 30.0, 30, 2);
  CHECK(!v.violations.empty());
}

}  // TEST_SUITE
