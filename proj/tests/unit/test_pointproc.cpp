#include <cmath>

#include "doctest.h"
#include "rgg/distribution.hpp"
#include "rgg/errors.hpp"
#include "rgg/pointproc.hpp"

using namespace rgg;

TEST_SUITE("pointproc") {
  TEST_CASE("binomial sample of size zero is empty") {
    CHECK(sample_binomial(Distribution::uniform(2), 0, 9).empty());
  }

  TEST_CASE("binomial sample is deterministic and lies in Q_1") {
    const auto mu = Distribution::uniform(3);
    const PointSet a = sample_binomial(mu, 500, 42);
    const PointSet b = sample_binomial(mu, 500, 42);
    CHECK(a == b);
    CHECK_FALSE(a == sample_binomial(mu, 500, 43));
    for (double c : a.coords()) {
      CHECK(c >= -0.5);
      CHECK(c < 0.5);
    }
  }

  TEST_CASE("dyadic subcube masses concentrate") {
    const std::size_t n = 100000;
    const PointSet x = sample_binomial(Distribution::uniform(2), n, 7);
    // 4 x 4 dyadic grid, each cell has mass 1/16
    std::vector<std::size_t> counts(16, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const int a = static_cast<int>(std::floor((x.coord(i, 0) + 0.5) * 4));
      const int b = static_cast<int>(std::floor((x.coord(i, 1) + 0.5) * 4));
      ++counts[static_cast<std::size_t>(a * 4 + b)];
    }
    const double p = 1.0 / 16.0;
    for (std::size_t c : counts) CHECK(std::fabs(static_cast<double>(c) / n - p) <= 4 * std::sqrt(p * (1 - p) / n));
  }

  TEST_CASE("blocked density respects zero cells") {
    // mass only in the upper-right quarter of Q_1
    BlockedDensity f{1.0, 2, {0.0, 0.0, 0.0, 4.0}};
    const PointSet x = sample_binomial(Distribution::blocked(2, f), 2000, 3);
    for (std::size_t i = 0; i < x.size(); ++i) {
      CHECK(x.coord(i, 0) >= 0.0);
      CHECK(x.coord(i, 1) >= 0.0);
    }
  }

  TEST_CASE("segment measure puts every point on the segment") {
    const auto mu = Distribution::on_segment({-0.5, -0.5}, {0.5, 0.5});
    const PointSet x = sample_binomial(mu, 5, 11);
    REQUIRE(x.size() == 5);
    for (std::size_t i = 0; i < 5; ++i) CHECK(x.coord(i, 0) == doctest::Approx(x.coord(i, 1)));
  }

  TEST_CASE("mass validation") {
    BlockedDensity half{1.0, 1, {0.5}};
    CHECK_THROWS_AS(Distribution::blocked(2, half), ValidationError);
    BlockedDensity neg{1.0, 2, {2.0, 2.0, 1.0, -1.0}};
    CHECK_THROWS_AS(Distribution::blocked(2, neg), ValidationError);
    CHECK_NOTHROW(Distribution::mixture(2, BlockedDensity{1.0, 1, {0.5}}, {Segment{{0, 0}, {0.25, 0}, 0.5}}));
  }

  TEST_CASE("poisson coupling shares the prefix") {
    const auto mu = Distribution::uniform(2);
    const CoupledSample s = sample_poisson_coupled(mu, 50.0, 5);
    const PointSet p = s.poisson();
    const PointSet x = s.binomial(30);
    const std::size_t m = std::min(p.size(), x.size());
    for (std::size_t i = 0; i < m; ++i) {
      CHECK(p[i][0] == x[i][0]);
      CHECK(p[i][1] == x[i][1]);
    }
    CHECK(sample_poisson_coupled(mu, 50.0, 5).poisson() == p);
  }

  TEST_CASE("poisson count has mean t") {
    const auto mu = Distribution::uniform(1);
    double sum = 0;
    const int reps = 10000;
    for (int i = 0; i < reps; ++i) sum += static_cast<double>(sample_poisson_coupled(mu, 100.0, 1000 + i).poisson_count());
    CHECK(std::fabs(sum / reps - 100.0) <= 4 * std::sqrt(100.0 / reps));
  }

  TEST_CASE("small t gives empty processes") {
    const auto mu = Distribution::uniform(1);
    bool saw_empty = false;
    for (std::uint64_t seed = 0; seed < 200 && !saw_empty; ++seed) {
      const CoupledSample s = sample_poisson_coupled(mu, 3.0, seed);
      if (s.poisson_count() == 0) {
        saw_empty = true;
        CHECK(s.poisson().empty());
      }
    }
    CHECK(saw_empty);
  }

  TEST_CASE("homogeneous box") {
    CHECK_THROWS_AS(sample_homogeneous_box(1.0, 0.0, 2, 1), ValidationError);
    CHECK_THROWS_AS(sample_homogeneous_box(0.0, 1.0, 2, 1), ValidationError);
    double sum = 0, sq = 0;
    const int reps = 400;
    for (int i = 0; i < reps; ++i) {
      const PointSet h = sample_homogeneous_box(2.0, 10.0, 2, 77 + i);
      for (double c : h.coords()) {
        CHECK(c >= -5.0);
        CHECK(c < 5.0);
      }
      sum += static_cast<double>(h.size());
      sq += static_cast<double>(h.size()) * static_cast<double>(h.size());
    }
    const double mean = sum / reps;
    const double se = std::sqrt((sq / reps - mean * mean) / reps);
    CHECK(std::fabs(mean - 200.0) <= 4 * se);
  }

  TEST_CASE("transform") {
    const PointSet x{2, {{0.1, 0.2}, {0.3, -0.4}}};
    const std::vector<double> zero{0.0, 0.0};
    CHECK(transform(x, 1.0, zero) == x);
    const PointSet one{2, {{1.0, 2.0}}};
    const std::vector<double> y{0.5, -1.0};
    const PointSet t = transform(one, 3.0, y);
    CHECK(t[0][0] == doctest::Approx(3.5));
    CHECK(t[0][1] == doctest::Approx(5.0));
    CHECK_THROWS_AS(transform(x, 0.0, zero), ValidationError);
  }
}
