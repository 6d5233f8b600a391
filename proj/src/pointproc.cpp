#include "rgg/pointproc.hpp"

#include <cmath>
#include <cstring>
#include <unordered_set>

#include "rgg/errors.hpp"

namespace rgg {

namespace {

struct BitsHash {
  std::size_t operator()(const std::vector<std::uint64_t>& v) const {
    std::uint64_t h = 0x84222325cbf29ce4ULL;
    for (auto x : v) h = CounterRng::mix(h ^ x);
    return static_cast<std::size_t>(h);
  }
};

/// Draws points from `draw` until `n` pairwise distinct points are collected.
template <class Draw>
PointSet collect_distinct(int dim, std::size_t n, Draw&& draw) {
  PointSet ps(dim);
  ps.reserve(n);
  std::unordered_set<std::vector<std::uint64_t>, BitsHash> seen;
  seen.reserve(n * 2);
  std::vector<double> p(static_cast<std::size_t>(dim));
  std::vector<std::uint64_t> key(static_cast<std::size_t>(dim));
  while (ps.size() < n) {
    draw(std::span<double>(p));
    for (int k = 0; k < dim; ++k) {
      double c = p[k] == 0.0 ? 0.0 : p[k];  // fold -0.0
      std::memcpy(&key[k], &c, sizeof(double));
    }
    if (seen.insert(key).second) ps.push_back(p);
  }
  return ps;
}

}  // namespace

PointSet sample_binomial(const Distribution& mu, std::size_t n, std::uint64_t seed) {
  mu.validate();
  CounterRng rng(seed, 1);
  return collect_distinct(mu.dim(), n, [&](std::span<double> out) { mu.sample(rng, out); });
}

CoupledSample::CoupledSample(Distribution mu, double t, std::uint64_t seed) : mu_(std::move(mu)), t_(t), seed_(seed) {
  if (!(t > 0.0)) throw ValidationError("sample_poisson_coupled: t must be positive");
  mu_.validate();
  CounterRng count_rng(seed, 2);
  poisson_count_ = static_cast<std::size_t>(rgg::poisson(count_rng, t));
}

PointSet CoupledSample::binomial(std::size_t n) const { return sample_binomial(mu_, n, seed_); }

CoupledSample sample_poisson_coupled(const Distribution& mu, double t, std::uint64_t seed) {
  return CoupledSample(mu, t, seed);
}

PointSet sample_homogeneous_box(double lambda, double s, int dim, CounterRng& rng) {
  if (!(lambda > 0.0)) throw ValidationError("sample_homogeneous_box: lambda must be positive");
  if (!(s > 0.0)) throw ValidationError("sample_homogeneous_box: s must be positive");
  if (dim <= 0) throw ValidationError("sample_homogeneous_box: dimension must be positive");
  const auto count = static_cast<std::size_t>(poisson(rng, lambda * std::pow(s, dim)));
  const double half = s / 2.0;
  return collect_distinct(dim, count, [&](std::span<double> out) {
    for (int k = 0; k < dim; ++k) {
      double x = -half + s * rng.uniform01();
      if (x >= half) x = -half;
      out[k] = x;
    }
  });
}

PointSet sample_homogeneous_box(double lambda, double s, int dim, std::uint64_t seed) {
  CounterRng rng(seed, 3);
  return sample_homogeneous_box(lambda, s, dim, rng);
}

PointSet transform(const PointSet& ps, double scale, std::span<const double> shift) {
  if (!(scale > 0.0)) throw ValidationError("transform: scale must be positive");
  if (!shift.empty() && shift.size() != static_cast<std::size_t>(ps.dim()))
    throw ValidationError("transform: shift has wrong dimension");
  std::vector<double> c(ps.coords().begin(), ps.coords().end());
  const auto d = static_cast<std::size_t>(ps.dim());
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = scale * c[i] + (shift.empty() ? 0.0 : shift[i % d]);
  }
  return PointSet(ps.dim(), std::move(c));
}

PointSet scaled(const PointSet& ps, double scale) { return transform(ps, scale, {}); }

}  // namespace rgg
