#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rgg/distribution.hpp"
#include "rgg/point_set.hpp"
#include "rgg/rng.hpp"

namespace rgg {

/// X_n: n i.i.d. points with law mu. Deterministic in seed; exact floating
/// point collisions are resampled.
PointSet sample_binomial(const Distribution& mu, std::size_t n, std::uint64_t seed);

/// Coupled pair (X_n, P_t): both are prefixes of one i.i.d. stream, and
/// N_t ~ Poisson(t) is drawn from an independent substream.
class CoupledSample {
 public:
  CoupledSample(Distribution mu, double t, std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }
  double intensity() const { return t_; }
  std::size_t poisson_count() const { return poisson_count_; }

  /// First n points of the stream (X_n).
  PointSet binomial(std::size_t n) const;
  /// First N_t points of the stream (P_t).
  PointSet poisson() const { return binomial(poisson_count_); }

 private:
  Distribution mu_;
  double t_;
  std::uint64_t seed_;
  std::size_t poisson_count_;
};

CoupledSample sample_poisson_coupled(const Distribution& mu, double t, std::uint64_t seed);

/// H_{lambda,s}: homogeneous Poisson process of intensity lambda restricted to Q_s.
PointSet sample_homogeneous_box(double lambda, double s, int dim, std::uint64_t seed);
/// Same, drawing from a caller-supplied stream.
PointSet sample_homogeneous_box(double lambda, double s, int dim, CounterRng& rng);

/// scale * ps + shift.
PointSet transform(const PointSet& ps, double scale, std::span<const double> shift);
/// scale * ps.
PointSet scaled(const PointSet& ps, double scale);

}  // namespace rgg
