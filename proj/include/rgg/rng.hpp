#pragma once

#include <cstdint>
#include <limits>

namespace rgg {

/// Counter-based generator: output k of stream (seed, stream_id) is a pure
/// function of (seed, stream_id, k). Substreams for replications are derived
/// by key splitting, so the result of replication i never depends on how
/// many replications ran before it or on which worker ran it.
class CounterRng {
 public:
  using result_type = std::uint64_t;

  CounterRng() : CounterRng(0) {}
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream_id = 0);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

  result_type operator()() { return mix(key_ + golden_ * (++counter_)); }

  /// Independent child stream; the parent is left untouched.
  CounterRng split(std::uint64_t child_id) const;

  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

  static std::uint64_t mix(std::uint64_t z);

 private:
  static constexpr std::uint64_t golden_ = 0x9e3779b97f4a7c15ULL;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Poisson variate; inversion for small means, PTRS-style transformed
/// rejection (Hormann 1993) otherwise. Defined here rather than via
/// std::poisson_distribution so counts are identical across standard libraries.
std::uint64_t poisson(CounterRng& rng, double mean);

}  // namespace rgg
