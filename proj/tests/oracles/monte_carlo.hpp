#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace rgg::oracle {

/// Isolated-vertex fraction rho(lambda) for d = 1 by plain Monte Carlo:
/// std:: generators, O(n^2) distance scan. Shares no code with the library.
inline double isolated_rho_1d(double lambda, double s, int reps, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::poisson_distribution<int> count(lambda * s);
  std::uniform_real_distribution<double> u(-s / 2.0, s / 2.0);
  double total = 0.0;
  for (int r = 0; r < reps; ++r) {
    std::vector<double> x(static_cast<std::size_t>(count(gen)));
    for (double& v : x) v = u(gen);
    int isolated = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      bool alone = true;
      for (std::size_t j = 0; j < x.size() && alone; ++j) alone = i == j || std::fabs(x[i] - x[j]) > 1.0;
      isolated += alone;
    }
    total += isolated / (lambda * s);
  }
  return total / reps;
}

}  // namespace rgg::oracle
