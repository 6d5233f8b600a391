#include <limits>

#include "rgg/simd/kernels.hpp"

namespace rgg::simd {

namespace {

inline double sq(const SoaView& p, const double* q, std::size_t i) {
  double s = 0.0;
  for (int k = 0; k < p.dim; ++k) {
    const double t = p.axes[k][i] - q[k];
    s += t * t;
  }
  return s;
}

void sqdist_batch(const SoaView& p, const double* q, double* out) {
  for (std::size_t i = 0; i < p.count; ++i) out[i] = sq(p, q, i);
}

std::size_t collect_within(const SoaView& p, const double* q, double r2, std::uint32_t base, std::uint32_t* out) {
  std::size_t m = 0;
  for (std::size_t i = 0; i < p.count; ++i) {
    if (sq(p, q, i) <= r2) out[m++] = base + static_cast<std::uint32_t>(i);
  }
  return m;
}

std::size_t count_within(const SoaView& p, const double* q, double r2) {
  std::size_t m = 0;
  for (std::size_t i = 0; i < p.count; ++i) m += sq(p, q, i) <= r2;
  return m;
}

double min_sqdist(const SoaView& p, const double* q) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < p.count; ++i) {
    const double s = sq(p, q, i);
    if (s < best) best = s;
  }
  return best;
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", sqdist_batch, collect_within, count_within, min_sqdist};
  return table;
}

}  // namespace rgg::simd
