#include <arm_neon.h>

#include <limits>

#include "rgg/simd/kernels.hpp"

namespace rgg::simd::neon {

namespace {

inline float64x2_t sq2(const SoaView& p, const double* q, std::size_t i) {
  float64x2_t s = vdupq_n_f64(0.0);
  for (int k = 0; k < p.dim; ++k) {
    const float64x2_t t = vsubq_f64(vld1q_f64(p.axes[k] + i), vdupq_n_f64(q[k]));
    s = vaddq_f64(s, vmulq_f64(t, t));  // no vfma: must match the scalar rounding
  }
  return s;
}

inline double sq1(const SoaView& p, const double* q, std::size_t i) {
  double s = 0.0;
  for (int k = 0; k < p.dim; ++k) {
    const double t = p.axes[k][i] - q[k];
    s += t * t;
  }
  return s;
}

void sqdist_batch(const SoaView& p, const double* q, double* out) {
  std::size_t i = 0;
  for (; i + 2 <= p.count; i += 2) vst1q_f64(out + i, sq2(p, q, i));
  for (; i < p.count; ++i) out[i] = sq1(p, q, i);
}

std::size_t collect_within(const SoaView& p, const double* q, double r2, std::uint32_t base, std::uint32_t* out) {
  const float64x2_t lim = vdupq_n_f64(r2);
  std::size_t m = 0;
  std::size_t i = 0;
  for (; i + 2 <= p.count; i += 2) {
    const uint64x2_t le = vcleq_f64(sq2(p, q, i), lim);
    if (vgetq_lane_u64(le, 0)) out[m++] = base + static_cast<std::uint32_t>(i);
    if (vgetq_lane_u64(le, 1)) out[m++] = base + static_cast<std::uint32_t>(i + 1);
  }
  for (; i < p.count; ++i) {
    if (sq1(p, q, i) <= r2) out[m++] = base + static_cast<std::uint32_t>(i);
  }
  return m;
}

std::size_t count_within(const SoaView& p, const double* q, double r2) {
  const float64x2_t lim = vdupq_n_f64(r2);
  std::size_t m = 0;
  std::size_t i = 0;
  for (; i + 2 <= p.count; i += 2) {
    const uint64x2_t le = vcleq_f64(sq2(p, q, i), lim);
    m += (vgetq_lane_u64(le, 0) & 1) + (vgetq_lane_u64(le, 1) & 1);
  }
  for (; i < p.count; ++i) m += sq1(p, q, i) <= r2;
  return m;
}

double min_sqdist(const SoaView& p, const double* q) {
  double best = std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  for (; i + 2 <= p.count; i += 2) {
    const double v = vminvq_f64(sq2(p, q, i));
    if (v < best) best = v;
  }
  for (; i < p.count; ++i) {
    const double s = sq1(p, q, i);
    if (s < best) best = s;
  }
  return best;
}

}  // namespace

const KernelTable& table() {
  static const KernelTable t{"neon", sqdist_batch, collect_within, count_within, min_sqdist};
  return t;
}

}  // namespace rgg::simd::neon
