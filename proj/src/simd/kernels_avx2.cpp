#include <immintrin.h>

#include <limits>

#include "rgg/simd/kernels.hpp"

namespace rgg::simd::avx2 {

namespace {

inline __m256d sq4(const SoaView& p, const double* q, std::size_t i) {
  __m256d s = _mm256_setzero_pd();
  for (int k = 0; k < p.dim; ++k) {
    const __m256d t = _mm256_sub_pd(_mm256_loadu_pd(p.axes[k] + i), _mm256_set1_pd(q[k]));
    s = _mm256_add_pd(s, _mm256_mul_pd(t, t));
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
  for (; i + 4 <= p.count; i += 4) _mm256_storeu_pd(out + i, sq4(p, q, i));
  for (; i < p.count; ++i) out[i] = sq1(p, q, i);
}

std::size_t collect_within(const SoaView& p, const double* q, double r2, std::uint32_t base, std::uint32_t* out) {
  const __m256d lim = _mm256_set1_pd(r2);
  std::size_t m = 0;
  std::size_t i = 0;
  for (; i + 4 <= p.count; i += 4) {
    int mask = _mm256_movemask_pd(_mm256_cmp_pd(sq4(p, q, i), lim, _CMP_LE_OQ));
    while (mask) {
      const int lane = __builtin_ctz(static_cast<unsigned>(mask));
      out[m++] = base + static_cast<std::uint32_t>(i + static_cast<std::size_t>(lane));
      mask &= mask - 1;
    }
  }
  for (; i < p.count; ++i) {
    if (sq1(p, q, i) <= r2) out[m++] = base + static_cast<std::uint32_t>(i);
  }
  return m;
}

std::size_t count_within(const SoaView& p, const double* q, double r2) {
  const __m256d lim = _mm256_set1_pd(r2);
  std::size_t m = 0;
  std::size_t i = 0;
  for (; i + 4 <= p.count; i += 4) {
    m += static_cast<std::size_t>(__builtin_popcount(static_cast<unsigned>(_mm256_movemask_pd(_mm256_cmp_pd(sq4(p, q, i), lim, _CMP_LE_OQ)))));
  }
  for (; i < p.count; ++i) m += sq1(p, q, i) <= r2;
  return m;
}

double min_sqdist(const SoaView& p, const double* q) {
  double best = std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  if (p.count >= 4) {
    __m256d acc = _mm256_set1_pd(best);
    for (; i + 4 <= p.count; i += 4) acc = _mm256_min_pd(acc, sq4(p, q, i));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    for (double v : lanes) best = v < best ? v : best;
  }
  for (; i < p.count; ++i) {
    const double s = sq1(p, q, i);
    if (s < best) best = s;
  }
  return best;
}

}  // namespace

const KernelTable& table() {
  static const KernelTable t{"avx2", sqdist_batch, collect_within, count_within, min_sqdist};
  return t;
}

}  // namespace rgg::simd::avx2
