#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "rgg/errors.hpp"
#include "rgg/euclid/functionals.hpp"

namespace rgg::euclid {

namespace {

/// Skilling's transform: axes -> transposed Hilbert index, in place.
void axes_to_transpose(std::uint32_t* x, int bits, int n) {
  const std::uint32_t m = 1u << (bits - 1);
  for (std::uint32_t q = m; q > 1; q >>= 1) {
    const std::uint32_t p = q - 1;
    for (int i = 0; i < n; ++i) {
      if (x[i] & q) {
        x[0] ^= p;
      } else {
        const std::uint32_t t = (x[0] ^ x[i]) & p;
        x[0] ^= t;
        x[i] ^= t;
      }
    }
  }
  for (int i = 1; i < n; ++i) x[i] ^= x[i - 1];
  std::uint32_t t = 0;
  for (std::uint32_t q = m; q > 1; q >>= 1) {
    if (x[n - 1] & q) t ^= q - 1;
  }
  for (int i = 0; i < n; ++i) x[i] ^= t;
}

}  // namespace

std::vector<std::size_t> hilbert_order(const PointSet& ps) {
  const int d = ps.dim();
  const std::size_t n = ps.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (n <= 1) return order;
  if (d < 1 || d > 3) throw UnsupportedDimension("hilbert_order supports d in {1, 2, 3}");
  if (d == 1) {
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return ps.coord(a, 0) < ps.coord(b, 0); });
    return order;
  }
  const int bits = d == 2 ? 31 : 21;
  std::vector<double> lo(static_cast<std::size_t>(d), INFINITY), hi(static_cast<std::size_t>(d), -INFINITY);
  for (std::size_t i = 0; i < n; ++i) {
    for (int k = 0; k < d; ++k) {
      lo[k] = std::min(lo[k], ps.coord(i, k));
      hi[k] = std::max(hi[k], ps.coord(i, k));
    }
  }
  double side = 0.0;
  for (int k = 0; k < d; ++k) side = std::max(side, hi[k] - lo[k]);
  if (side <= 0.0) side = 1.0;
  const double cells = std::ldexp(1.0, bits) - 1.0;
  std::vector<std::uint64_t> key(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t x[3] = {0, 0, 0};
    for (int k = 0; k < d; ++k) x[k] = static_cast<std::uint32_t>(std::floor((ps.coord(i, k) - lo[k]) / side * cells));
    axes_to_transpose(x, bits, d);
    std::uint64_t h = 0;
    for (int b = bits - 1; b >= 0; --b) {
      for (int k = 0; k < d; ++k) h = (h << 1) | ((x[k] >> b) & 1u);
    }
    key[i] = h;
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  return order;
}

}  // namespace rgg::euclid
