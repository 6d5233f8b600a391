#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace rgg::simd {

/// Structure-of-arrays view: axes[k][i] is coordinate k of point i.
struct SoaView {
  const double* axes[3] = {nullptr, nullptr, nullptr};
  int dim = 0;
  std::size_t count = 0;
};

/// One implementation of the distance kernels. Every variant must agree with
/// the scalar reference bit for bit (the sum is accumulated axis by axis from
/// zero, and contraction is disabled at build level).
struct KernelTable {
  const char* name;
  /// out[i] = |p_i - q|^2.
  void (*sqdist_batch)(const SoaView& pts, const double* q, double* out);
  /// Writes base + i for every i with |p_i - q|^2 <= r2; returns how many.
  std::size_t (*collect_within)(const SoaView& pts, const double* q, double r2, std::uint32_t base, std::uint32_t* out);
  std::size_t (*count_within)(const SoaView& pts, const double* q, double r2);
  /// min_i |p_i - q|^2, +inf for an empty view.
  double (*min_sqdist)(const SoaView& pts, const double* q);
};

/// Kernels handle dim <= 3; higher dimensions go through the generic row path.
constexpr int kMaxSoaDim = 3;

const KernelTable& scalar_kernels();
/// Null when the variant was not compiled in or the CPU lacks it.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

/// Best available table, unless RGG_SIMD=scalar|avx2|neon pins one.
const KernelTable& active();
/// Overrides the runtime choice (tests); unknown or unavailable names throw.
void select(const std::string& name);

}  // namespace rgg::simd
