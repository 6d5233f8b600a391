#include <atomic>
#include <cstdlib>
#include <string>

#include "rgg/errors.hpp"
#include "rgg/simd/kernels.hpp"

namespace rgg::simd {

#if defined(RGG_WITH_AVX2)
namespace avx2 {
const KernelTable& table();
}
#endif
#if defined(RGG_WITH_NEON)
namespace neon {
const KernelTable& table();
}
#endif

const KernelTable* avx2_kernels() {
#if defined(RGG_WITH_AVX2)
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok ? &avx2::table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_kernels() {
#if defined(RGG_WITH_NEON)
  return &neon::table();  // baseline on aarch64
#else
  return nullptr;
#endif
}

namespace {

const KernelTable* by_name(const std::string& name) {
  if (name == "scalar") return &scalar_kernels();
  if (name == "avx2") return avx2_kernels();
  if (name == "neon") return neon_kernels();
  return nullptr;
}

const KernelTable* initial_choice() {
  if (const char* env = std::getenv("RGG_SIMD"); env && *env) {
    if (const KernelTable* t = by_name(env)) return t;
    // an unusable request falls back silently to scalar so results stay reproducible
    return &scalar_kernels();
  }
  if (const KernelTable* t = avx2_kernels()) return t;
  if (const KernelTable* t = neon_kernels()) return t;
  return &scalar_kernels();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> cur{initial_choice()};
  return cur;
}

}  // namespace

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

void select(const std::string& name) {
  const KernelTable* t = by_name(name);
  if (!t) throw ValidationError("simd: kernel set '" + name + "' is not available");
  current().store(t, std::memory_order_release);
}

}  // namespace rgg::simd
