// Compiled with -mavx2 -mpopcnt; only reached after a CPUID check.

#include "semichar/kernels.hpp"

#if defined(__x86_64__) && defined(__AVX2__)
#include <immintrin.h>

#include <bit>

namespace semichar::kernels::avx2 {

namespace {
inline bool subset(const ElementMask& s, __m256i c) {
  const __m256i v = _mm256_load_si256(reinterpret_cast<const __m256i*>(s.words.data()));
  // testc(c, v) == 1 iff (~c & v) == 0
  return _mm256_testc_si256(c, v) != 0;
}
}  // namespace

std::size_t count_contained(std::span<const ElementMask> sets, const ElementMask& container) {
  const __m256i c = _mm256_load_si256(reinterpret_cast<const __m256i*>(container.words.data()));
  std::size_t n = 0;
  for (const auto& s : sets) n += subset(s, c) ? 1 : 0;
  return n;
}

void contained_flags(std::span<const ElementMask> sets, const ElementMask& container,
                     std::span<std::uint8_t> out) {
  const __m256i c = _mm256_load_si256(reinterpret_cast<const __m256i*>(container.words.data()));
  for (std::size_t i = 0; i < sets.size(); ++i) out[i] = subset(sets[i], c) ? 1 : 0;
}

std::size_t count_common_fixed_points(std::span<const std::uint32_t* const> perms,
                                      std::size_t n) {
  std::size_t fixed = 0;
  std::size_t x = 0;
  const __m256i step = _mm256_set1_epi32(8);
  __m256i ids = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
  for (; x + 8 <= n; x += 8) {
    __m256i acc = _mm256_set1_epi32(-1);
    for (const auto* p : perms) {
      const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p + x));
      acc = _mm256_and_si256(acc, _mm256_cmpeq_epi32(v, ids));
    }
    const int bits = _mm256_movemask_ps(_mm256_castsi256_ps(acc));
    fixed += static_cast<std::size_t>(std::popcount(static_cast<unsigned>(bits)));
    ids = _mm256_add_epi32(ids, step);
  }
  for (; x < n; ++x) {
    bool all = true;
    for (const auto* p : perms) {
      if (p[x] != x) {
        all = false;
        break;
      }
    }
    if (all) ++fixed;
  }
  return fixed;
}

}  // namespace semichar::kernels::avx2

#else

// Non-x86 build: the AVX2 entry points forward to scalar and are never
// selected because backend_supported(kAvx2) is false.
namespace semichar::kernels::avx2 {
std::size_t count_contained(std::span<const ElementMask> sets, const ElementMask& container) {
  return scalar::count_contained(sets, container);
}
void contained_flags(std::span<const ElementMask> sets, const ElementMask& container,
                     std::span<std::uint8_t> out) {
  scalar::contained_flags(sets, container, out);
}
std::size_t count_common_fixed_points(std::span<const std::uint32_t* const> perms,
                                      std::size_t n) {
  return scalar::count_common_fixed_points(perms, n);
}
}  // namespace semichar::kernels::avx2

#endif
