#pragma once

// Data-parallel inner loops used by the mark and fixed-point computations.
// Every kernel has a scalar reference version and an AVX2 version; the
// active one is picked at first use from CPUID and can be overridden with
// SEMICHAR_KERNELS=scalar|avx2 or select_backend().

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

#include "semichar/element_mask.hpp"

namespace semichar::kernels {

enum class Backend { kScalar, kAvx2 };

std::string_view backend_name(Backend b);
bool backend_supported(Backend b);
Backend active_backend();
/// Throws std::invalid_argument when the CPU lacks the requested extension.
void select_backend(Backend b);

/// Number of masks in `sets` that are subsets of `container`.
std::size_t count_contained(std::span<const ElementMask> sets,
                            const ElementMask& container);

/// out[i] = 1 if sets[i] is a subset of container, else 0. out.size() == sets.size().
void contained_flags(std::span<const ElementMask> sets, const ElementMask& container,
                     std::span<std::uint8_t> out);

/// Number of points x in [0, n) with perm[x] == x for every permutation.
/// Each permutation is a contiguous array of n point indices.
std::size_t count_common_fixed_points(std::span<const std::uint32_t* const> perms,
                                      std::size_t n);

namespace scalar {
std::size_t count_contained(std::span<const ElementMask> sets, const ElementMask& container);
void contained_flags(std::span<const ElementMask> sets, const ElementMask& container,
                     std::span<std::uint8_t> out);
std::size_t count_common_fixed_points(std::span<const std::uint32_t* const> perms,
                                      std::size_t n);
}  // namespace scalar

namespace avx2 {
std::size_t count_contained(std::span<const ElementMask> sets, const ElementMask& container);
void contained_flags(std::span<const ElementMask> sets, const ElementMask& container,
                     std::span<std::uint8_t> out);
std::size_t count_common_fixed_points(std::span<const std::uint32_t* const> perms,
                                      std::size_t n);
}  // namespace avx2

}  // namespace semichar::kernels
