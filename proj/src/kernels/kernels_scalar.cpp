#include "semichar/kernels.hpp"

namespace semichar::kernels::scalar {

std::size_t count_contained(std::span<const ElementMask> sets, const ElementMask& container) {
  std::size_t n = 0;
  for (const auto& s : sets) {
    if (s.is_subset_of(container)) ++n;
  }
  return n;
}

void contained_flags(std::span<const ElementMask> sets, const ElementMask& container,
                     std::span<std::uint8_t> out) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    out[i] = sets[i].is_subset_of(container) ? 1 : 0;
  }
}

std::size_t count_common_fixed_points(std::span<const std::uint32_t* const> perms,
                                      std::size_t n) {
  std::size_t fixed = 0;
  for (std::size_t x = 0; x < n; ++x) {
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

}  // namespace semichar::kernels::scalar
