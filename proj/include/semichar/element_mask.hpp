#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace semichar {

/// Index of a group element in its Cayley table. Identity is always 0.
using Element = std::uint16_t;

/// Largest group order representable. |S x S| for |S| <= 16 fits exactly.
inline constexpr std::size_t kMaxOrder = 256;

/// Fixed-width bitset over group elements. One AVX2 register wide.
struct alignas(32) ElementMask {
  std::array<std::uint64_t, 4> words{};

  static ElementMask single(Element e) {
    ElementMask m;
    m.set(e);
    return m;
  }

  void set(Element e) { words[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void reset(Element e) { words[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }
  bool test(Element e) const { return (words[e >> 6] >> (e & 63)) & 1U; }

  std::size_t count() const {
    return std::popcount(words[0]) + std::popcount(words[1]) +
           std::popcount(words[2]) + std::popcount(words[3]);
  }

  bool empty() const { return (words[0] | words[1] | words[2] | words[3]) == 0; }

  bool is_subset_of(const ElementMask& other) const {
    for (std::size_t i = 0; i < 4; ++i) {
      if (words[i] & ~other.words[i]) return false;
    }
    return true;
  }

  ElementMask operator&(const ElementMask& o) const {
    ElementMask r;
    for (std::size_t i = 0; i < 4; ++i) r.words[i] = words[i] & o.words[i];
    return r;
  }

  ElementMask operator|(const ElementMask& o) const {
    ElementMask r;
    for (std::size_t i = 0; i < 4; ++i) r.words[i] = words[i] | o.words[i];
    return r;
  }

  /// Ascending list of the set elements.
  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(count());
    for (std::size_t w = 0; w < 4; ++w) {
      std::uint64_t bits = words[w];
      while (bits) {
        const int b = std::countr_zero(bits);
        out.push_back(static_cast<Element>(w * 64 + b));
        bits &= bits - 1;
      }
    }
    return out;
  }

  friend bool operator==(const ElementMask&, const ElementMask&) = default;
};

struct ElementMaskHash {
  std::size_t operator()(const ElementMask& m) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : m.words) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace semichar
