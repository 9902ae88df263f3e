#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "semichar/kernels.hpp"

namespace semichar::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) && defined(SEMICHAR_HAVE_AVX2)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

Backend initial_backend() {
  if (const char* env = std::getenv("SEMICHAR_KERNELS")) {
    const std::string v(env);
    if (v == "scalar") return Backend::kScalar;
    if (v == "avx2" && cpu_has_avx2()) return Backend::kAvx2;
  }
  return cpu_has_avx2() ? Backend::kAvx2 : Backend::kScalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> b{initial_backend()};
  return b;
}

}  // namespace

std::string_view backend_name(Backend b) {
  return b == Backend::kAvx2 ? "avx2" : "scalar";
}

bool backend_supported(Backend b) {
  return b == Backend::kScalar || cpu_has_avx2();
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void select_backend(Backend b) {
  if (!backend_supported(b)) {
    throw std::invalid_argument("kernel backend not supported on this CPU: " +
                                std::string(backend_name(b)));
  }
  current().store(b, std::memory_order_relaxed);
}

std::size_t count_contained(std::span<const ElementMask> sets, const ElementMask& container) {
  return active_backend() == Backend::kAvx2 ? avx2::count_contained(sets, container)
                                            : scalar::count_contained(sets, container);
}

void contained_flags(std::span<const ElementMask> sets, const ElementMask& container,
                     std::span<std::uint8_t> out) {
  if (active_backend() == Backend::kAvx2) {
    avx2::contained_flags(sets, container, out);
  } else {
    scalar::contained_flags(sets, container, out);
  }
}

std::size_t count_common_fixed_points(std::span<const std::uint32_t* const> perms,
                                      std::size_t n) {
  return active_backend() == Backend::kAvx2 ? avx2::count_common_fixed_points(perms, n)
                                            : scalar::count_common_fixed_points(perms, n);
}

}  // namespace semichar::kernels
