#include "dyson/simd/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace dyson::simd {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    case Isa::neon: return "neon";
  }
  return "unknown";
}

std::optional<Isa> parse_isa(std::string_view name) {
  if (name == "scalar") return Isa::scalar;
  if (name == "avx2") return Isa::avx2;
  if (name == "neon") return Isa::neon;
  return std::nullopt;
}

bool isa_supported(Isa isa) {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(DYSON_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(DYSON_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable& kernels_for(Isa isa) {
  if (!isa_supported(isa))
    throw std::invalid_argument("kernel variant not available: " +
                                std::string(isa_name(isa)));
  switch (isa) {
#if defined(DYSON_HAVE_AVX2)
    case Isa::avx2: return detail::avx2_table;
#endif
#if defined(DYSON_HAVE_NEON)
    case Isa::neon: return detail::neon_table;
#endif
    default: return detail::scalar_table;
  }
}

namespace {

const KernelTable* pick_default() {
  if (const char* env = std::getenv("DYSON_KERNEL")) {
    auto isa = parse_isa(env);
    if (isa && isa_supported(*isa)) return &kernels_for(*isa);
  }
  for (Isa isa : {Isa::avx2, Isa::neon})
    if (isa_supported(isa)) return &kernels_for(isa);
  return &detail::scalar_table;
}

std::atomic<const KernelTable*>& active_slot() {
  static std::atomic<const KernelTable*> slot{pick_default()};
  return slot;
}

} // namespace

const KernelTable& active_kernels() {
  return *active_slot().load(std::memory_order_acquire);
}

void set_active_isa(Isa isa) {
  active_slot().store(&kernels_for(isa), std::memory_order_release);
}

} // namespace dyson::simd
