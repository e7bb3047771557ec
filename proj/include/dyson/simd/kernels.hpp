#ifndef DYSON_SIMD_KERNELS_HPP
#define DYSON_SIMD_KERNELS_HPP

// Dense integer polynomial kernels used on the fast path of QPoly
// multiplication. Every variant computes bit-identical results; the scalar
// one is the reference the others are tested against.
//
// Contract shared by all variants:
//   - every input value lies in the int32 range (stored widened to int64),
//   - the caller guarantees no int64 overflow in the accumulated result.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace dyson::simd {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa);
std::optional<Isa> parse_isa(std::string_view name);

struct KernelTable {
  Isa isa;
  /// y[i] += s * x[i] for i < x.size(); requires y.size() >= x.size().
  void (*axpy)(std::int64_t s, std::span<const std::int64_t> x,
               std::span<std::int64_t> y);
  /// out[i + j] += a[i] * b[j]; requires out.size() >= a.size() + b.size() - 1.
  void (*convolve_acc)(std::span<const std::int64_t> a,
                       std::span<const std::int64_t> b,
                       std::span<std::int64_t> out);
};

/// True if the variant was compiled in and the running CPU supports it.
bool isa_supported(Isa isa);

/// Throws std::invalid_argument for an unsupported ISA.
const KernelTable& kernels_for(Isa isa);

/// Best supported variant, unless overridden through DYSON_KERNEL
/// (scalar|avx2|neon) or set_active_isa().
const KernelTable& active_kernels();

void set_active_isa(Isa isa);

namespace detail {
extern const KernelTable scalar_table;
#if defined(DYSON_HAVE_AVX2)
extern const KernelTable avx2_table;
#endif
#if defined(DYSON_HAVE_NEON)
extern const KernelTable neon_table;
#endif
} // namespace detail

} // namespace dyson::simd

#endif // DYSON_SIMD_KERNELS_HPP
