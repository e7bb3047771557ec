#include "dyson/simd/kernels.hpp"

#include <arm_neon.h>

namespace dyson::simd::detail {
namespace {

void axpy_neon(std::int64_t s, std::span<const std::int64_t> x,
               std::span<std::int64_t> y) {
  const std::size_t n = x.size();
  const int32x2_t sv = vdup_n_s32(static_cast<std::int32_t>(s));
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    int32x2_t xn = vmovn_s64(vld1q_s64(x.data() + i));
    int64x2_t yv = vld1q_s64(y.data() + i);
    vst1q_s64(y.data() + i, vaddq_s64(yv, vmull_s32(xn, sv)));
  }
  for (; i < n; ++i) y[i] += s * x[i];
}

void convolve_acc_neon(std::span<const std::int64_t> a,
                       std::span<const std::int64_t> b,
                       std::span<std::int64_t> out) {
  if (a.size() > b.size()) std::swap(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    axpy_neon(a[i], b, out.subspan(i));
  }
}

} // namespace

const KernelTable neon_table{Isa::neon, &axpy_neon, &convolve_acc_neon};

} // namespace dyson::simd::detail
