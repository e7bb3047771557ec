#include "dyson/simd/kernels.hpp"

namespace dyson::simd::detail {
namespace {

void axpy_scalar(std::int64_t s, std::span<const std::int64_t> x,
                 std::span<std::int64_t> y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += s * x[i];
}

void convolve_acc_scalar(std::span<const std::int64_t> a,
                         std::span<const std::int64_t> b,
                         std::span<std::int64_t> out) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    axpy_scalar(a[i], b, out.subspan(i));
  }
}

} // namespace

const KernelTable scalar_table{Isa::scalar, &axpy_scalar, &convolve_acc_scalar};

} // namespace dyson::simd::detail
