// Compiled with -mavx2; only reached after a runtime CPU check.
#include "dyson/simd/kernels.hpp"

#include <immintrin.h>

namespace dyson::simd::detail {
namespace {

// _mm256_mul_epi32 multiplies the sign-extended low 32 bits of each 64-bit
// lane, which is exact because inputs are int32-ranged.
void axpy_avx2(std::int64_t s, std::span<const std::int64_t> x,
               std::span<std::int64_t> y) {
  const std::size_t n = x.size();
  const __m256i sv = _mm256_set1_epi64x(s);
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i x0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
    __m256i x1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i + 4));
    __m256i y0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    __m256i y1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i + 4));
    y0 = _mm256_add_epi64(y0, _mm256_mul_epi32(x0, sv));
    y1 = _mm256_add_epi64(y1, _mm256_mul_epi32(x1, sv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i), y0);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i + 4), y1);
  }
  for (; i + 4 <= n; i += 4) {
    __m256i x0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + i));
    __m256i y0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + i));
    y0 = _mm256_add_epi64(y0, _mm256_mul_epi32(x0, sv));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + i), y0);
  }
  for (; i < n; ++i) y[i] += s * x[i];
}

void convolve_acc_avx2(std::span<const std::int64_t> a,
                       std::span<const std::int64_t> b,
                       std::span<std::int64_t> out) {
  // Iterate over the shorter operand so the vector loop runs long.
  if (a.size() > b.size()) std::swap(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    axpy_avx2(a[i], b, out.subspan(i));
  }
}

} // namespace

const KernelTable avx2_table{Isa::avx2, &axpy_avx2, &convolve_acc_avx2};

} // namespace dyson::simd::detail
