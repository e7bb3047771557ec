#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dyson/qpoly.hpp"
#include "dyson/simd/kernels.hpp"
#include "test_util.hpp"

#include <random>
#include <vector>

using namespace dyson;

namespace {

std::vector<simd::Isa> supported() {
  std::vector<simd::Isa> out;
  for (auto isa : {simd::Isa::scalar, simd::Isa::avx2, simd::Isa::neon})
    if (simd::isa_supported(isa)) out.push_back(isa);
  return out;
}

std::vector<std::int64_t> random_vec(std::mt19937_64& rng, std::size_t n, std::int64_t lim) {
  std::uniform_int_distribution<std::int64_t> d(-lim, lim);
  std::vector<std::int64_t> v(n);
  for (auto& x : v) x = d(rng);
  return v;
}

} // namespace

TEST_CASE("dispatch") {
  CHECK(simd::isa_supported(simd::Isa::scalar));
  CHECK(simd::kernels_for(simd::Isa::scalar).isa == simd::Isa::scalar);
  CHECK(simd::parse_isa("avx2") == simd::Isa::avx2);
  CHECK_FALSE(simd::parse_isa("sse9"));
  for (auto isa : {simd::Isa::avx2, simd::Isa::neon})
    if (!simd::isa_supported(isa)) CHECK_THROWS_AS(simd::kernels_for(isa), std::invalid_argument);
  MESSAGE("active kernel: " << simd::isa_name(simd::active_kernels().isa));
}

TEST_CASE("axpy variants agree with scalar on every length and tail") {
  std::mt19937_64 rng(11);
  const auto& ref = simd::kernels_for(simd::Isa::scalar);
  for (auto isa : supported()) {
    const auto& k = simd::kernels_for(isa);
    for (std::size_t n = 0; n <= 37; ++n) {
      auto x = random_vec(rng, n, INT32_MAX);
      auto y0 = random_vec(rng, n + 3, 1'000'000);
      auto y1 = y0;
      const std::int64_t s = random_vec(rng, 1, INT32_MAX)[0];
      ref.axpy(s, x, y0);
      k.axpy(s, x, y1);
      CHECK(y0 == y1);
    }
  }
}

TEST_CASE("convolution variants agree with scalar, including int32 extremes") {
  std::mt19937_64 rng(12);
  const auto& ref = simd::kernels_for(simd::Isa::scalar);
  for (auto isa : supported()) {
    const auto& k = simd::kernels_for(isa);
    for (int trial = 0; trial < 200; ++trial) {
      std::size_t na = 1 + rng() % 40, nb = 1 + rng() % 40;
      auto a = random_vec(rng, na, 1000);
      auto b = random_vec(rng, nb, 1000);
      std::vector<std::int64_t> o0(na + nb - 1, 0), o1 = o0;
      ref.convolve_acc(a, b, o0);
      k.convolve_acc(a, b, o1);
      CHECK(o0 == o1);
    }
    std::vector<std::int64_t> a{INT32_MIN, INT32_MAX, -1}, b{INT32_MIN, 1};
    std::vector<std::int64_t> o0(4, 0), o1 = o0;
    ref.convolve_acc(a, b, o0);
    k.convolve_acc(a, b, o1);
    CHECK(o0 == o1);
    CHECK(o0[0] == std::int64_t{INT32_MIN} * INT32_MIN);
  }
}

TEST_CASE("qpoly product: kernel path equals big-integer reference") {
  std::mt19937_64 rng(13);
  for (auto isa : supported()) {
    simd::set_active_isa(isa);
    for (int trial = 0; trial < 200; ++trial) {
      // Mix of small (kernel path) and huge (fallback path) coefficients.
      const long lim = trial % 3 == 0 ? 2'000'000'000L : 1000L;
      QPoly p = testutil::random_qpoly(rng, 30, lim);
      QPoly r = testutil::random_qpoly(rng, 30, lim);
      CHECK(p * r == mul_reference(p, r));
    }
    QPoly big(std::vector<BigInt>{BigInt("123456789012345678901234567890"), 1});
    CHECK(big * QPoly{1, 1} == mul_reference(big, QPoly{1, 1}));
  }
  simd::set_active_isa(simd::Isa::scalar);
}
