// NEON variants of the bit kernels (AArch64 only).

#if defined(__aarch64__) && defined(__ARM_NEON)

#include <arm_neon.h>

#include <bit>

#include "groupoidal/kernels.hpp"

namespace groupoidal::kern {
namespace {

void n_or(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  }
  for (; i < n; ++i) dst[i] |= src[i];
}

void n_and(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_u64(dst + i, vandq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  }
  for (; i < n; ++i) dst[i] &= src[i];
}

void n_andnot(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    // vbicq computes dst & ~src
    vst1q_u64(dst + i, vbicq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  }
  for (; i < n; ++i) dst[i] &= ~src[i];
}

std::uint64_t reduce_or(uint64x2_t v) {
  return vgetq_lane_u64(v, 0) | vgetq_lane_u64(v, 1);
}

bool n_equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vorrq_u64(acc, veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  }
  std::uint64_t tail = 0;
  for (; i < n; ++i) tail |= a[i] ^ b[i];
  return (reduce_or(acc) | tail) == 0;
}

bool n_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vorrq_u64(acc, vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  }
  std::uint64_t tail = 0;
  for (; i < n; ++i) tail |= a[i] & ~b[i];
  return (reduce_or(acc) | tail) == 0;
}

bool n_any(const std::uint64_t* a, std::size_t n) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) acc = vorrq_u64(acc, vld1q_u64(a + i));
  std::uint64_t tail = 0;
  for (; i < n; ++i) tail |= a[i];
  return (reduce_or(acc) | tail) != 0;
}

std::size_t n_count(const std::uint64_t* a, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i]);
  return c;
}

void n_compose(std::uint64_t* out, const std::uint64_t* lhs, const std::uint64_t* rhs,
               std::size_t n, std::size_t stride) {
  for (std::size_t i = 0; i < n * stride; ++i) out[i] = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const std::uint64_t* lrow = lhs + i * stride;
    std::uint64_t* orow = out + i * stride;
    for (std::size_t w = 0; w < stride; ++w) {
      std::uint64_t bits = lrow[w];
      while (bits) {
        std::size_t j = w * 64 + static_cast<std::size_t>(std::countr_zero(bits));
        bits &= bits - 1;
        n_or(orow, rhs + j * stride, stride);
      }
    }
  }
}

constexpr Backend kNeon = {
    "neon", n_or, n_and, n_andnot, n_equal, n_subset, n_any, n_count, n_compose,
};

}  // namespace

const Backend* detail::neon_table() { return &kNeon; }

}  // namespace groupoidal::kern

#endif  // AArch64
