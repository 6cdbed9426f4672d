// AVX2 variants of the bit kernels. This translation unit is compiled with
// -mavx2 and must only be reached after a runtime cpuid check (kernels.cpp).

#if defined(__x86_64__) || defined(_M_X64)

#include <immintrin.h>

#include <bit>

#include "groupoidal/kernels.hpp"

namespace groupoidal::kern {
namespace {

void v_or(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_or_si256(a, b));
  }
  for (; i < n; ++i) dst[i] |= src[i];
}

void v_and(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(a, b));
  }
  for (; i < n; ++i) dst[i] &= src[i];
}

void v_andnot(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<__m256i*>(dst + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    // andnot computes ~b & a
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_andnot_si256(b, a));
  }
  for (; i < n; ++i) dst[i] &= ~src[i];
}

bool v_equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_or_si256(acc, _mm256_xor_si256(x, y));
  }
  std::uint64_t tail = 0;
  for (; i < n; ++i) tail |= a[i] ^ b[i];
  return _mm256_testz_si256(acc, acc) && tail == 0;
}

bool v_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i y = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_or_si256(acc, _mm256_andnot_si256(y, x));
  }
  std::uint64_t tail = 0;
  for (; i < n; ++i) tail |= a[i] & ~b[i];
  return _mm256_testz_si256(acc, acc) && tail == 0;
}

bool v_any(const std::uint64_t* a, std::size_t n) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
  }
  std::uint64_t tail = 0;
  for (; i < n; ++i) tail |= a[i];
  return !_mm256_testz_si256(acc, acc) || tail != 0;
}

std::size_t v_count(const std::uint64_t* a, std::size_t n) {
  std::size_t c = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    c += static_cast<std::size_t>(_mm_popcnt_u64(a[i])) +
         static_cast<std::size_t>(_mm_popcnt_u64(a[i + 1])) +
         static_cast<std::size_t>(_mm_popcnt_u64(a[i + 2])) +
         static_cast<std::size_t>(_mm_popcnt_u64(a[i + 3]));
  }
  for (; i < n; ++i) c += std::popcount(a[i]);
  return c;
}

void v_compose(std::uint64_t* out, const std::uint64_t* lhs, const std::uint64_t* rhs,
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
        v_or(orow, rhs + j * stride, stride);
      }
    }
  }
}

constexpr Backend kAvx2 = {
    "avx2", v_or, v_and, v_andnot, v_equal, v_subset, v_any, v_count, v_compose,
};

}  // namespace

const Backend* detail::avx2_table() { return &kAvx2; }

}  // namespace groupoidal::kern

#endif  // x86-64
