#include <bit>

#include "groupoidal/kernels.hpp"

namespace groupoidal::kern {
namespace {

void s_or(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] |= src[i];
}

void s_and(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= src[i];
}

void s_andnot(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) dst[i] &= ~src[i];
}

bool s_equal(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc |= a[i] ^ b[i];
  return acc == 0;
}

bool s_subset(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc |= a[i] & ~b[i];
  return acc == 0;
}

bool s_any(const std::uint64_t* a, std::size_t n) {
  std::uint64_t acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc |= a[i];
  return acc != 0;
}

std::size_t s_count(const std::uint64_t* a, std::size_t n) {
  std::size_t c = 0;
  for (std::size_t i = 0; i < n; ++i) c += std::popcount(a[i]);
  return c;
}

void s_compose(std::uint64_t* out, const std::uint64_t* lhs, const std::uint64_t* rhs,
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
        s_or(orow, rhs + j * stride, stride);
      }
    }
  }
}

constexpr Backend kScalar = {
    "scalar", s_or, s_and, s_andnot, s_equal, s_subset, s_any, s_count, s_compose,
};

}  // namespace

const Backend& scalar_backend() { return kScalar; }

}  // namespace groupoidal::kern
