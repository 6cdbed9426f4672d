#pragma once

#include <cstddef>
#include <cstdint>

namespace groupoidal::kern {

// Word-array kernels behind the dense relation type. A relation is n rows of
// `stride` 64-bit words; the bulk set algebra runs over the flat array and
// compose gathers rows of the right factor. All backends must agree bit for
// bit — the equivalence suite checks scalar against whatever else compiled in.
//
// `compose` writes out[i] = union of rhs rows j over the set bits j of lhs
// row i. `out` must not alias lhs or rhs. Padding bits past column n are
// assumed zero and are preserved.
struct Backend {
  const char* name;
  void (*bit_or)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
  void (*bit_and)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
  void (*bit_andnot)(std::uint64_t* dst, const std::uint64_t* src, std::size_t nwords);
  bool (*equal)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
  bool (*subset)(const std::uint64_t* a, const std::uint64_t* b, std::size_t nwords);
  bool (*any)(const std::uint64_t* a, std::size_t nwords);
  std::size_t (*count)(const std::uint64_t* a, std::size_t nwords);
  void (*compose)(std::uint64_t* out, const std::uint64_t* lhs, const std::uint64_t* rhs,
                  std::size_t n, std::size_t stride);
};

const Backend& scalar_backend();
const Backend* avx2_backend();  // nullptr off x86-64 or when the CPU lacks AVX2
const Backend* neon_backend();  // nullptr off AArch64

// Best available backend, selected once at startup. GROUPOIDAL_KERNEL=scalar
// (or avx2/neon) forces a choice when that backend is usable.
const Backend& active();

namespace detail {
const Backend* avx2_table();
const Backend* neon_table();
}  // namespace detail

}  // namespace groupoidal::kern
