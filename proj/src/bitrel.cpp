#include "groupoidal/bitrel.hpp"

#include <string>

#include "groupoidal/error.hpp"
#include "groupoidal/kernels.hpp"

namespace groupoidal {

namespace {
const kern::Backend& K() { return kern::active(); }
}  // namespace

BitRel::BitRel(int n) {
  if (n < 0) fail_validation("relation size must be nonnegative");
  n_ = n;
  stride_ = std::size_t(n + 63) / 64;
  bits_.assign(std::size_t(n) * stride_, 0);
}

BitRel BitRel::identity(int n) {
  BitRel r(n);
  for (int i = 1; i <= n; ++i) r.set(i, i);
  return r;
}

BitRel BitRel::full(int n) {
  BitRel r(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) r.set(i, j);
  return r;
}

BitRel BitRel::from_pairs(int n, std::span<const std::pair<int, int>> pairs) {
  BitRel r(n);
  for (auto [i, j] : pairs) r.set(i, j);
  return r;
}

void BitRel::check_range(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    fail_validation("pair (" + std::to_string(i) + "," + std::to_string(j) +
                    ") out of range for n=" + std::to_string(n_));
}

bool BitRel::test(int i, int j) const {
  check_range(i, j);
  return (row(i)[std::size_t(j - 1) / 64] >> ((j - 1) % 64)) & 1u;
}

void BitRel::set(int i, int j) {
  check_range(i, j);
  mrow(i)[std::size_t(j - 1) / 64] |= std::uint64_t{1} << ((j - 1) % 64);
}

void BitRel::reset(int i, int j) {
  check_range(i, j);
  mrow(i)[std::size_t(j - 1) / 64] &= ~(std::uint64_t{1} << ((j - 1) % 64));
}

bool BitRel::empty() const { return !K().any(bits_.data(), bits_.size()); }

std::size_t BitRel::count() const { return K().count(bits_.data(), bits_.size()); }

bool BitRel::subset_of(const BitRel& other) const {
  if (n_ != other.n_) fail_validation("size mismatch in pair-set comparison");
  return K().subset(bits_.data(), other.bits_.data(), bits_.size());
}

bool BitRel::operator==(const BitRel& other) const {
  if (n_ != other.n_) return false;
  return K().equal(bits_.data(), other.bits_.data(), bits_.size());
}

BitRel& BitRel::operator|=(const BitRel& other) {
  if (n_ != other.n_) fail_validation("size mismatch in pair-set union");
  K().bit_or(bits_.data(), other.bits_.data(), bits_.size());
  return *this;
}

BitRel& BitRel::operator&=(const BitRel& other) {
  if (n_ != other.n_) fail_validation("size mismatch in pair-set intersection");
  K().bit_and(bits_.data(), other.bits_.data(), bits_.size());
  return *this;
}

BitRel& BitRel::remove(const BitRel& other) {
  if (n_ != other.n_) fail_validation("size mismatch in pair-set difference");
  K().bit_andnot(bits_.data(), other.bits_.data(), bits_.size());
  return *this;
}

BitRel BitRel::transposed() const {
  BitRel r(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (test(i, j)) r.set(j, i);
  return r;
}

void BitRel::close_reflexive() {
  for (int i = 1; i <= n_; ++i) set(i, i);
}

void BitRel::close_transitive() {
  for (int k = 1; k <= n_; ++k) {
    const std::uint64_t* krow = row(k);
    for (int i = 1; i <= n_; ++i) {
      if (test(i, k)) K().bit_or(mrow(i), krow, stride_);
    }
  }
}

bool BitRel::is_reflexive() const {
  for (int i = 1; i <= n_; ++i)
    if (!test(i, i)) return false;
  return true;
}

bool BitRel::is_transitive() const {
  if (n_ == 0) return true;
  return compose(*this, *this).subset_of(*this);
}

std::vector<std::pair<int, int>> BitRel::pairs() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(count());
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (test(i, j)) out.emplace_back(i, j);
  return out;
}

std::size_t BitRel::hash() const {
  // FNV-1a over the words, seeded with n
  std::size_t h = 1469598103934665603ull ^ std::size_t(n_);
  for (std::uint64_t w : bits_) {
    h ^= std::size_t(w);
    h *= 1099511628211ull;
  }
  return h;
}

BitRel compose(const BitRel& lhs, const BitRel& rhs) {
  if (lhs.n_ != rhs.n_) fail_validation("size mismatch in relational composition");
  BitRel out(lhs.n_);
  if (lhs.n_ == 0) return out;
  K().compose(out.bits_.data(), lhs.bits_.data(), rhs.bits_.data(),
              std::size_t(lhs.n_), lhs.stride_);
  return out;
}

}  // namespace groupoidal
