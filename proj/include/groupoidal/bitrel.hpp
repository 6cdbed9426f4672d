#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace groupoidal {

// Dense bit matrix over {1..n}×{1..n}: the common currency for pair-sets.
// Rows are stride() words; bits past column n stay zero. Indices are 1-based
// to match matrix-unit notation.
class BitRel {
 public:
  BitRel() = default;
  explicit BitRel(int n);

  static BitRel identity(int n);
  static BitRel full(int n);
  static BitRel from_pairs(int n, std::span<const std::pair<int, int>> pairs);

  int size() const { return n_; }
  std::size_t stride() const { return stride_; }

  bool test(int i, int j) const;
  void set(int i, int j);
  void reset(int i, int j);

  bool empty() const;
  std::size_t count() const;
  bool subset_of(const BitRel& other) const;
  bool operator==(const BitRel& other) const;

  BitRel& operator|=(const BitRel& other);
  BitRel& operator&=(const BitRel& other);
  BitRel& remove(const BitRel& other);  // set difference

  BitRel transposed() const;
  void close_reflexive();
  void close_transitive();  // Warshall over bit rows
  bool is_reflexive() const;
  bool is_transitive() const;

  std::vector<std::pair<int, int>> pairs() const;  // row-major, 1-based
  std::size_t hash() const;

  const std::uint64_t* row(int i) const { return bits_.data() + std::size_t(i - 1) * stride_; }

  friend BitRel compose(const BitRel& lhs, const BitRel& rhs);

 private:
  int n_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;

  std::uint64_t* mrow(int i) { return bits_.data() + std::size_t(i - 1) * stride_; }
  void check_range(int i, int j) const;
};

// Relational composition { (i,k) : exists j with (i,j) in lhs, (j,k) in rhs }.
BitRel compose(const BitRel& lhs, const BitRel& rhs);

struct BitRelHash {
  std::size_t operator()(const BitRel& r) const { return r.hash(); }
};

}  // namespace groupoidal
