#pragma once

#include <vector>

#include "groupoidal/bitrel.hpp"
#include "groupoidal/rational.hpp"
#include "groupoidal/relation.hpp"

namespace groupoidal {

// n×n matrix over exact rational complex numbers. The numeric counterpart of
// the symbolic layer: supports never suffer false zeros or nonzeros.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  explicit ExactMatrix(int n) : n_(n), e_(std::size_t(n) * std::size_t(n)) {}

  static ExactMatrix identity(int n);

  int size() const { return n_; }
  const RComplex& at(int i, int j) const { return e_[idx(i, j)]; }
  RComplex& at(int i, int j) { return e_[idx(i, j)]; }

  bool is_zero() const;
  BitRel support() const;
  ExactMatrix adjoint() const;

  friend ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b);
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);
  bool operator==(const ExactMatrix& o) const { return n_ == o.n_ && e_ == o.e_; }

 private:
  std::size_t idx(int i, int j) const;
  int n_ = 0;
  std::vector<RComplex> e_;
};

// e_ij: single 1 at (i,j).
ExactMatrix matrix_unit(int n, int i, int j);

// e_ii · A · e_jj: the single surviving entry a_ij at position (i,j).
ExactMatrix compress(int i, const ExactMatrix& A, int j);

bool in_algebra(const ExactMatrix& a, const SupportRelation& P);

// Test matrix for a pair-set: the k-th pair (row-major) gets the k-th prime
// as its entry, so no product or sum of distinct supports can cancel.
ExactMatrix generic_member(const BitRel& support);

// Support of the two-sided ideal generated by g inside A(P), computed with
// exact matrix arithmetic: alternate left and right multiplication by every
// matrix unit of P until the combined support stops growing. max_iters <= 0
// means the default n² rounds.
BitRel numeric_generated_support(const SupportRelation& P, const ExactMatrix& g,
                                 int max_iters = 0);

}  // namespace groupoidal
