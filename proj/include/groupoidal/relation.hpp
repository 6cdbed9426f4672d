#pragma once

#include <optional>
#include <span>
#include <vector>

#include "groupoidal/bitrel.hpp"

namespace groupoidal {

// Reflexive transitive pair-set on {1..n}: the support set of a digraph
// algebra. Construction validates or establishes both closure properties,
// so every instance is a legal support.
class SupportRelation {
 public:
  // Smallest support containing `seed` (reflexive-transitive closure).
  static SupportRelation closure_of(BitRel seed, int max_n = 0);
  // Validates that `rel` is already reflexive and transitive.
  static SupportRelation from_closed(BitRel rel, int max_n = 0);
  static SupportRelation upper_triangular(int n);  // T_n
  static SupportRelation full_matrix(int n);       // M_n

  int n() const { return rel_.size(); }
  const BitRel& pair_set() const { return rel_; }
  bool operator==(const SupportRelation& o) const { return rel_ == o.rel_; }

 private:
  explicit SupportRelation(BitRel rel) : rel_(std::move(rel)) {}
  BitRel rel_;
};

// Subset of a support closed under two-sided absorption: the support of a
// two-sided ideal of the digraph algebra.
class IdealSet {
 public:
  static IdealSet closed(SupportRelation parent, BitRel set);

  const SupportRelation& parent() const { return parent_; }
  const BitRel& pair_set() const { return set_; }
  bool operator==(const IdealSet& o) const {
    return parent_ == o.parent_ && set_ == o.set_;
  }

 private:
  IdealSet(SupportRelation parent, BitRel set)
      : parent_(std::move(parent)), set_(std::move(set)) {}
  SupportRelation parent_;
  BitRel set_;
};

// Diagonal support of an invariant projection p = sum of e_ii over members.
struct ProjectionSet {
  int n = 0;
  std::vector<int> members;  // sorted ascending

  bool operator==(const ProjectionSet& o) const {
    return n == o.n && members == o.members;
  }
  bool operator<(const ProjectionSet& o) const {
    if (members.size() != o.members.size()) return members.size() < o.members.size();
    return members < o.members;
  }
};

SupportRelation reflexive_transitive_closure(const BitRel& pairs, int max_n = 0);

// Smallest ideal set of P containing seed. Validation error if seed is not
// contained in P.
IdealSet ideal_closure(const SupportRelation& P, const BitRel& seed);

bool is_ideal_set(const SupportRelation& P, const BitRel& f);

// All ideal sets of P, deduplicated, sorted by (size, lexicographic pair
// list). Exponential; guarded by `bound` (default: config / env override).
std::vector<IdealSet> enumerate_ideals(const SupportRelation& P,
                                       std::optional<int> bound = std::nullopt);

// Support of the full-sum generator g = sum of e_ij over F.
BitRel full_sum_generator(const IdealSet& F);

// Minimal generating set: pairs of F at the corner of their L-block. A pair
// (i,k) is a corner iff no j != i has (i,j) in P and (j,k) in F, and no
// j != k has (i,j) in F and (j,k) in P.
BitRel corner_generator(const SupportRelation& P, const IdealSet& F);

// Ideal generated by the element supported on g; the principality oracle
// (generated_support(P, g) == F witnesses that g generates F).
IdealSet generated_support(const SupportRelation& P, const BitRel& g);

bool projection_invariant(const SupportRelation& P, std::span<const int> members);

// All invariant projections of A(P): the subsets closed under P-predecessors.
// Closed under union and intersection.
std::vector<ProjectionSet> invariant_projections(const SupportRelation& P);

}  // namespace groupoidal
