#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "groupoidal/relation.hpp"

namespace groupoidal {

enum class EmbeddingKind { Refinement, Standard };

// One step of an embedding tower: the kind and the size ratio q = n_{k+1}/n_k.
struct EmbeddingSpec {
  EmbeddingKind kind = EmbeddingKind::Refinement;
  int multiplicity = 1;
};

// Multiplicity sequence with a kind per step. Level k carries the upper
// triangular algebra T_{n_k}; alternation towers are just mixed kind lists.
struct Tower {
  int base_size = 1;
  std::vector<EmbeddingSpec> steps;

  int num_levels() const { return static_cast<int>(steps.size()) + 1; }
  int size_at(int level) const;  // 1-based; validates level and the size guard
};

// Image of the matrix unit e_ij under one embedding step.
//   Refinement: {((i-1)q+t, (j-1)q+t) : t = 1..q}
//   Standard:   {(i+t*n, j+t*n)       : t = 0..q-1}
// Always q pairs with pairwise distinct rows and columns.
std::vector<std::pair<int, int>> embed_unit(const EmbeddingSpec& spec, int n, int i, int j);

// Reflexive-transitive closure of the embedded image of P plus the diagonal
// at size n*q.
SupportRelation lift_support(const EmbeddingSpec& spec, const SupportRelation& P);

// Ideal of P_next generated by the embedded image of F. P_next must contain
// lift_support(spec, P).
IdealSet lift_ideal(const EmbeddingSpec& spec, const SupportRelation& P, const IdealSet& F,
                    const SupportRelation& P_next);

// Composite image of a level `from` unit at level `to` of the tower.
BitRel unit_image(const Tower& tower, int from_level, int to_level, int i, int j);

// Composite image of a diagonal index under the tower's diagonal maps.
std::vector<int> diagonal_image(const Tower& tower, int from_level, int to_level, int member);

// Lift an ideal of T_{n_from} through the tower's T-levels up to `to_level`.
IdealSet lift_level_ideal(const Tower& tower, int from_level, int to_level, const IdealSet& F);

// Pullback of an ideal living at `ideal_level` down to `to_level`: a unit is
// pulled back iff every pair of its embedded image lies in the ideal.
IdealSet pullback_level_ideal(const Tower& tower, int ideal_level, int to_level,
                              const IdealSet& ideal);

// Finite-depth rendering of ideal inductivity: the ideal equals the closure
// of the union of the lifted pullbacks from every level up to `depth` (the
// ideal's own level participates).
bool inductivity_check(const Tower& tower, const IdealSet& top_ideal, int depth);

// For each level k <= depth, the invariant projections of T_{n_k} whose
// embedded images stay invariant at every level up to depth.
std::vector<std::vector<ProjectionSet>> persistent_projections(const Tower& tower, int depth);

// True iff P is a total order: P ∪ Pᵀ is full and P ∩ Pᵀ is the diagonal.
bool is_strongly_maximal_level(const SupportRelation& P);

// Seeded hunt for a standard-embedding tower of digraph algebras where
// lift-then-intersect strictly enlarges a level ideal. The level-2 support is
// a random augmentation of T_{nq} containing the embedded image.
struct EnlargementWitness {
  int base_n = 0;
  int multiplicity = 0;
  std::vector<std::pair<int, int>> extra_pairs;  // off-triangular seeds for P_next
  SupportRelation next_support;
  IdealSet level_ideal;
  BitRel pulled_back;

  EnlargementWitness(SupportRelation next, IdealSet ideal, BitRel pulled)
      : next_support(std::move(next)), level_ideal(std::move(ideal)),
        pulled_back(std::move(pulled)) {}
};

std::optional<EnlargementWitness> find_standard_enlargement(std::uint64_t seed,
                                                            int max_tries = 400);

}  // namespace groupoidal
