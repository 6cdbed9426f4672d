#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "groupoidal/bitrel.hpp"
#include "groupoidal/exact_matrix.hpp"
#include "groupoidal/rational.hpp"
#include "groupoidal/tower.hpp"

namespace groupoidal {

using Word = std::vector<int>;

// Truncated Cantor-space coordinates: words (x_1..x_k) with 1 <= x_m <= r_m.
// Point indices are lex ranks (first letter most significant), 1-based, so
// depth-k words double as matrix-unit indices of the level-k algebra.
struct WordSpace {
  std::vector<int> alphabets;

  static WordSpace uniform(int r, int depth);
  static WordSpace from_tower(const Tower& tower, int depth);

  int depth() const { return static_cast<int>(alphabets.size()); }
  int points() const;
  Word word(int index) const;
  int index(std::span<const int> w) const;
  WordSpace prefix(int depth) const;
  bool prefix_of(const WordSpace& deeper) const;

  bool operator==(const WordSpace& o) const { return alphabets == o.alphabets; }
};

// Principal groupoid operations on pairs of equal-depth words.
std::optional<std::pair<Word, Word>> groupoid_compose(const std::pair<Word, Word>& a,
                                                      const std::pair<Word, Word>& b);
std::pair<Word, Word> groupoid_inverse(const std::pair<Word, Word>& a);
std::pair<Word, Word> groupoid_range(const std::pair<Word, Word>& a);
std::pair<Word, Word> groupoid_source(const std::pair<Word, Word>& a);

// Depth-k truncation of the tail-equivalence groupoid: the full relation on
// depth-k words. The canonical compact open basis is in basis_gsets().
struct TailGroupoid {
  WordSpace space;
  BitRel pairs;
};
TailGroupoid tail_groupoid(const WordSpace& space);

// Set of word pairs on which range and source are one-to-one: the graph of a
// partial homeomorphism. Pairs are stored as sorted index pairs.
class GSet {
 public:
  static GSet empty(WordSpace space);
  static GSet from_pairs(WordSpace space, std::vector<std::pair<int, int>> elems);
  // E_{i,j} = {(i·w, j·w)} at the full depth of `space`.
  static GSet prefix_set(const WordSpace& space, std::span<const int> pi,
                         std::span<const int> pj);

  const WordSpace& space() const { return space_; }
  const std::vector<std::pair<int, int>>& elems() const { return elems_; }
  bool empty_set() const { return elems_.empty(); }
  std::size_t size() const { return elems_.size(); }
  std::vector<int> rows() const;
  std::vector<int> cols() const;
  GSet inverse() const;
  bool contains(int u, int v) const;

  bool operator==(const GSet& o) const {
    return space_ == o.space_ && elems_ == o.elems_;
  }
  bool operator<(const GSet& o) const { return elems_ < o.elems_; }

 private:
  GSet(WordSpace space, std::vector<std::pair<int, int>> elems)
      : space_(std::move(space)), elems_(std::move(elems)) {}
  WordSpace space_;
  std::vector<std::pair<int, int>> elems_;
};

// Refinement split of a G-set into the deeper space (append every common
// suffix), e.g. E_{i,j} at depth k -> its children at depth k+1.
GSet refine_gset(const GSet& g, const WordSpace& deeper);

// All prefix basis G-sets E_{i,j} at full depth, level-major and row-major.
std::vector<GSet> basis_gsets(const WordSpace& space);

// Units of A_l ∩ I for l = 1..k: the level-l prefix pairs whose refined
// G-set is contained in F, each returned at its own depth. Level-major,
// row-major.
std::vector<GSet> ideal_unit_listing(const WordSpace& space, const BitRel& F);

// The pairs of F as depth-k singleton G-sets, row-major: the canonical basis
// cover of an ideal set at a discrete truncation depth.
std::vector<GSet> point_cover(const WordSpace& space, const BitRel& F);

// Lexicographic and reverse-lexicographic orders on equal-depth words.
bool lex_leq(std::span<const int> a, std::span<const int> b);
bool revlex_leq(std::span<const int> a, std::span<const int> b);

// Level-index identification induced by a tower: refinement steps append low
// digits, standard steps append high digits. All-refinement towers give the
// lex rank, all-standard towers the reverse-lex rank.
int tower_rank(const Tower& tower, std::span<const int> word);

enum class OrderKind { Lex, Revlex, TowerOrder };

struct WordRel {
  WordSpace space;
  BitRel pairs;
};

struct OrderReport {
  bool is_partial = false;
  bool is_total = false;
  bool is_equivalence = false;
};

// Literal evaluation of the order axioms on the finite pair-set:
// partial: P∘P ⊆ P and P ∩ P⁻¹ = G⁰; total: P ∪ P⁻¹ = G;
// equivalence: P∘P ⊆ P and P = P⁻¹.
OrderReport check_partial_order(const WordRel& rel);

struct OrderRelation {
  WordSpace space;
  BitRel pairs;
};

OrderRelation order_from_comparator(const WordSpace& space, OrderKind kind,
                                    const Tower* tower = nullptr);

bool ideal_set_check(const OrderRelation& P, const BitRel& F);
bool spectrum_determines(const BitRel& F1, const BitRel& F2);

// Exact dyadic rational num / 2^k.
struct Dyadic {
  long long num = 0;
  int log2_den = 0;

  Dyadic() = default;
  Dyadic(long long n, int k);
  static Dyadic one() { return Dyadic(1, 0); }
  static Dyadic half_power(int k) { return Dyadic(1, k); }

  bool is_zero() const { return num == 0; }
  friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
  friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
  bool operator==(const Dyadic& o) const { return num == o.num && log2_den == o.log2_den; }
  std::string str() const;
};

// Finite formal combination of G-set characteristic functions, stored as a
// sparse exact-valued function on the depth-k groupoid.
class DyadicFunction {
 public:
  static DyadicFunction zero(WordSpace space);
  static DyadicFunction indicator(const GSet& e);
  static DyadicFunction from_terms(WordSpace space,
                                   const std::vector<std::pair<GSet, Dyadic>>& terms);

  const WordSpace& space() const { return space_; }
  const std::map<std::pair<int, int>, Dyadic>& values() const { return vals_; }
  Dyadic value(int u, int v) const;
  bool is_zero() const { return vals_.empty(); }
  BitRel support() const;
  DyadicFunction scaled(const Dyadic& c) const;

  // Deterministic decomposition back into disjoint (G-set, coefficient)
  // terms: value classes split greedily into row/column-unique pieces.
  std::vector<std::pair<GSet, Dyadic>> terms() const;

  friend DyadicFunction operator+(const DyadicFunction& a, const DyadicFunction& b);
  bool operator==(const DyadicFunction& o) const {
    return space_ == o.space_ && vals_ == o.vals_;
  }

 private:
  explicit DyadicFunction(WordSpace space) : space_(std::move(space)) {}
  void put(int u, int v, const Dyadic& d);
  WordSpace space_;
  std::map<std::pair<int, int>, Dyadic> vals_;
};

// E_i = K_i \ (K_1 ∪ ... ∪ K_{i-1}); empty sets keep their slot so dyadic
// weights stay aligned with the input indexing.
std::vector<GSet> disjointify(const std::vector<GSet>& K);

// g = sum over nonempty E_i of χ_{E_i} / 2^i (1-based positions).
DyadicFunction dyadic_generator(const std::vector<GSet>& E);

// r(χ_E) g d(χ_E): restriction of g to pairs with range in r(E) and source
// in d(E).
DyadicFunction compress_by(const GSet& e, const DyadicFunction& g);

DyadicFunction convolve(const DyadicFunction& f, const DyadicFunction& h);
DyadicFunction involute(const DyadicFunction& f);

// Support of the two-sided convolution ideal generated by g inside A(P).
BitRel convolution_ideal_support(const OrderRelation& P, const DyadicFunction& g);

// u (deeper) is a subordinate of the refined image of v when compressing
// that image by u's range and source gives back u.
bool subordinate_check(const GSet& u, const GSet& v);

// Delete every unit subordinate to an earlier one. Input must be level-major
// (nondecreasing depth) and row-major within a level.
std::vector<GSet> subordinate_deletion(const std::vector<GSet>& units);

// pi(x) = sum (x_m - 1) r^{-m}, exact.
Rational pi_coordinate(std::span<const int> word, int r);

// Partial map j -> i induced by a normalising partial isometry of D_n in
// T_n via v e_jj v* = e_ii.
std::map<int, int> partial_homeo_of_isometry(const ExactMatrix& v);

}  // namespace groupoidal
