#include "groupoidal/tower.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "groupoidal/config.hpp"
#include "groupoidal/error.hpp"

namespace groupoidal {

int Tower::size_at(int level) const {
  if (base_size < 1) fail_validation("tower base size must be positive");
  if (level < 1 || level > num_levels())
    fail_validation("tower level " + std::to_string(level) + " out of range");
  long long n = base_size;
  for (int k = 0; k < level - 1; ++k) {
    if (steps[std::size_t(k)].multiplicity < 1)
      fail_validation("embedding multiplicity must be >= 1");
    n *= steps[std::size_t(k)].multiplicity;
    if (n > config::kTowerMaxSize)
      fail_bound("tower level size " + std::to_string(n) + " exceeds bound " +
                 std::to_string(config::kTowerMaxSize));
  }
  return static_cast<int>(n);
}

std::vector<std::pair<int, int>> embed_unit(const EmbeddingSpec& spec, int n, int i, int j) {
  if (spec.multiplicity < 1) fail_validation("embedding multiplicity must be >= 1");
  if (i < 1 || i > n || j < 1 || j > n)
    fail_validation("matrix unit index out of range in embed_unit");
  int q = spec.multiplicity;
  std::vector<std::pair<int, int>> out;
  out.reserve(std::size_t(q));
  if (spec.kind == EmbeddingKind::Refinement) {
    for (int t = 1; t <= q; ++t) out.emplace_back((i - 1) * q + t, (j - 1) * q + t);
  } else {
    for (int t = 0; t < q; ++t) out.emplace_back(i + t * n, j + t * n);
  }
  return out;
}

namespace {

BitRel embedded_pairs(const EmbeddingSpec& spec, int n, const BitRel& pairs) {
  BitRel out(n * spec.multiplicity);
  for (auto [i, j] : pairs.pairs())
    for (auto [a, b] : embed_unit(spec, n, i, j)) out.set(a, b);
  return out;
}

bool is_upper_triangular_order(const SupportRelation& P) {
  return P == SupportRelation::upper_triangular(P.n());
}

}  // namespace

SupportRelation lift_support(const EmbeddingSpec& spec, const SupportRelation& P) {
  int n = P.n();
  BitRel image = embedded_pairs(spec, n, P.pair_set());
  image.close_reflexive();
  SupportRelation lifted = SupportRelation::closure_of(std::move(image), config::kTowerMaxSize);
  if (is_upper_triangular_order(P)) {
    // ρ(T_n) ⊆ T_nq and σ(T_n) ⊆ T_nq
    if (!lifted.pair_set().subset_of(
            SupportRelation::upper_triangular(lifted.n()).pair_set()))
      fail_validation("lifted image of a triangular support left the triangular order");
  }
  return lifted;
}

IdealSet lift_ideal(const EmbeddingSpec& spec, const SupportRelation& P, const IdealSet& F,
                    const SupportRelation& P_next) {
  if (!(F.parent() == P)) fail_validation("ideal does not live on the given support");
  SupportRelation image = lift_support(spec, P);
  if (P_next.n() != image.n() || !image.pair_set().subset_of(P_next.pair_set()))
    fail_validation("next-level support does not contain the lifted support");
  return ideal_closure(P_next, embedded_pairs(spec, P.n(), F.pair_set()));
}

BitRel unit_image(const Tower& tower, int from_level, int to_level, int i, int j) {
  if (from_level < 1 || to_level < from_level || to_level > tower.num_levels())
    fail_validation("tower level range invalid in unit_image");
  int n = tower.size_at(from_level);
  BitRel cur(n);
  cur.set(i, j);
  for (int lvl = from_level; lvl < to_level; ++lvl) {
    cur = embedded_pairs(tower.steps[std::size_t(lvl - 1)], tower.size_at(lvl), cur);
  }
  return cur;
}

std::vector<int> diagonal_image(const Tower& tower, int from_level, int to_level, int member) {
  BitRel img = unit_image(tower, from_level, to_level, member, member);
  std::vector<int> out;
  for (auto [a, b] : img.pairs())
    if (a == b) out.push_back(a);
  return out;
}

IdealSet lift_level_ideal(const Tower& tower, int from_level, int to_level, const IdealSet& F) {
  if (!(F.parent() == SupportRelation::upper_triangular(tower.size_at(from_level))))
    fail_validation("level ideal must live on the level's triangular algebra");
  IdealSet cur = F;
  for (int lvl = from_level; lvl < to_level; ++lvl) {
    SupportRelation here = SupportRelation::upper_triangular(tower.size_at(lvl));
    SupportRelation next = SupportRelation::upper_triangular(tower.size_at(lvl + 1));
    cur = lift_ideal(tower.steps[std::size_t(lvl - 1)], here, cur, next);
  }
  return cur;
}

IdealSet pullback_level_ideal(const Tower& tower, int ideal_level, int to_level,
                              const IdealSet& ideal) {
  if (to_level < 1 || to_level > ideal_level)
    fail_validation("pullback target level out of range");
  if (!(ideal.parent() == SupportRelation::upper_triangular(tower.size_at(ideal_level))))
    fail_validation("ideal level mismatch in pullback");
  int n = tower.size_at(to_level);
  SupportRelation low = SupportRelation::upper_triangular(n);
  BitRel pulled(n);
  for (auto [i, j] : low.pair_set().pairs()) {
    if (unit_image(tower, to_level, ideal_level, i, j).subset_of(ideal.pair_set()))
      pulled.set(i, j);
  }
  return IdealSet::closed(low, std::move(pulled));
}

bool inductivity_check(const Tower& tower, const IdealSet& top_ideal, int depth) {
  if (depth < 1 || depth > tower.num_levels())
    fail_validation("inductivity depth out of range");
  SupportRelation top = SupportRelation::upper_triangular(tower.size_at(depth));
  if (!(top_ideal.parent() == top))
    fail_validation("ideal does not live at the stated depth");
  BitRel acc(top.n());
  for (int lvl = 1; lvl <= depth; ++lvl) {
    IdealSet pulled = pullback_level_ideal(tower, depth, lvl, top_ideal);
    acc |= lift_level_ideal(tower, lvl, depth, pulled).pair_set();
  }
  return ideal_closure(top, acc).pair_set() == top_ideal.pair_set();
}

std::vector<std::vector<ProjectionSet>> persistent_projections(const Tower& tower, int depth) {
  if (depth < 1 || depth > tower.num_levels())
    fail_validation("tower depth out of range");
  if (depth > config::kTowerMaxDepth)
    fail_bound("tower depth exceeds bound " + std::to_string(config::kTowerMaxDepth));
  std::vector<std::vector<ProjectionSet>> out;
  for (int lvl = 1; lvl <= depth; ++lvl) {
    SupportRelation here = SupportRelation::upper_triangular(tower.size_at(lvl));
    std::vector<ProjectionSet> survivors;
    for (const ProjectionSet& p : invariant_projections(here)) {
      bool persistent = true;
      for (int m = lvl + 1; m <= depth && persistent; ++m) {
        std::vector<int> image;
        for (int member : p.members) {
          auto mapped = diagonal_image(tower, lvl, m, member);
          image.insert(image.end(), mapped.begin(), mapped.end());
        }
        std::sort(image.begin(), image.end());
        SupportRelation there = SupportRelation::upper_triangular(tower.size_at(m));
        if (!projection_invariant(there, image)) persistent = false;
      }
      if (persistent) survivors.push_back(p);
    }
    out.push_back(std::move(survivors));
  }
  return out;
}

bool is_strongly_maximal_level(const SupportRelation& P) {
  BitRel t = P.pair_set().transposed();
  BitRel both = P.pair_set();
  both &= t;
  if (!(both == BitRel::identity(P.n()))) return false;
  BitRel either = P.pair_set();
  either |= t;
  return either == BitRel::full(P.n());
}

std::optional<EnlargementWitness> find_standard_enlargement(std::uint64_t seed, int max_tries) {
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < max_tries; ++attempt) {
    int n = 2 + int(rng() % 2);       // base T_n, n in {2,3}
    int q = 2 + int(rng() % 2);       // multiplicity in {2,3}
    int big = n * q;
    EmbeddingSpec spec{EmbeddingKind::Standard, q};
    SupportRelation base = SupportRelation::upper_triangular(n);

    // Digraph level-2 support: T_{nq} plus a few below-diagonal pairs, closed.
    BitRel seed_rel = SupportRelation::upper_triangular(big).pair_set();
    int extras = 1 + int(rng() % 3);
    std::vector<std::pair<int, int>> extra_pairs;
    for (int e = 0; e < extras; ++e) {
      int a = 2 + int(rng() % (big - 1));
      int b = 1 + int(rng() % (a - 1));
      seed_rel.set(a, b);
      extra_pairs.emplace_back(a, b);
    }
    SupportRelation next = SupportRelation::closure_of(std::move(seed_rel));

    for (const IdealSet& F : enumerate_ideals(base)) {
      IdealSet lifted = lift_ideal(spec, base, F, next);
      BitRel pulled(n);
      for (auto [i, j] : base.pair_set().pairs()) {
        bool all_in = true;
        for (auto [a, b] : embed_unit(spec, n, i, j))
          if (!lifted.pair_set().test(a, b)) { all_in = false; break; }
        if (all_in) pulled.set(i, j);
      }
      if (F.pair_set().subset_of(pulled) && !(pulled == F.pair_set())) {
        EnlargementWitness w(next, F, std::move(pulled));
        w.base_n = n;
        w.multiplicity = q;
        w.extra_pairs = std::move(extra_pairs);
        return w;
      }
    }
  }
  return std::nullopt;
}

}  // namespace groupoidal
