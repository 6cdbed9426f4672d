#include "groupoidal/relation.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <string>
#include <unordered_set>

#include "groupoidal/config.hpp"
#include "groupoidal/error.hpp"

namespace groupoidal {

namespace {

void check_size(int n, int max_n) {
  int cap = max_n > 0 ? max_n : config::kRelationMaxN;
  if (n > cap)
    fail_bound("relation size " + std::to_string(n) + " exceeds bound " +
               std::to_string(cap));
}

}  // namespace

SupportRelation SupportRelation::closure_of(BitRel seed, int max_n) {
  check_size(seed.size(), max_n);
  seed.close_reflexive();
  seed.close_transitive();
  return SupportRelation(std::move(seed));
}

SupportRelation SupportRelation::from_closed(BitRel rel, int max_n) {
  check_size(rel.size(), max_n);
  if (!rel.is_reflexive()) fail_validation("support relation is not reflexive");
  if (!rel.is_transitive()) fail_validation("support relation is not transitive");
  return SupportRelation(std::move(rel));
}

SupportRelation SupportRelation::upper_triangular(int n) {
  BitRel r(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) r.set(i, j);
  return SupportRelation(std::move(r));
}

SupportRelation SupportRelation::full_matrix(int n) {
  return SupportRelation(BitRel::full(n));
}

SupportRelation reflexive_transitive_closure(const BitRel& pairs, int max_n) {
  return SupportRelation::closure_of(pairs, max_n);
}

IdealSet IdealSet::closed(SupportRelation parent, BitRel set) {
  if (!set.subset_of(parent.pair_set()))
    fail_validation("ideal set not contained in its support relation");
  if (!is_ideal_set(parent, set))
    fail_validation("pair-set is not closed under two-sided absorption");
  return IdealSet(std::move(parent), std::move(set));
}

bool is_ideal_set(const SupportRelation& P, const BitRel& f) {
  if (f.size() != P.n()) fail_validation("size mismatch in ideal-set check");
  if (!f.subset_of(P.pair_set())) return false;
  return compose(P.pair_set(), f).subset_of(f) && compose(f, P.pair_set()).subset_of(f);
}

IdealSet ideal_closure(const SupportRelation& P, const BitRel& seed) {
  if (seed.size() != P.n()) fail_validation("size mismatch in ideal closure");
  if (!seed.subset_of(P.pair_set()))
    fail_validation("ideal seed not contained in the support relation");
  BitRel f = seed;
  // Absorption to a fixed point. With P reflexive and transitive this
  // stabilizes after one P∘F / F∘P round, but we iterate regardless.
  for (;;) {
    BitRel next = f;
    next |= compose(P.pair_set(), f);
    next |= compose(f, P.pair_set());
    if (next == f) break;
    f = std::move(next);
  }
  return IdealSet::closed(P, std::move(f));
}

IdealSet generated_support(const SupportRelation& P, const BitRel& g) {
  return ideal_closure(P, g);
}

BitRel full_sum_generator(const IdealSet& F) { return F.pair_set(); }

BitRel corner_generator(const SupportRelation& P, const IdealSet& F) {
  const BitRel& p = P.pair_set();
  const BitRel& f = F.pair_set();
  int n = P.n();
  BitRel out(n);
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= n; ++k) {
      if (!f.test(i, k)) continue;
      bool corner = true;
      for (int j = 1; j <= n && corner; ++j) {
        if (j != i && p.test(i, j) && f.test(j, k)) corner = false;
        if (j != k && f.test(i, j) && p.test(j, k)) corner = false;
      }
      if (corner) out.set(i, k);
    }
  }
  return out;
}

std::vector<IdealSet> enumerate_ideals(const SupportRelation& P,
                                       std::optional<int> bound) {
  int cap = bound.value_or(config::enumeration_bound());
  if (P.n() > cap)
    fail_bound("ideal enumeration guarded at n <= " + std::to_string(cap) +
               " (got n = " + std::to_string(P.n()) + ")");

  // Every ideal set is a union of principal ones, so close each single pair
  // and breadth-first over unions of the resulting generators.
  std::vector<BitRel> principals;
  {
    std::unordered_set<std::size_t> seen;
    for (auto [i, j] : P.pair_set().pairs()) {
      BitRel seed(P.n());
      seed.set(i, j);
      BitRel closed = ideal_closure(P, seed).pair_set();
      if (seen.insert(closed.hash()).second) principals.push_back(std::move(closed));
    }
  }

  std::vector<BitRel> found;
  std::unordered_set<std::size_t> seen;
  std::deque<BitRel> frontier;
  BitRel empty(P.n());
  seen.insert(empty.hash());
  found.push_back(empty);
  frontier.push_back(std::move(empty));
  while (!frontier.empty()) {
    BitRel cur = std::move(frontier.front());
    frontier.pop_front();
    for (const BitRel& g : principals) {
      BitRel next = cur;
      next |= g;
      std::size_t h = next.hash();
      if (seen.count(h)) continue;
      bool dup = false;
      for (const BitRel& f : found)
        if (f.hash() == h && f == next) { dup = true; break; }
      if (dup) continue;
      seen.insert(h);
      found.push_back(next);
      frontier.push_back(std::move(next));
    }
  }

  std::sort(found.begin(), found.end(), [](const BitRel& a, const BitRel& b) {
    std::size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    return a.pairs() < b.pairs();
  });

  std::vector<IdealSet> out;
  out.reserve(found.size());
  for (BitRel& f : found) out.push_back(IdealSet::closed(P, std::move(f)));
  return out;
}

bool projection_invariant(const SupportRelation& P, std::span<const int> members) {
  std::vector<char> in(std::size_t(P.n()) + 1, 0);
  for (int m : members) {
    if (m < 1 || m > P.n()) fail_validation("projection member out of range");
    in[std::size_t(m)] = 1;
  }
  for (int j = 1; j <= P.n(); ++j) {
    if (!in[std::size_t(j)]) continue;
    for (int i = 1; i <= P.n(); ++i)
      if (P.pair_set().test(i, j) && !in[std::size_t(i)]) return false;
  }
  return true;
}

std::vector<ProjectionSet> invariant_projections(const SupportRelation& P) {
  int n = P.n();
  // Predecessor sets; transitivity makes S ∪ pred(j) predecessor-closed
  // whenever S is, so unions of predecessor cones reach every down-set.
  std::vector<std::vector<int>> pred(std::size_t(n) + 1);
  for (int j = 1; j <= n; ++j)
    for (int i = 1; i <= n; ++i)
      if (P.pair_set().test(i, j)) pred[std::size_t(j)].push_back(i);

  std::set<std::vector<int>> seen;
  std::deque<std::vector<int>> frontier;
  seen.insert(std::vector<int>{});
  frontier.push_back(std::vector<int>{});
  while (!frontier.empty()) {
    std::vector<int> cur = std::move(frontier.front());
    frontier.pop_front();
    for (int j = 1; j <= n; ++j) {
      if (std::binary_search(cur.begin(), cur.end(), j)) continue;
      std::vector<int> next = cur;
      next.insert(next.end(), pred[std::size_t(j)].begin(), pred[std::size_t(j)].end());
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      if (seen.insert(next).second) {
        if (seen.size() > config::kDownSetCap)
          fail_bound("invariant projection lattice larger than the down-set cap");
        frontier.push_back(std::move(next));
      }
    }
  }

  std::vector<ProjectionSet> out;
  out.reserve(seen.size());
  for (const auto& members : seen) out.push_back(ProjectionSet{n, members});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace groupoidal
