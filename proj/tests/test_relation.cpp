#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "groupoidal/error.hpp"
#include "groupoidal/io.hpp"
#include "groupoidal/relation.hpp"
#include "oracles.hpp"

using namespace groupoidal;
using oracle::to_bitrel;
using oracle::to_pairs;

namespace {

BitRel rel_of(int n, std::vector<std::pair<int, int>> pairs) {
  return BitRel::from_pairs(n, pairs);
}

IdealSet t7_worked_ideal() {
  SupportRelation t7 = SupportRelation::upper_triangular(7);
  return IdealSet::closed(t7, rel_of(7, fixtures::t7_ideal()));
}

}  // namespace

TEST_CASE("compose: single pair, identity, triangular column") {
  CHECK(compose(rel_of(3, {{1, 2}}), rel_of(3, {{2, 3}})) == rel_of(3, {{1, 3}}));

  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 8; ++rep) {
    BitRel s(6);
    for (int k = 0; k < 7; ++k)
      s.set(1 + int(rng() % 6), 1 + int(rng() % 6));
    CHECK(compose(BitRel::identity(6), s) == s);
    CHECK(compose(s, BitRel::identity(6)) == s);
  }

  BitRel t3 = SupportRelation::upper_triangular(3).pair_set();
  CHECK(compose(t3, rel_of(3, {{2, 3}})) == rel_of(3, {{1, 3}, {2, 3}}));
}

TEST_CASE("reflexive transitive closure") {
  CHECK(reflexive_transitive_closure(BitRel(3)).pair_set() == BitRel::identity(3));

  SupportRelation chain = reflexive_transitive_closure(rel_of(3, {{1, 2}, {2, 3}}));
  CHECK(chain.pair_set() ==
        rel_of(3, {{1, 1}, {2, 2}, {3, 3}, {1, 2}, {2, 3}, {1, 3}}));

  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 12; ++rep) {
    BitRel seed(6);
    for (int k = 0; k < 10; ++k)
      seed.set(1 + int(rng() % 6), 1 + int(rng() % 6));
    SupportRelation closed = reflexive_transitive_closure(seed);
    CHECK(to_pairs(closed.pair_set()) == oracle::rt_closure(to_pairs(seed), 6));
    // idempotent
    CHECK(reflexive_transitive_closure(closed.pair_set()).pair_set() == closed.pair_set());
  }

  CHECK_THROWS_AS(reflexive_transitive_closure(BitRel(65)), Error);  // default op bound
  CHECK(reflexive_transitive_closure(BitRel(65), 128).n() == 65);
}

TEST_CASE("ideal closure examples and closure-operator laws") {
  SupportRelation t3 = SupportRelation::upper_triangular(3);
  CHECK(ideal_closure(t3, rel_of(3, {{1, 3}})).pair_set() == rel_of(3, {{1, 3}}));
  CHECK(ideal_closure(t3, rel_of(3, {{2, 2}})).pair_set() ==
        rel_of(3, {{2, 2}, {1, 2}, {2, 3}, {1, 3}}));
  CHECK(ideal_closure(t3, BitRel(3)).pair_set() == BitRel(3));
  CHECK_THROWS_AS(ideal_closure(t3, rel_of(3, {{2, 1}})), Error);

  std::mt19937_64 rng(31);
  for (const BitRel& p : oracle::all_preorders(4)) {
    SupportRelation P = SupportRelation::from_closed(p);
    auto pl = p.pairs();
    for (int rep = 0; rep < 4; ++rep) {
      BitRel seed(4), seed2(4);
      for (int k = 0; k < 2 && !pl.empty(); ++k) {
        auto pr = pl[rng() % pl.size()];
        seed.set(pr.first, pr.second);
        auto pr2 = pl[rng() % pl.size()];
        seed2.set(pr2.first, pr2.second);
        seed2.set(pr.first, pr.second);
      }
      BitRel closed = ideal_closure(P, seed).pair_set();
      CHECK(to_pairs(closed) == oracle::absorption_closure(to_pairs(p), to_pairs(seed)));
      // extensive, idempotent, monotone
      CHECK(seed.subset_of(closed));
      CHECK(ideal_closure(P, closed).pair_set() == closed);
      CHECK(closed.subset_of(ideal_closure(P, seed2).pair_set()));
    }
  }
}

TEST_CASE("ideal enumeration: T_n counts and exact sets") {
  SupportRelation t1 = SupportRelation::upper_triangular(1);
  CHECK(enumerate_ideals(t1).size() == 2);

  SupportRelation t2 = SupportRelation::upper_triangular(2);
  auto ideals2 = enumerate_ideals(t2);
  CHECK(ideals2.size() == 5);
  std::set<oracle::PairSet> got;
  for (const IdealSet& f : ideals2) got.insert(to_pairs(f.pair_set()));
  CHECK(got == oracle::ideals_bruteforce(oracle::tn(2)));

  CHECK(enumerate_ideals(SupportRelation::upper_triangular(3)).size() == 14);

  for (int n = 1; n <= 6; ++n) {
    auto alpha = oracle::tn_ideals_alpha(n);
    auto mine = enumerate_ideals(SupportRelation::upper_triangular(n));
    CHECK(mine.size() == alpha.size());
    if (n <= 5) {
      std::set<oracle::PairSet> a(alpha.begin(), alpha.end()), b;
      for (const IdealSet& f : mine) b.insert(to_pairs(f.pair_set()));
      CHECK(a == b);
    }
  }
}

TEST_CASE("ideal enumeration agrees with subset filtering on digraph supports") {
  std::mt19937_64 rng(41);
  for (int rep = 0; rep < 10; ++rep) {
    BitRel seed = oracle::random_closed_relation(rng, 4, 4);
    SupportRelation P = SupportRelation::from_closed(seed);
    if (P.pair_set().count() > 12) continue;  // keep the 2^|P| filter cheap
    std::set<oracle::PairSet> got;
    for (const IdealSet& f : enumerate_ideals(P)) got.insert(to_pairs(f.pair_set()));
    CHECK(got == oracle::ideals_bruteforce(to_pairs(P.pair_set())));
  }
}

TEST_CASE("ideal enumeration is guarded and deterministic") {
  CHECK_THROWS_AS(enumerate_ideals(SupportRelation::upper_triangular(9)), Error);
  CHECK(enumerate_ideals(SupportRelation::upper_triangular(9), 9).size() > 0);

  auto a = enumerate_ideals(SupportRelation::upper_triangular(4));
  auto b = enumerate_ideals(SupportRelation::upper_triangular(4));
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
  for (std::size_t i = 1; i < a.size(); ++i) {
    bool ordered = a[i - 1].pair_set().count() < a[i].pair_set().count() ||
                   (a[i - 1].pair_set().count() == a[i].pair_set().count() &&
                    a[i - 1].pair_set().pairs() < a[i].pair_set().pairs());
    CHECK(ordered);
  }
}

TEST_CASE("full-sum generator") {
  SupportRelation t7 = SupportRelation::upper_triangular(7);
  IdealSet worked = t7_worked_ideal();
  CHECK(full_sum_generator(worked).count() == 22);
  CHECK(full_sum_generator(worked) == worked.pair_set());

  IdealSet empty = IdealSet::closed(t7, BitRel(7));
  CHECK(full_sum_generator(empty).empty());

  for (const IdealSet& f : enumerate_ideals(SupportRelation::upper_triangular(4)))
    CHECK(generated_support(f.parent(), full_sum_generator(f)) == f);
}

TEST_CASE("corner generator on the worked T_7 ideal") {
  SupportRelation t7 = SupportRelation::upper_triangular(7);
  IdealSet worked = t7_worked_ideal();
  CHECK(corner_generator(t7, worked) == rel_of(7, fixtures::t7_corners()));
  CHECK(generated_support(t7, corner_generator(t7, worked)) == worked);
  CHECK(corner_generator(t7, IdealSet::closed(t7, BitRel(7))).empty());
}

TEST_CASE("corner generator regenerates and is minimal on T_5") {
  SupportRelation t5 = SupportRelation::upper_triangular(5);
  for (const IdealSet& f : enumerate_ideals(t5)) {
    BitRel corners = corner_generator(t5, f);
    CHECK(generated_support(t5, corners) == f);
    auto pairs = corners.pairs();
    // no proper subset closes back to f
    for (std::size_t drop = 0; drop < pairs.size(); ++drop) {
      BitRel sub(5);
      for (std::size_t k = 0; k < pairs.size(); ++k)
        if (k != drop) sub.set(pairs[k].first, pairs[k].second);
      CHECK_FALSE(generated_support(t5, sub) == f);
    }
  }
}

TEST_CASE("generated support of diagonal seeds is the L-block") {
  for (int n : {3, 5, 7}) {
    SupportRelation t = SupportRelation::upper_triangular(n);
    for (int i = 1; i <= n; ++i) {
      BitRel seed(n);
      seed.set(i, i);
      BitRel expect(n);
      for (int a = 1; a <= i; ++a)
        for (int b = i; b <= n; ++b) expect.set(a, b);
      CHECK(generated_support(t, seed).pair_set() == expect);
    }
  }
}

TEST_CASE("invariant projections") {
  for (int n : {1, 2, 4, 6}) {
    auto got = invariant_projections(SupportRelation::upper_triangular(n));
    REQUIRE(got.size() == std::size_t(n) + 1);
    for (int j = 0; j <= n; ++j) {
      std::vector<int> chain;
      for (int i = 1; i <= j; ++i) chain.push_back(i);
      CHECK(got[std::size_t(j)].members == chain);
    }
  }

  auto full = invariant_projections(SupportRelation::full_matrix(4));
  REQUIRE(full.size() == 2);
  CHECK(full[0].members.empty());
  CHECK(full[1].members == std::vector<int>{1, 2, 3, 4});

  // lattice closure + agreement with the subset-filter oracle
  std::mt19937_64 rng(59);
  for (int rep = 0; rep < 8; ++rep) {
    SupportRelation P =
        SupportRelation::from_closed(oracle::random_closed_relation(rng, 5, 5));
    auto got = invariant_projections(P);
    std::set<std::set<int>> as_sets;
    for (const auto& p : got) as_sets.insert({p.members.begin(), p.members.end()});
    CHECK(as_sets == oracle::downsets(to_pairs(P.pair_set()), 5));
    for (const auto& a : as_sets) {
      for (const auto& b : as_sets) {
        std::set<int> uni = a, inter;
        uni.insert(b.begin(), b.end());
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::inserter(inter, inter.begin()));
        CHECK(as_sets.count(uni));
        CHECK(as_sets.count(inter));
      }
    }
  }
}

TEST_CASE("principal-ideal property on every preorder up to n = 4") {
  for (int n = 1; n <= 4; ++n) {
    for (const BitRel& p : oracle::all_preorders(n)) {
      SupportRelation P = SupportRelation::from_closed(p);
      // corners only regenerate when the support has no cycles
      BitRel meet = p;
      meet &= p.transposed();
      bool antisymmetric = meet == BitRel::identity(n);
      for (const IdealSet& f : enumerate_ideals(P)) {
        CHECK(generated_support(P, full_sum_generator(f)) == f);
        if (!antisymmetric) continue;
        BitRel corners = corner_generator(P, f);
        CHECK(generated_support(P, corners) == f);
        auto pairs = corners.pairs();
        for (std::size_t drop = 0; drop < pairs.size(); ++drop) {
          BitRel sub(n);
          for (std::size_t k = 0; k < pairs.size(); ++k)
            if (k != drop) sub.set(pairs[k].first, pairs[k].second);
          CHECK_FALSE(generated_support(P, sub) == f);
        }
      }
    }
  }
}

TEST_CASE("corner rule yields no generator on a cyclic support") {
  SupportRelation m2 = SupportRelation::full_matrix(2);
  IdealSet whole = IdealSet::closed(m2, BitRel::full(2));
  CHECK(corner_generator(m2, whole).empty());
  CHECK(generated_support(m2, full_sum_generator(whole)) == whole);
  // any single pair already generates everything on the full relation
  BitRel single(2);
  single.set(1, 1);
  CHECK(generated_support(m2, single) == whole);
}

TEST_CASE("relation and ideal JSON round-trips") {
  SupportRelation t7 = SupportRelation::upper_triangular(7);
  IdealSet worked = t7_worked_ideal();

  auto j = io::relation_to_json(t7);
  CHECK(io::relation_from_json(j) == t7);

  auto ji = io::ideal_to_json(worked);
  CHECK(io::ideal_from_json(ji) == worked);

  CHECK_THROWS_AS(io::pairset_from_json(io::parse_json_text(R"({"n":2})")), Error);
  CHECK_THROWS_AS(io::parse_json_text("{nope"), Error);
}

TEST_CASE("star pattern of the worked T_7 ideal") {
  IdealSet worked = t7_worked_ideal();
  CHECK(io::star_pattern(worked.pair_set()) ==
        "* * * * * * *\n"
        "0 * * * * * *\n"
        "0 0 0 0 0 * *\n"
        "0 0 0 0 0 * *\n"
        "0 0 0 0 0 * *\n"
        "0 0 0 0 0 * *\n"
        "0 0 0 0 0 0 *\n");
}

TEST_CASE("dot export highlights ideal pairs") {
  SupportRelation t2 = SupportRelation::upper_triangular(2);
  BitRel ideal = rel_of(2, {{1, 2}});
  std::string dot = io::dot_export(t2, &ideal);
  CHECK(dot.find("1 -> 2 [color=red];") != std::string::npos);
  CHECK(dot.find("digraph") != std::string::npos);
}
