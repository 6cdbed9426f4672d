#include "groupoidal/spectrum.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "groupoidal/config.hpp"
#include "groupoidal/error.hpp"

namespace groupoidal {

WordSpace WordSpace::uniform(int r, int depth) {
  if (r < 1 || depth < 1) fail_validation("word space needs r >= 1 and depth >= 1");
  WordSpace s;
  s.alphabets.assign(std::size_t(depth), r);
  s.points();
  return s;
}

WordSpace WordSpace::from_tower(const Tower& tower, int depth) {
  if (depth < 1 || depth > tower.num_levels())
    fail_validation("word depth out of range for the tower");
  WordSpace s;
  s.alphabets.push_back(tower.base_size);
  for (int m = 2; m <= depth; ++m)
    s.alphabets.push_back(tower.steps[std::size_t(m - 2)].multiplicity);
  s.points();
  return s;
}

int WordSpace::points() const {
  long long n = 1;
  for (int r : alphabets) {
    if (r < 1) fail_validation("alphabet sizes must be >= 1");
    n *= r;
    if (n > config::kWordSpaceMaxPoints)
      fail_bound("word space larger than " + std::to_string(config::kWordSpaceMaxPoints) +
                 " points");
  }
  return static_cast<int>(n);
}

Word WordSpace::word(int index) const {
  int n = points();
  if (index < 1 || index > n) fail_validation("word index out of range");
  Word w(alphabets.size());
  int rest = index - 1;
  for (int m = depth() - 1; m >= 0; --m) {
    int r = alphabets[std::size_t(m)];
    w[std::size_t(m)] = rest % r + 1;
    rest /= r;
  }
  return w;
}

int WordSpace::index(std::span<const int> w) const {
  if (static_cast<int>(w.size()) != depth())
    fail_validation("word length does not match the space depth");
  int idx = 0;
  for (int m = 0; m < depth(); ++m) {
    int r = alphabets[std::size_t(m)];
    int x = w[std::size_t(m)];
    if (x < 1 || x > r) fail_validation("word coordinate out of alphabet range");
    idx = idx * r + (x - 1);
  }
  return idx + 1;
}

WordSpace WordSpace::prefix(int d) const {
  if (d < 1 || d > depth()) fail_validation("prefix depth out of range");
  WordSpace s;
  s.alphabets.assign(alphabets.begin(), alphabets.begin() + d);
  return s;
}

bool WordSpace::prefix_of(const WordSpace& deeper) const {
  if (depth() > deeper.depth()) return false;
  return std::equal(alphabets.begin(), alphabets.end(), deeper.alphabets.begin());
}

std::optional<std::pair<Word, Word>> groupoid_compose(const std::pair<Word, Word>& a,
                                                      const std::pair<Word, Word>& b) {
  if (a.second != b.first) return std::nullopt;
  return std::pair<Word, Word>{a.first, b.second};
}

std::pair<Word, Word> groupoid_inverse(const std::pair<Word, Word>& a) {
  return {a.second, a.first};
}

std::pair<Word, Word> groupoid_range(const std::pair<Word, Word>& a) {
  return {a.first, a.first};
}

std::pair<Word, Word> groupoid_source(const std::pair<Word, Word>& a) {
  return {a.second, a.second};
}

TailGroupoid tail_groupoid(const WordSpace& space) {
  return TailGroupoid{space, BitRel::full(space.points())};
}

GSet GSet::empty(WordSpace space) { return GSet(std::move(space), {}); }

GSet GSet::from_pairs(WordSpace space, std::vector<std::pair<int, int>> elems) {
  int n = space.points();
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  std::set<int> rows, cols;
  for (auto [u, v] : elems) {
    if (u < 1 || u > n || v < 1 || v > n) fail_validation("G-set pair out of range");
    if (!rows.insert(u).second) fail_validation("range map not one-to-one on G-set");
    if (!cols.insert(v).second) fail_validation("source map not one-to-one on G-set");
  }
  return GSet(std::move(space), std::move(elems));
}

GSet GSet::prefix_set(const WordSpace& space, std::span<const int> pi,
                      std::span<const int> pj) {
  if (pi.size() != pj.size()) fail_validation("prefix pair with unequal lengths");
  int l = static_cast<int>(pi.size());
  if (l < 1 || l > space.depth()) fail_validation("prefix length out of range");
  WordSpace head = space.prefix(l);
  head.index(pi);  // range-checks the letters
  head.index(pj);
  std::vector<std::pair<int, int>> elems;
  // walk every common suffix
  int suffix_len = space.depth() - l;
  Word u(pi.begin(), pi.end()), v(pj.begin(), pj.end());
  u.resize(space.alphabets.size(), 1);
  v.resize(space.alphabets.size(), 1);
  for (;;) {
    elems.emplace_back(space.index(u), space.index(v));
    int m = suffix_len - 1;
    for (; m >= 0; --m) {
      std::size_t pos = std::size_t(l + m);
      if (u[pos] < space.alphabets[pos]) {
        ++u[pos];
        ++v[pos];
        break;
      }
      u[pos] = 1;
      v[pos] = 1;
    }
    if (m < 0) break;
  }
  return from_pairs(space, std::move(elems));
}

std::vector<int> GSet::rows() const {
  std::vector<int> out;
  out.reserve(elems_.size());
  for (auto [u, v] : elems_) out.push_back(u);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> GSet::cols() const {
  std::vector<int> out;
  out.reserve(elems_.size());
  for (auto [u, v] : elems_) out.push_back(v);
  std::sort(out.begin(), out.end());
  return out;
}

GSet GSet::inverse() const {
  std::vector<std::pair<int, int>> flipped;
  flipped.reserve(elems_.size());
  for (auto [u, v] : elems_) flipped.emplace_back(v, u);
  return from_pairs(space_, std::move(flipped));
}

bool GSet::contains(int u, int v) const {
  return std::binary_search(elems_.begin(), elems_.end(), std::pair<int, int>{u, v});
}

GSet refine_gset(const GSet& g, const WordSpace& deeper) {
  if (!g.space().prefix_of(deeper))
    fail_validation("refinement target is not a deeper extension of the G-set space");
  if (g.space().depth() == deeper.depth()) {
    return GSet::from_pairs(deeper, g.elems());
  }
  std::vector<std::pair<int, int>> elems;
  for (auto [u, v] : g.elems()) {
    Word wu = g.space().word(u), wv = g.space().word(v);
    GSet child = GSet::prefix_set(deeper, wu, wv);
    for (auto p : child.elems()) elems.push_back(p);
  }
  return GSet::from_pairs(deeper, std::move(elems));
}

std::vector<GSet> basis_gsets(const WordSpace& space) {
  std::vector<GSet> out;
  for (int l = 1; l <= space.depth(); ++l) {
    WordSpace head = space.prefix(l);
    int m = head.points();
    for (int i = 1; i <= m; ++i) {
      Word wi = head.word(i);
      for (int j = 1; j <= m; ++j) {
        Word wj = head.word(j);
        out.push_back(GSet::prefix_set(space, wi, wj));
      }
    }
  }
  return out;
}

std::vector<GSet> ideal_unit_listing(const WordSpace& space, const BitRel& F) {
  if (F.size() != space.points()) fail_validation("ideal set size mismatch");
  std::vector<GSet> out;
  for (int l = 1; l <= space.depth(); ++l) {
    WordSpace head = space.prefix(l);
    int m = head.points();
    for (int i = 1; i <= m; ++i) {
      Word wi = head.word(i);
      for (int j = 1; j <= m; ++j) {
        Word wj = head.word(j);
        GSet full_depth = GSet::prefix_set(space, wi, wj);
        bool inside = true;
        for (auto [u, v] : full_depth.elems())
          if (!F.test(u, v)) { inside = false; break; }
        if (inside) out.push_back(GSet::from_pairs(head, {{i, j}}));
      }
    }
  }
  return out;
}

std::vector<GSet> point_cover(const WordSpace& space, const BitRel& F) {
  if (F.size() != space.points()) fail_validation("ideal set size mismatch");
  std::vector<GSet> out;
  for (auto [u, v] : F.pairs()) out.push_back(GSet::from_pairs(space, {{u, v}}));
  return out;
}

bool lex_leq(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) fail_validation("lex comparison of words of unequal depth");
  for (std::size_t m = 0; m < a.size(); ++m) {
    if (a[m] != b[m]) return a[m] < b[m];
  }
  return true;
}

bool revlex_leq(std::span<const int> a, std::span<const int> b) {
  if (a.size() != b.size()) fail_validation("revlex comparison of words of unequal depth");
  for (std::size_t m = a.size(); m-- > 0;) {
    if (a[m] != b[m]) return a[m] < b[m];
  }
  return true;
}

int tower_rank(const Tower& tower, std::span<const int> word) {
  int depth = static_cast<int>(word.size());
  WordSpace space = WordSpace::from_tower(tower, depth);  // validates depth and letters
  space.index(word);
  int idx = word[0];
  for (int m = 2; m <= depth; ++m) {
    const EmbeddingSpec& step = tower.steps[std::size_t(m - 2)];
    int q = step.multiplicity;
    int x = word[std::size_t(m - 1)];
    if (step.kind == EmbeddingKind::Refinement) {
      idx = (idx - 1) * q + x;
    } else {
      idx = idx + (x - 1) * tower.size_at(m - 1);
    }
  }
  return idx;
}

OrderRelation order_from_comparator(const WordSpace& space, OrderKind kind,
                                    const Tower* tower) {
  int n = space.points();
  BitRel pairs(n);
  std::vector<Word> words;
  words.reserve(std::size_t(n));
  for (int i = 1; i <= n; ++i) words.push_back(space.word(i));

  std::vector<int> rank;
  if (kind == OrderKind::TowerOrder) {
    if (tower == nullptr) fail_validation("tower order needs a tower");
    rank.resize(std::size_t(n));
    for (int i = 1; i <= n; ++i) rank[std::size_t(i - 1)] = tower_rank(*tower, words[std::size_t(i - 1)]);
  }

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      bool leq = false;
      switch (kind) {
        case OrderKind::Lex: leq = lex_leq(words[std::size_t(i - 1)], words[std::size_t(j - 1)]); break;
        case OrderKind::Revlex: leq = revlex_leq(words[std::size_t(i - 1)], words[std::size_t(j - 1)]); break;
        case OrderKind::TowerOrder: leq = rank[std::size_t(i - 1)] <= rank[std::size_t(j - 1)]; break;
      }
      if (leq) pairs.set(i, j);
    }
  }

  OrderReport report = check_partial_order(WordRel{space, pairs});
  if (!report.is_partial || !report.is_total)
    fail_validation("comparator did not induce a total order");
  return OrderRelation{space, std::move(pairs)};
}

OrderReport check_partial_order(const WordRel& rel) {
  int n = rel.space.points();
  if (rel.pairs.size() != n) fail_validation("order relation size mismatch");
  BitRel t = rel.pairs.transposed();
  BitRel meet = rel.pairs;
  meet &= t;
  BitRel join = rel.pairs;
  join |= t;
  bool closed = compose(rel.pairs, rel.pairs).subset_of(rel.pairs);
  OrderReport r;
  r.is_partial = closed && meet == BitRel::identity(n);
  r.is_total = join == BitRel::full(n);
  r.is_equivalence = closed && rel.pairs == t;
  return r;
}

bool ideal_set_check(const OrderRelation& P, const BitRel& F) {
  if (F.size() != P.pairs.size()) fail_validation("ideal set size mismatch");
  if (!F.subset_of(P.pairs)) fail_validation("ideal set not contained in the order");
  return compose(P.pairs, compose(F, P.pairs)).subset_of(F);
}

bool spectrum_determines(const BitRel& F1, const BitRel& F2) { return F1 == F2; }

Dyadic::Dyadic(long long n, int k) {
  if (k < 0) fail_validation("dyadic with negative denominator exponent");
  num = n;
  log2_den = k;
  while (num != 0 && num % 2 == 0 && log2_den > 0) {
    num /= 2;
    --log2_den;
  }
  if (num == 0) log2_den = 0;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
  int k = std::max(a.log2_den, b.log2_den);
  if (k > 62) fail_validation("dyadic denominator overflow");
  __int128 n = (__int128(a.num) << (k - a.log2_den)) + (__int128(b.num) << (k - b.log2_den));
  if (n > __int128(0x7fffffffffffffffLL) || n < -__int128(0x7fffffffffffffffLL) - 1)
    fail_validation("dyadic arithmetic overflow");
  return Dyadic(static_cast<long long>(n), k);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
  __int128 n = __int128(a.num) * b.num;
  if (n > __int128(0x7fffffffffffffffLL) || n < -__int128(0x7fffffffffffffffLL) - 1)
    fail_validation("dyadic arithmetic overflow");
  int k = a.log2_den + b.log2_den;
  if (k > 62) fail_validation("dyadic denominator overflow");
  return Dyadic(static_cast<long long>(n), k);
}

std::string Dyadic::str() const {
  if (log2_den == 0) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(1LL << log2_den);
}

DyadicFunction DyadicFunction::zero(WordSpace space) { return DyadicFunction(std::move(space)); }

DyadicFunction DyadicFunction::indicator(const GSet& e) {
  DyadicFunction f(e.space());
  for (auto [u, v] : e.elems()) f.vals_[{u, v}] = Dyadic::one();
  return f;
}

DyadicFunction DyadicFunction::from_terms(WordSpace space,
                                          const std::vector<std::pair<GSet, Dyadic>>& terms) {
  DyadicFunction f(std::move(space));
  for (const auto& [e, c] : terms) {
    if (!(e.space() == f.space_)) fail_validation("G-set term on a different word space");
    if (c.is_zero()) fail_validation("zero coefficient in dyadic term list");
    for (auto [u, v] : e.elems()) {
      if (!f.vals_.emplace(std::pair<int, int>{u, v}, c).second)
        fail_validation("overlapping G-sets in dyadic term list");
    }
  }
  return f;
}

void DyadicFunction::put(int u, int v, const Dyadic& d) {
  if (d.is_zero())
    vals_.erase({u, v});
  else
    vals_[{u, v}] = d;
}

Dyadic DyadicFunction::value(int u, int v) const {
  auto it = vals_.find({u, v});
  return it == vals_.end() ? Dyadic() : it->second;
}

BitRel DyadicFunction::support() const {
  BitRel s(space_.points());
  for (const auto& [p, d] : vals_) s.set(p.first, p.second);
  return s;
}

DyadicFunction DyadicFunction::scaled(const Dyadic& c) const {
  DyadicFunction f(space_);
  if (c.is_zero()) return f;
  for (const auto& [p, d] : vals_) f.vals_[p] = d * c;
  return f;
}

std::vector<std::pair<GSet, Dyadic>> DyadicFunction::terms() const {
  // bucket by coefficient, then split each bucket greedily into
  // row/column-unique pieces; deterministic because vals_ is ordered
  std::vector<std::pair<GSet, Dyadic>> out;
  std::map<std::pair<long long, int>, std::vector<std::pair<int, int>>> buckets;
  for (const auto& [p, d] : vals_) buckets[{d.num, d.log2_den}].push_back(p);
  for (auto& [key, pairs] : buckets) {
    std::vector<std::pair<int, int>> rest = pairs;
    while (!rest.empty()) {
      std::set<int> rows, cols;
      std::vector<std::pair<int, int>> piece, leftover;
      for (auto p : rest) {
        if (rows.count(p.first) || cols.count(p.second)) {
          leftover.push_back(p);
        } else {
          rows.insert(p.first);
          cols.insert(p.second);
          piece.push_back(p);
        }
      }
      out.emplace_back(GSet::from_pairs(space_, std::move(piece)),
                       Dyadic(key.first, key.second));
      rest = std::move(leftover);
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first.elems() < b.first.elems(); });
  return out;
}

DyadicFunction operator+(const DyadicFunction& a, const DyadicFunction& b) {
  if (!(a.space_ == b.space_)) fail_validation("dyadic function space mismatch");
  DyadicFunction f = a;
  for (const auto& [p, d] : b.vals_) f.put(p.first, p.second, f.value(p.first, p.second) + d);
  return f;
}

std::vector<GSet> disjointify(const std::vector<GSet>& K) {
  std::vector<GSet> out;
  if (K.empty()) return out;
  const WordSpace& space = K.front().space();
  std::set<std::pair<int, int>> taken;
  for (const GSet& k : K) {
    if (!(k.space() == space)) fail_validation("disjointify needs G-sets of one depth");
    std::vector<std::pair<int, int>> kept;
    for (auto p : k.elems())
      if (!taken.count(p)) kept.push_back(p);
    for (auto p : kept) taken.insert(p);
    out.push_back(GSet::from_pairs(space, std::move(kept)));
  }
  return out;
}

DyadicFunction dyadic_generator(const std::vector<GSet>& E) {
  if (E.empty()) fail_validation("dyadic generator of an empty family");
  std::vector<std::pair<GSet, Dyadic>> terms;
  for (std::size_t i = 0; i < E.size(); ++i) {
    if (!(E[i].space() == E.front().space()))
      fail_validation("dyadic generator needs G-sets of one depth");
    if (i > 62) fail_bound("dyadic generator family longer than 62 sets");
    if (!E[i].empty_set())
      terms.emplace_back(E[i], Dyadic::half_power(static_cast<int>(i) + 1));
  }
  // from_terms re-checks pairwise disjointness
  return DyadicFunction::from_terms(E.front().space(), terms);
}

DyadicFunction compress_by(const GSet& e, const DyadicFunction& g) {
  if (!(e.space() == g.space())) fail_validation("compression depth mismatch");
  std::vector<int> rows = e.rows(), cols = e.cols();
  DyadicFunction out = DyadicFunction::zero(g.space());
  for (const auto& [p, d] : g.values()) {
    if (std::binary_search(rows.begin(), rows.end(), p.first) &&
        std::binary_search(cols.begin(), cols.end(), p.second))
      out = out + DyadicFunction::from_terms(
                      g.space(), {{GSet::from_pairs(g.space(), {p}), d}});
  }
  return out;
}

DyadicFunction convolve(const DyadicFunction& f, const DyadicFunction& h) {
  if (!(f.space() == h.space())) fail_validation("convolution depth mismatch");
  std::map<int, std::vector<std::pair<int, Dyadic>>> h_rows;
  for (const auto& [p, d] : h.values()) h_rows[p.first].emplace_back(p.second, d);
  std::map<std::pair<int, int>, Dyadic> acc;
  for (const auto& [p, x] : f.values()) {
    auto it = h_rows.find(p.second);
    if (it == h_rows.end()) continue;
    for (const auto& [b, y] : it->second) {
      auto key = std::pair<int, int>{p.first, b};
      auto found = acc.find(key);
      if (found == acc.end())
        acc.emplace(key, x * y);
      else
        found->second = found->second + x * y;
    }
  }
  DyadicFunction out = DyadicFunction::zero(f.space());
  for (const auto& [p, d] : acc)
    if (!d.is_zero())
      out = out + DyadicFunction::from_terms(f.space(),
                                             {{GSet::from_pairs(f.space(), {p}), d}});
  return out;
}

DyadicFunction involute(const DyadicFunction& f) {
  // coefficients are real dyadics, so conjugation is transposition
  std::vector<std::pair<GSet, Dyadic>> terms;
  for (const auto& [p, d] : f.values())
    terms.emplace_back(GSet::from_pairs(f.space(), {{p.second, p.first}}), d);
  return DyadicFunction::from_terms(f.space(), terms);
}

BitRel convolution_ideal_support(const OrderRelation& P, const DyadicFunction& g) {
  if (!(P.space == g.space())) fail_validation("ideal support depth mismatch");
  DyadicFunction algebra = DyadicFunction::zero(P.space);
  for (auto [u, v] : P.pairs.pairs())
    algebra = algebra + DyadicFunction::from_terms(
                            P.space, {{GSet::from_pairs(P.space, {{u, v}}), Dyadic::one()}});
  return convolve(convolve(algebra, g), algebra).support();
}

bool subordinate_check(const GSet& u, const GSet& v) {
  if (u.space().depth() < v.space().depth())
    fail_validation("subordinate candidate is shallower than the embedded unit");
  if (!v.space().prefix_of(u.space()))
    fail_validation("subordinate check across incompatible word spaces");
  GSet refined = refine_gset(v, u.space());
  DyadicFunction compressed = compress_by(u, DyadicFunction::indicator(refined));
  return compressed == DyadicFunction::indicator(u);
}

std::vector<GSet> subordinate_deletion(const std::vector<GSet>& units) {
  for (std::size_t i = 1; i < units.size(); ++i) {
    int d0 = units[i - 1].space().depth(), d1 = units[i].space().depth();
    if (d1 < d0) fail_validation("unit listing is not level-major");
    if (d1 == d0 && !(units[i - 1].elems() < units[i].elems()))
      fail_validation("unit listing is not row-major within a level");
  }
  std::vector<GSet> kept;
  for (const GSet& u : units) {
    bool subordinate = false;
    for (const GSet& v : kept) {
      if (v.space().depth() <= u.space().depth() && subordinate_check(u, v)) {
        subordinate = true;
        break;
      }
    }
    if (!subordinate) kept.push_back(u);
  }
  return kept;
}

Rational pi_coordinate(std::span<const int> word, int r) {
  if (r < 1) fail_validation("pi map needs r >= 1");
  Rational sum(0);
  long long den = 1;
  for (std::size_t m = 0; m < word.size(); ++m) {
    int x = word[m];
    if (x < 1 || x > r) fail_validation("pi map coordinate out of range");
    den *= r;
    sum = sum + Rational(x - 1, den);
  }
  return sum;
}

std::map<int, int> partial_homeo_of_isometry(const ExactMatrix& v) {
  int n = v.size();
  std::vector<int> row_used(std::size_t(n) + 1, 0), col_used(std::size_t(n) + 1, 0);
  std::map<int, int> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const RComplex& z = v.at(i, j);
      if (z.is_zero()) continue;
      if (i > j) fail_validation("isometry is not in the triangular algebra");
      if (++row_used[std::size_t(i)] > 1 || ++col_used[std::size_t(j)] > 1)
        fail_validation("isometry is not normalising: multiple entries in a row or column");
      if (!(z.re * z.re + z.im * z.im == Rational(1)))
        fail_validation("isometry entry is not unimodular");
      out[j] = i;  // v e_jj v* = e_ii
    }
  }
  return out;
}

}  // namespace groupoidal
