#include "groupoidal/exact_matrix.hpp"

#include <map>
#include <string>
#include <utility>

#include "groupoidal/error.hpp"

namespace groupoidal {

std::size_t ExactMatrix::idx(int i, int j) const {
  if (i < 1 || i > n_ || j < 1 || j > n_)
    fail_validation("matrix index (" + std::to_string(i) + "," + std::to_string(j) +
                    ") out of range for n=" + std::to_string(n_));
  return std::size_t(i - 1) * std::size_t(n_) + std::size_t(j - 1);
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n);
  for (int i = 1; i <= n; ++i) m.at(i, i) = RComplex(Rational(1));
  return m;
}

bool ExactMatrix::is_zero() const {
  for (const RComplex& z : e_)
    if (!z.is_zero()) return false;
  return true;
}

BitRel ExactMatrix::support() const {
  BitRel s(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j)
      if (!at(i, j).is_zero()) s.set(i, j);
  return s;
}

ExactMatrix ExactMatrix::adjoint() const {
  ExactMatrix m(n_);
  for (int i = 1; i <= n_; ++i)
    for (int j = 1; j <= n_; ++j) m.at(j, i) = at(i, j).conj();
  return m;
}

ExactMatrix operator+(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.n_ != b.n_) fail_validation("size mismatch in matrix sum");
  ExactMatrix m(a.n_);
  for (std::size_t k = 0; k < m.e_.size(); ++k) m.e_[k] = a.e_[k] + b.e_[k];
  return m;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.n_ != b.n_) fail_validation("size mismatch in matrix product");
  int n = a.n_;
  ExactMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= n; ++k) {
      const RComplex& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 1; j <= n; ++j) {
        const RComplex& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        m.at(i, j) = m.at(i, j) + aik * bkj;
      }
    }
  }
  return m;
}

ExactMatrix matrix_unit(int n, int i, int j) {
  ExactMatrix m(n);
  m.at(i, j) = RComplex(Rational(1));
  return m;
}

ExactMatrix compress(int i, const ExactMatrix& A, int j) {
  ExactMatrix m(A.size());
  m.at(i, j) = A.at(i, j);
  return m;
}

bool in_algebra(const ExactMatrix& a, const SupportRelation& P) {
  if (a.size() != P.n()) fail_validation("size mismatch in algebra membership");
  return a.support().subset_of(P.pair_set());
}

namespace {

constexpr int kPrimes[] = {2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,
                           41,  43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,
                           97,  101, 103, 107, 109, 113, 127, 131, 137, 139, 149, 151,
                           157, 163, 167, 173, 179, 181, 191, 193, 197, 199, 211, 223,
                           227, 229, 233, 239, 241, 251, 257, 263, 269, 271, 277, 281,
                           283, 293, 307, 311};

int nth_prime(std::size_t k) {
  if (k < sizeof(kPrimes) / sizeof(kPrimes[0])) return kPrimes[k];
  // generic-entry matrices only need as many primes as pairs at desk scale
  int candidate = kPrimes[sizeof(kPrimes) / sizeof(kPrimes[0]) - 1];
  std::size_t have = sizeof(kPrimes) / sizeof(kPrimes[0]) - 1;
  while (have < k) {
    ++candidate;
    bool prime = candidate > 1;
    for (int d = 2; d * d <= candidate && prime; ++d)
      if (candidate % d == 0) prime = false;
    if (prime) ++have;
  }
  return candidate;
}

}  // namespace

ExactMatrix generic_member(const BitRel& support) {
  ExactMatrix m(support.size());
  std::size_t k = 0;
  for (auto [i, j] : support.pairs()) m.at(i, j) = RComplex(Rational(nth_prime(k++)));
  return m;
}

BitRel numeric_generated_support(const SupportRelation& P, const ExactMatrix& g,
                                 int max_iters) {
  if (!in_algebra(g, P)) fail_validation("generator matrix is not in A(P)");
  int n = P.n();
  if (max_iters <= 0) max_iters = n * n;
  if (max_iters < 1) max_iters = 1;

  std::vector<ExactMatrix> units;
  for (auto [i, j] : P.pair_set().pairs()) units.push_back(matrix_unit(n, i, j));

  // Distinct products seen so far, keyed by their exact entries.
  auto key_of = [n](const ExactMatrix& m) {
    std::vector<long long> key;
    key.reserve(std::size_t(n) * std::size_t(n) * 4);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const RComplex& z = m.at(i, j);
        key.push_back(z.re.num);
        key.push_back(z.re.den);
        key.push_back(z.im.num);
        key.push_back(z.im.den);
      }
    return key;
  };

  std::map<std::vector<long long>, bool> seen;
  std::vector<ExactMatrix> pool;
  BitRel support = g.support();
  if (!g.is_zero()) {
    seen[key_of(g)] = true;
    pool.push_back(g);
  }

  bool left = true;
  for (int round = 0; round < max_iters; ++round) {
    std::vector<ExactMatrix> fresh;
    for (const ExactMatrix& m : pool) {
      for (const ExactMatrix& u : units) {
        ExactMatrix prod = left ? u * m : m * u;
        if (prod.is_zero()) continue;
        auto key = key_of(prod);
        if (seen.emplace(std::move(key), true).second) fresh.push_back(std::move(prod));
      }
    }
    BitRel grown = support;
    for (const ExactMatrix& m : fresh) {
      grown |= m.support();
      pool.push_back(m);
    }
    bool stable = grown == support && fresh.empty();
    support = std::move(grown);
    left = !left;
    if (stable && round > 0) return support;
  }
  // one final stability probe: a full left+right sweep must add nothing
  for (const ExactMatrix& m : pool) {
    for (const ExactMatrix& u : units) {
      if (!(u * m).support().subset_of(support) ||
          !((m * u).support().subset_of(support)))
        fail_validation("numeric ideal support did not reach a fixed point within max_iters");
    }
  }
  return support;
}

}  // namespace groupoidal
