#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "groupoidal/error.hpp"

namespace groupoidal {

// Exact rational arithmetic on int64 with __int128 intermediates. Values in
// this project stay tiny (prime entries, unimodular phases, dyadic weights);
// anything that would leave int64 range is a hard error, never a rounding.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rational(long long n, long long d) {
    if (d == 0) fail_validation("rational with zero denominator");
    num = n;
    den = d;
    normalize();
  }

  void normalize() {
    if (den < 0) {
      num = -num;
      den = -den;
    }
    long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (num == 0) den = 1;
  }

  bool is_zero() const { return num == 0; }

  static Rational from128(__int128 n, __int128 d) {
    if (d == 0) fail_validation("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    __int128 a = n < 0 ? -n : n;
    __int128 g = gcd128(a, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lo = -__int128(0x7fffffffffffffffLL) - 1;
    constexpr __int128 hi = __int128(0x7fffffffffffffffLL);
    if (n < lo || n > hi || d > hi)
      fail_validation("rational arithmetic overflow");
    Rational r;
    r.num = static_cast<long long>(n);
    r.den = static_cast<long long>(d);
    if (r.num == 0) r.den = 1;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return from128(__int128(a.num) * b.den + __int128(b.num) * a.den,
                   __int128(a.den) * b.den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return from128(__int128(a.num) * b.den - __int128(b.num) * a.den,
                   __int128(a.den) * b.den);
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return from128(__int128(a.num) * b.num, __int128(a.den) * b.den);
  }
  Rational operator-() const { return Rational(-num, den); }

  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

 private:
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) {
      __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
};

struct RComplex {
  Rational re, im;

  RComplex() = default;
  RComplex(Rational r) : re(r) {}  // NOLINT
  RComplex(Rational r, Rational i) : re(r), im(i) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  RComplex conj() const { return RComplex(re, -im); }

  friend RComplex operator+(const RComplex& a, const RComplex& b) {
    return RComplex(a.re + b.re, a.im + b.im);
  }
  friend RComplex operator*(const RComplex& a, const RComplex& b) {
    return RComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
  }
  bool operator==(const RComplex& o) const { return re == o.re && im == o.im; }
};

}  // namespace groupoidal
