#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include <gmpxx.h>

#include "bac/error.hpp"

namespace bac {

enum class FieldKind { rationals, prime_field };

// Deterministic Miller-Rabin, exact for every 64-bit input.
inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
  };
  auto powmod = [&](std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    b %= m;
    while (e) {
      if (e & 1) r = mulmod(r, b, m);
      b = mulmod(b, b, m);
      e >>= 1;
    }
    return r;
  };
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

struct FieldDesc {
  FieldKind kind = FieldKind::rationals;
  std::uint64_t p = 0;

  static FieldDesc rationals() { return FieldDesc{FieldKind::rationals, 0}; }

  static FieldDesc prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw Error("field modulus " + std::to_string(p) + " is not prime");
    return FieldDesc{FieldKind::prime_field, p};
  }

  bool is_rational() const { return kind == FieldKind::rationals; }

  bool operator==(const FieldDesc&) const = default;

  std::string str() const {
    return is_rational() ? std::string("Q") : "F" + std::to_string(p);
  }
};

inline void check_same_field(const FieldDesc& a, const FieldDesc& b) {
  if (!(a == b)) throw FieldMismatch("field mismatch: " + a.str() + " vs " + b.str());
}

// Exact field element: an arbitrary-precision rational in lowest terms, or a
// residue in [0, p).  Every value carries its field so mixed-field arithmetic
// is rejected rather than silently coerced.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  static Scalar zero(const FieldDesc& f) { return Scalar(f); }

  static Scalar one(const FieldDesc& f) {
    Scalar s(f);
    if (f.is_rational())
      s.q_ = 1;
    else
      s.r_ = f.p > 1 ? 1 : 0;
    return s;
  }

  static Scalar from_int(const FieldDesc& f, long long v) {
    Scalar s(f);
    if (f.is_rational()) {
      s.q_ = mpq_class(static_cast<long>(v));
    } else {
      long long m = v % static_cast<long long>(f.p);
      if (m < 0) m += static_cast<long long>(f.p);
      s.r_ = static_cast<std::uint64_t>(m);
    }
    return s;
  }

  static Scalar rational(const mpq_class& q) {
    Scalar s(FieldDesc::rationals());
    s.q_ = q;
    s.q_.canonicalize();
    return s;
  }

  static Scalar rational(long long num, long long den) {
    if (den == 0) throw Error("zero denominator");
    Scalar s(FieldDesc::rationals());
    s.q_ = mpq_class(static_cast<long>(num), static_cast<long>(den));
    s.q_.canonicalize();
    return s;
  }

  static Scalar residue(const FieldDesc& f, std::uint64_t v) {
    if (f.is_rational()) throw Error("residue() needs a prime field");
    Scalar s(f);
    s.r_ = v % f.p;
    return s;
  }

  // Parses the canonical encoding: "num/den" or "num" over Q.
  static Scalar parse_rational(std::string_view text) {
    std::string t(text);
    auto slash = t.find('/');
    try {
      mpz_class num(slash == std::string::npos ? t : t.substr(0, slash));
      mpz_class den(slash == std::string::npos ? std::string("1") : t.substr(slash + 1));
      if (den == 0) throw Error("zero denominator");
      Scalar s(FieldDesc::rationals());
      s.q_ = mpq_class(num, den);
      s.q_.canonicalize();
      return s;
    } catch (const std::invalid_argument&) {
      throw ParseError("bad rational literal: " + t);
    }
  }

  const FieldDesc& field() const { return f_; }

  bool is_zero() const { return f_.is_rational() ? q_ == 0 : r_ == 0; }

  bool is_one() const { return f_.is_rational() ? q_ == 1 : r_ == 1; }

  friend Scalar operator+(const Scalar& a, const Scalar& b) {
    check_same_field(a.f_, b.f_);
    Scalar s(a.f_);
    if (a.f_.is_rational()) {
      s.q_ = a.q_ + b.q_;
    } else {
      std::uint64_t p = a.f_.p;
      s.r_ = a.r_ >= p - b.r_ && b.r_ != 0 ? a.r_ - (p - b.r_) : a.r_ + b.r_;
    }
    return s;
  }

  friend Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

  Scalar operator-() const {
    Scalar s(f_);
    if (f_.is_rational())
      s.q_ = -q_;
    else
      s.r_ = r_ == 0 ? 0 : f_.p - r_;
    return s;
  }

  friend Scalar operator*(const Scalar& a, const Scalar& b) {
    check_same_field(a.f_, b.f_);
    Scalar s(a.f_);
    if (a.f_.is_rational())
      s.q_ = a.q_ * b.q_;
    else
      s.r_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(a.r_) * b.r_) % a.f_.p);
    return s;
  }

  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  Scalar inverse() const {
    if (is_zero()) throw NotInvertible("inverse of zero");
    Scalar s(f_);
    if (f_.is_rational()) {
      s.q_ = 1 / q_;
    } else {
      // extended Euclid on (r_, p); r_ is a unit mod prime p
      std::int64_t t = 0, newt = 1;
      std::int64_t r = static_cast<std::int64_t>(f_.p), newr = static_cast<std::int64_t>(r_);
      while (newr != 0) {
        std::int64_t q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
      }
      if (t < 0) t += static_cast<std::int64_t>(f_.p);
      s.r_ = static_cast<std::uint64_t>(t);
    }
    return s;
  }

  Scalar pow(long long e) const {
    Scalar base = e < 0 ? inverse() : *this;
    unsigned long long n = e < 0 ? static_cast<unsigned long long>(-(e + 1)) + 1 : static_cast<unsigned long long>(e);
    Scalar acc = one(f_);
    while (n) {
      if (n & 1) acc *= base;
      base *= base;
      n >>= 1;
    }
    return acc;
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    if (!(a.f_ == b.f_)) return false;
    return a.f_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
  }

  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  // Canonical encoding: "num/den" (den omitted when 1) over Q, the residue over F_p.
  std::string str() const {
    return f_.is_rational() ? q_.get_str() : std::to_string(r_);
  }

  const mpq_class& rat() const { return q_; }
  std::uint64_t res() const { return r_; }

 private:
  explicit Scalar(const FieldDesc& f) : f_(f) {}

  FieldDesc f_ = FieldDesc::rationals();
  mpq_class q_;
  std::uint64_t r_ = 0;
};

}  // namespace bac
