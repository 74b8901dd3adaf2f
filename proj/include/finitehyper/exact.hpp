#pragma once

// Exact scalars: GMP-backed rationals, Pochhammer symbols, binomials and
// reduction modulo a prime.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "finitehyper/errors.hpp"

namespace finitehyper {

using BigInt = mpz_class;

/// Arbitrary-precision rational, always canonical (reduced, positive
/// denominator), so `==` is structural equality.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const BigInt& value) : value_(value) {}

  /// Parses "p", "-p", "p/q". Throws ConfigError on malformed input and
  /// DivisionByZero on a zero denominator.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational inverse() const;
  double to_double() const { return value_.get_d(); }
  std::string str() const;

  Rational& operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    r.value_ = -value_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_{0};
};

/// Two independently computed values that an identity claims are equal.
struct SidePair {
  Rational lhs;
  Rational rhs;
  bool equal() const { return lhs == rhs; }
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }
std::ostream& operator<<(std::ostream& os, const Rational& r);

/// (a)_m = a(a+1)...(a+m-1), computed left to right; (a)_0 = 1.
Rational rising_factorial(const Rational& a, unsigned m);

/// True iff some factor a+j (0 <= j < m) is zero.
bool rising_factorial_is_zero(const Rational& a, unsigned m);

/// n!/(k!(n-k)!), and 0 when k > n.
BigInt binomial(unsigned long n, unsigned long k);

BigInt factorial(unsigned long n);

bool is_prime(std::uint64_t n);

/// An element of Z/pZ for a prime p.
class ResidueClass {
 public:
  ResidueClass(std::uint64_t value, std::uint64_t modulus);

  std::uint64_t value() const { return value_; }
  std::uint64_t modulus() const { return modulus_; }

  friend ResidueClass operator+(const ResidueClass& a, const ResidueClass& b);
  friend ResidueClass operator-(const ResidueClass& a, const ResidueClass& b);
  friend ResidueClass operator*(const ResidueClass& a, const ResidueClass& b);
  friend bool operator==(const ResidueClass&, const ResidueClass&) = default;

  std::string str() const;

 private:
  std::uint64_t value_;
  std::uint64_t modulus_;
};

/// n * d^{-1} mod p for x = n/d. Throws DenominatorDivisibleByP when p | d
/// and std::invalid_argument when p is not prime.
ResidueClass reduce_mod_p(const Rational& x, std::uint64_t p);

}  // namespace finitehyper
