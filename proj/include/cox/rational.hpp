#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cox {

using BigInt = mpz_class;

/// Exact fraction, always in lowest terms with a positive denominator.
/// Zero is 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(int v) : value_(v) {}
  Rational(long v) : value_(v) {}
  Rational(long long v) : value_(BigInt(std::to_string(v))) {}
  Rational(const BigInt& v) : value_(v) {}
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "a" or "a/b" with optional leading sign.
  static Rational parse(std::string_view text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  /// The integer value when this is an integer fitting in 64 bits.
  std::optional<std::int64_t> to_int64() const;

  /// "a" for integers, "a/b" otherwise.
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Integer power; negative exponents invert.
  Rational pow(long e) const;

  /// Canonical form check, used by property tests.
  bool is_canonical() const;

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);
/// Generalized binomial coefficient C(x, k) for rational x.
Rational binomial(const Rational& x, long k);

}  // namespace cox
