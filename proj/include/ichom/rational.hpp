#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace ichom {

using Integer = mpz_class;

// Exact fraction in lowest terms with positive denominator. Thin value wrapper
// over GMP so that expression templates never leak into user code.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : value_(static_cast<long>(value)) {}  // NOLINT
  Rational(long long numerator, long long denominator);
  Rational(const Integer& numerator, const Integer& denominator);
  explicit Rational(const Integer& value) : value_(value) {}
  explicit Rational(const mpq_class& value) : value_(value) { value_.canonicalize(); }

  // Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input
  // or a zero denominator.
  static Rational parse(std::string_view text);

  Integer numerator() const { return value_.get_num(); }
  Integer denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  Rational abs() const;
  Rational reciprocal() const;
  Integer floor() const;
  Integer ceil() const;
  // Fractional part in [0,1).
  Rational frac() const;
  double to_double() const { return value_.get_d(); }

  // "p/q" in lowest terms, or "p" when q = 1.
  std::string to_string() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::size_t hash() const;

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);
Rational pow2(int exponent);  // 2^exponent, exponent may be negative
Integer factorial(int n);

// Converts an Integer that is known to fit; throws std::overflow_error otherwise.
long long to_int64(const Integer& value);

}  // namespace ichom

template <>
struct std::hash<ichom::Rational> {
  std::size_t operator()(const ichom::Rational& q) const { return q.hash(); }
};
