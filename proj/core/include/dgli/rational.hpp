#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dgli {

using Integer = mpz_class;

// Arbitrary-precision rational, always stored reduced with positive
// denominator. Equality is structural, which is sound only because every
// construction path canonicalizes eagerly.
class Rational {
 public:
  Rational() : value_(0) {}
  Rational(long n) : value_(n) {}  // NOLINT: implicit by design
  Rational(long num, long den) { init(Integer(num), Integer(den)); }
  explicit Rational(const Integer& n) : value_(n) {}
  Rational(const Integer& num, const Integer& den) { init(num, den); }

  static Rational from_string(std::string_view s);

  const Integer& numerator() const { return value_.get_num(); }
  const Integer& denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& o) { value_ += o.value_; return *this; }
  Rational& operator-=(const Rational& o) { value_ -= o.value_; return *this; }
  Rational& operator*=(const Rational& o) { value_ *= o.value_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    value_ /= o.value_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.value_ == b.value_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) < 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) <= 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("rational division by zero");
    return Rational(mpq_class(1 / value_));
  }

  // Canonical serialization: always "p/q", integers included ("3" -> "3/1").
  std::string str() const;
  // Human-readable form: bare integer when the denominator is 1.
  std::string display() const;

 private:
  explicit Rational(const mpq_class& q) : value_(q) { /* mpq ops canonicalize */ }

  void init(const Integer& num, const Integer& den) {
    if (sgn(den) == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num) / mpq_class(den);
  }

  mpq_class value_;
};

// n! as an exact integer.
Integer factorial(unsigned long n);

// Binomial coefficient on all integer pairs: standard C(n, k) for
// 0 <= k <= n, zero outside that range, with the single extension
// C(-1, -1) = 1 so that Pascal's rule holds along the k = 0 edge.
Integer binomial_ext(long n, long k);

inline Rational rat(long num, long den = 1) { return Rational(num, den); }

}  // namespace dgli
