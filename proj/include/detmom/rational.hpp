#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace detmom {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. All arithmetic is exact; division by zero throws.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}            // NOLINT(google-explicit-constructor)
  Rational(long n) : v_(n) {}           // NOLINT(google-explicit-constructor)
  Rational(long long n);                // NOLINT(google-explicit-constructor)
  explicit Rational(const mpz_class& n) : v_(n) {}
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "p", "-p" or "p/q" with optional sign on the numerator.
  static Rational parse(std::string_view text);

  const mpz_class& numerator() const { return v_.get_num(); }
  const mpz_class& denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

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
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.v_ < b.v_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.v_ <= b.v_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return b <= a;
  }

  Rational abs() const;

  /// Exact integer power; negative exponents require a nonzero base.
  Rational pow(long e) const;

  /// "p/q", or just "p" when the denominator is one.
  std::string str() const;

  double to_double() const { return v_.get_d(); }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;  // kept canonical by every constructor and operator
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace detmom
