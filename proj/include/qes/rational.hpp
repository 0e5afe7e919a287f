/*
   Copyright 2026 The qes-sextic Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QES_RATIONAL_HPP
#define QES_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace qes {

/// Raised by every exact division whose divisor is zero.
class DivisionByZero : public std::domain_error {
public:
  DivisionByZero() : std::domain_error("exact division by zero") {}
};

/// Raised when a string is not of the form "num" or "num/den".
class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Arbitrary-precision signed rational, always in lowest terms with a
 * positive denominator. Zero is 0/1.
 *
 * There is deliberately no implicit conversion to or from floating point;
 * `to_double()` is the single explicit exit into inexact arithmetic.
 */
class Rational {
public:
  Rational() = default;
  Rational(int v) : v_(v) {}                       // NOLINT(implicit)
  Rational(long v) : v_(v) {}                      // NOLINT(implicit)
  Rational(long long v);                           // NOLINT(implicit)
  Rational(float) = delete;
  Rational(double) = delete;
  Rational(long double) = delete;
  Rational(const mpz_class& v) : v_(v) {}          // NOLINT(implicit)
  Rational(const mpz_class& num, const mpz_class& den);
  Rational(long long num, long long den);

  /// Parses "num" or "num/den" (optional leading sign, base 10).
  static Rational parse(std::string_view text);

  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

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

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  Rational abs() const;
  Rational pow(unsigned e) const;

  /// Exact square root when this value is the square of a rational.
  std::optional<Rational> exact_sqrt() const;

  /// "num/den", with "/den" omitted when den == 1.
  std::string str() const;

  double to_double() const { return v_.get_d(); }
  long double to_long_double() const;

  const mpq_class& raw() const { return v_; }

private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// 2^e as an exact rational (e may be negative).
Rational pow2(int e);

} // namespace qes

#endif // QES_RATIONAL_HPP
