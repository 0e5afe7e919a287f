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

#ifndef QES_TPOLY_HPP
#define QES_TPOLY_HPP

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "qes/rational.hpp"

namespace qes {

/**
 * Dense univariate polynomial in the dimensionless coupling t with
 * rational coefficients. Coefficient i multiplies t^i.
 *
 * Canonical form: no trailing zero coefficients, so the zero polynomial
 * has an empty coefficient vector and `==` is structural equality.
 */
class TPoly {
public:
  TPoly() = default;
  TPoly(int c) : TPoly(Rational(c)) {} // NOLINT(implicit)
  TPoly(const Rational& c);            // NOLINT(implicit)
  TPoly(float) = delete;
  TPoly(double) = delete;
  TPoly(long double) = delete;
  TPoly(std::initializer_list<Rational> coeffs);
  explicit TPoly(std::vector<Rational> coeffs);

  /// The monomial c * t^power.
  static TPoly monomial(const Rational& c, unsigned power);
  static TPoly t() { return monomial(1, 1); }

  bool is_zero() const { return c_.empty(); }
  /// Degree of the polynomial; -1 for zero.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  /// Coefficient of t^i (zero beyond the stored range).
  Rational coeff(std::size_t i) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  /// True when every nonzero coefficient sits on a power with parity `p`.
  bool has_parity(int p) const;

  TPoly operator-() const;
  TPoly& operator+=(const TPoly& o);
  TPoly& operator-=(const TPoly& o);
  TPoly& operator*=(const TPoly& o);
  TPoly& operator*=(const Rational& s);
  TPoly& operator/=(const Rational& s);

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend TPoly operator*(TPoly a, const Rational& s) { return a *= s; }
  friend TPoly operator*(const Rational& s, TPoly a) { return a *= s; }
  friend TPoly operator/(TPoly a, const Rational& s) { return a /= s; }

  friend bool operator==(const TPoly& a, const TPoly& b) = default;

  Rational evaluate(const Rational& t0) const;
  TPoly derivative() const;

  /// One "num/den" string per coefficient, index = power of t.
  std::vector<std::string> to_strings() const;
  static TPoly from_strings(const std::vector<std::string>& coeffs);

  /// Human-readable form such as "-1/4*t^4 + t".
  std::string pretty() const;

private:
  void trim();
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const TPoly& p);

} // namespace qes

#endif // QES_TPOLY_HPP
