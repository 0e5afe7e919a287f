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

#include "qes/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

namespace qes {

namespace {

mpz_class parse_integer(std::string_view s, std::string_view whole)
{
  std::size_t i = 0;
  if (!s.empty() && (s[0] == '-' || s[0] == '+'))
    i = 1;
  if (i == s.size())
    throw ParseError("not a rational: '" + std::string(whole) + "'");
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j])))
      throw ParseError("not a rational: '" + std::string(whole) + "'");
  // mpz_class rejects a leading '+'
  return mpz_class(std::string(s[0] == '+' ? s.substr(1) : s), 10);
}

} // namespace

Rational::Rational(long long v)
{
  // mpz has no long long constructor on every platform
  v_ = mpq_class(mpz_class(std::to_string(v), 10));
}

Rational::Rational(const mpz_class& num, const mpz_class& den)
{
  if (den == 0)
    throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(long long num, long long den)
  : Rational(Rational(num).v_.get_num(), Rational(den).v_.get_num())
{
}

Rational Rational::parse(std::string_view text)
{
  auto slash = text.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_integer(text, text));
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw ParseError("sign not allowed in denominator: '" + std::string(text) + "'");
  return Rational(parse_integer(text.substr(0, slash), text), parse_integer(den_text, text));
}

Rational Rational::operator-() const { return Rational(mpq_class(-v_)); }

Rational& Rational::operator+=(const Rational& o)
{
  v_ += o.v_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o)
{
  v_ -= o.v_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o)
{
  v_ *= o.v_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o)
{
  if (o.is_zero())
    throw DivisionByZero();
  v_ /= o.v_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b)
{
  int c = cmp(a.v_, b.v_);
  if (c < 0)
    return std::strong_ordering::less;
  if (c > 0)
    return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::pow(unsigned e) const
{
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), e);
  return Rational(n, d);
}

std::optional<Rational> Rational::exact_sqrt() const
{
  if (sign() < 0)
    return std::nullopt;
  const auto& n = v_.get_num();
  const auto& d = v_.get_den();
  if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
  return Rational(rn, rd);
}

std::string Rational::str() const
{
  if (is_integer())
    return v_.get_num().get_str(10);
  return v_.get_num().get_str(10) + "/" + v_.get_den().get_str(10);
}

long double Rational::to_long_double() const
{
  if (is_zero())
    return 0.0L;
  constexpr long precision = 80;
  mpz_class num = ::abs(v_.get_num());
  const mpz_class& den = v_.get_den();
  long shift = precision - static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2)) +
               static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  mpz_class q;
  if (shift >= 0) {
    mpz_class scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    mpz_tdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  } else {
    mpz_class scaled;
    mpz_mul_2exp(scaled.get_mpz_t(), den.get_mpz_t(), static_cast<mp_bitcnt_t>(-shift));
    mpz_tdiv_q(q.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
  }
  long double r = 0.0L;
  for (long i = static_cast<long>(mpz_size(q.get_mpz_t())) - 1; i >= 0; --i)
    r = std::ldexp(r, GMP_NUMB_BITS) + static_cast<long double>(mpz_getlimbn(q.get_mpz_t(), i));
  r = std::ldexp(r, static_cast<int>(-shift));
  return sign() < 0 ? -r : r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational pow2(int e)
{
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

} // namespace qes
