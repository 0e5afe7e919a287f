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

#include <doctest.h>

#include "oracles.hpp"
#include "qes/rational.hpp"

using qes::Rational;

TEST_SUITE("rational") {

TEST_CASE("textbook arithmetic")
{
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(Rational(-1, 3) < Rational(1, 4));
  CHECK(Rational(7, 3) > Rational(2));
}

TEST_CASE("canonical form")
{
  Rational half(2, 4);
  CHECK(half.numerator() == 1);
  CHECK(half.denominator() == 2);
  CHECK(half.str() == "1/2");

  Rational neg(3, -6);
  CHECK(neg.numerator() == -1);
  CHECK(neg.denominator() == 2);

  Rational zero(0, -5);
  CHECK(zero.is_zero());
  CHECK(zero.denominator() == 1);
  CHECK(zero.str() == "0");
  CHECK(Rational(6, 3).str() == "2");
}

TEST_CASE("huge operands cancel exactly")
{
  // oracle: the same product in boost cpp_rational
  const oracle::BigInt ten40 = boost::multiprecision::pow(oracle::BigInt(10), 40);
  const oracle::BigRational expected = oracle::BigRational(ten40, 3) * oracle::BigRational(3, ten40);
  REQUIRE(expected == 1);

  const Rational a = Rational::parse("10000000000000000000000000000000000000000/3");
  const Rational b = Rational::parse("3/10000000000000000000000000000000000000000");
  CHECK(a * b == oracle::from_big(expected));
  CHECK((a * b).str() == "1");
}

TEST_CASE("division by zero is a distinct error")
{
  CHECK_THROWS_AS(Rational(1) / Rational(0), qes::DivisionByZero);
  CHECK_THROWS_AS(Rational(1, 0), qes::DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("3/0"), qes::DivisionByZero);
  Rational x(5);
  CHECK_THROWS_AS(x /= Rational(), qes::DivisionByZero);
  CHECK(x == Rational(5));
}

TEST_CASE("parsing")
{
  CHECK(Rational::parse("-12/8") == Rational(-3, 2));
  CHECK(Rational::parse("+7") == Rational(7));
  CHECK(Rational::parse("0/9").is_zero());
  CHECK_THROWS_AS(Rational::parse(""), qes::ParseError);
  CHECK_THROWS_AS(Rational::parse("1.5"), qes::ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), qes::ParseError);
  CHECK_THROWS_AS(Rational::parse("a/b"), qes::ParseError);
  CHECK_THROWS_AS(Rational::parse("/3"), qes::ParseError);
}

TEST_CASE("exact square roots")
{
  CHECK(Rational(9, 4).exact_sqrt() == Rational(3, 2));
  CHECK_FALSE(Rational(1, 2).exact_sqrt().has_value());
  CHECK_FALSE(Rational(-4).exact_sqrt().has_value());
  CHECK(Rational(0).exact_sqrt() == Rational(0));
}

TEST_CASE("pow and pow2")
{
  CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
  CHECK(qes::pow2(10) == Rational(1024));
  CHECK(qes::pow2(-3) == Rational(1, 8));
}

TEST_CASE("field axioms on random big values")
{
  std::mt19937_64 rng(20261015);
  for (int trial = 0; trial < 200; ++trial) {
    const Rational a = oracle::random_rational(rng, 30);
    const Rational b = oracle::random_rational(rng, 25);
    const Rational c = oracle::random_rational(rng, 20);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rational(0));
    if (!b.is_zero())
      CHECK((a / b) * b == a);
  }
}

TEST_CASE("string round trip")
{
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const Rational a = oracle::random_rational(rng, 1 + trial % 40);
    CHECK(Rational::parse(a.str()) == a);
  }
}

TEST_CASE("conversion to floating point is explicit and accurate")
{
  CHECK(Rational(1, 4).to_double() == 0.25);
  const long double third = Rational(1, 3).to_long_double();
  CHECK(std::fabs(third - 1.0L / 3.0L) <= 1e-19L);
  const Rational big = Rational::parse("-123456789012345678901234567890/7");
  CHECK(std::fabs(big.to_long_double() / -1.763668414462081127e28L - 1.0L) < 1e-17L);
}

}
