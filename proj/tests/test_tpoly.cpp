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
#include "qes/serialize.hpp"
#include "qes/tpoly.hpp"

using qes::Rational;
using qes::TPoly;

namespace {

TPoly random_poly(std::mt19937_64& rng, int max_degree)
{
  std::vector<Rational> c;
  const int deg = static_cast<int>(rng() % (max_degree + 1));
  for (int i = 0; i <= deg; ++i)
    c.push_back(oracle::random_rational(rng, 6));
  return TPoly(std::move(c));
}

} // namespace

TEST_SUITE("tpoly") {

TEST_CASE("basic products and evaluation")
{
  CHECK(TPoly::t() * TPoly::t() == TPoly::monomial(1, 2));
  CHECK((TPoly::monomial(1, 2) - TPoly(1)).evaluate(2) == Rational(3));

  const TPoly one_plus_t{1, 1};
  const TPoly cube = one_plus_t * one_plus_t * one_plus_t;
  CHECK(cube.coeffs() == std::vector<Rational>{1, 3, 3, 1});
}

TEST_CASE("canonical form drops trailing zeros")
{
  const TPoly p{1, 2, 0, 0};
  CHECK(p.degree() == 1);
  CHECK(TPoly{0, 0}.is_zero());
  CHECK(TPoly().degree() == -1);
  CHECK((TPoly{1, 1} - TPoly{0, 1}) == TPoly(1));
  CHECK((TPoly::t() * Rational(0)).is_zero());
  CHECK(TPoly(Rational(0)).coeffs().empty());
}

TEST_CASE("derivative")
{
  CHECK(TPoly{5, 3, 3, 1}.derivative() == TPoly{3, 6, 3});
  CHECK(TPoly(7).derivative().is_zero());
}

TEST_CASE("parity")
{
  CHECK(TPoly::monomial(Rational(1, 8), 4).has_parity(0));
  CHECK(TPoly{0, 1, 0, 2}.has_parity(1));
  CHECK_FALSE(TPoly{1, 1}.has_parity(0));
  CHECK(TPoly().has_parity(1));
}

TEST_CASE("division by a rational")
{
  CHECK(TPoly{2, 4} / Rational(2) == TPoly{1, 2});
  CHECK_THROWS_AS(TPoly{1} / Rational(0), qes::DivisionByZero);
}

TEST_CASE("pretty printing")
{
  CHECK(TPoly().pretty() == "0");
  CHECK(TPoly{0, 1, 0, 0, Rational(-1, 4)}.pretty() == "-1/4*t^4 + t");
  CHECK(TPoly{-1}.pretty() == "-1");
}

TEST_CASE("evaluation is a ring homomorphism")
{
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const TPoly p = random_poly(rng, 6);
    const TPoly q = random_poly(rng, 6);
    const Rational t0 = oracle::random_rational(rng, 4);
    CHECK((p * q).evaluate(t0) == p.evaluate(t0) * q.evaluate(t0));
    CHECK((p + q).evaluate(t0) == p.evaluate(t0) + q.evaluate(t0));
  }
}

TEST_CASE("serialization round trip")
{
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const TPoly p = random_poly(rng, 8);
    CHECK(TPoly::from_strings(p.to_strings()) == p);
    CHECK(qes::tpoly_from_json(qes::json::parse(qes::to_json(p).dump())) == p);
  }
  CHECK(qes::to_json(TPoly{0, Rational(1, 2)}).dump() == R"(["0","1/2"])");
  CHECK_THROWS_AS(qes::tpoly_from_json(qes::json::parse(R"([1, "2"])")), qes::ParseError);
}

}
