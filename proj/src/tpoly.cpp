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

#include "qes/tpoly.hpp"

#include <algorithm>
#include <ostream>

namespace qes {

TPoly::TPoly(const Rational& c)
{
  if (!c.is_zero())
    c_.push_back(c);
}

TPoly::TPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

TPoly::TPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

TPoly TPoly::monomial(const Rational& c, unsigned power)
{
  if (c.is_zero())
    return {};
  std::vector<Rational> v(power + 1);
  v[power] = c;
  return TPoly(std::move(v));
}

void TPoly::trim()
{
  while (!c_.empty() && c_.back().is_zero())
    c_.pop_back();
}

Rational TPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

bool TPoly::has_parity(int p) const
{
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (!c_[i].is_zero() && static_cast<int>(i % 2) != (p & 1))
      return false;
  return true;
}

TPoly TPoly::operator-() const
{
  TPoly r = *this;
  for (auto& c : r.c_)
    c = -c;
  return r;
}

TPoly& TPoly::operator+=(const TPoly& o)
{
  if (o.c_.size() > c_.size())
    c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] += o.c_[i];
  trim();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& o)
{
  if (o.c_.size() > c_.size())
    c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i)
    c_[i] -= o.c_[i];
  trim();
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b)
{
  if (a.is_zero() || b.is_zero())
    return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero())
      continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r[i + j] += a.c_[i] * b.c_[j];
  }
  return TPoly(std::move(r));
}

TPoly& TPoly::operator*=(const TPoly& o) { return *this = *this * o; }

TPoly& TPoly::operator*=(const Rational& s)
{
  if (s.is_zero()) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_)
    c *= s;
  return *this;
}

TPoly& TPoly::operator/=(const Rational& s)
{
  if (s.is_zero())
    throw DivisionByZero();
  for (auto& c : c_)
    c /= s;
  return *this;
}

Rational TPoly::evaluate(const Rational& t0) const
{
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = acc * t0 + *it;
  return acc;
}

TPoly TPoly::derivative() const
{
  if (c_.size() <= 1)
    return {};
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    r[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return TPoly(std::move(r));
}

std::vector<std::string> TPoly::to_strings() const
{
  std::vector<std::string> out;
  out.reserve(c_.size());
  for (const auto& c : c_)
    out.push_back(c.str());
  return out;
}

TPoly TPoly::from_strings(const std::vector<std::string>& coeffs)
{
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& s : coeffs)
    v.push_back(Rational::parse(s));
  return TPoly(std::move(v));
}

std::string TPoly::pretty() const
{
  if (is_zero())
    return "0";
  std::string out;
  for (std::size_t n = c_.size(); n-- > 0;) {
    const Rational& c = c_[n];
    if (c.is_zero())
      continue;
    bool neg = c.sign() < 0;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    Rational mag = c.abs();
    if (n == 0) {
      out += mag.str();
      continue;
    }
    if (mag != Rational(1))
      out += mag.str() + "*";
    out += n == 1 ? std::string("t") : "t^" + std::to_string(n);
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const TPoly& p) { return os << p.pretty(); }

} // namespace qes
