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

#include "qes/kac.hpp"

#include <stdexcept>

namespace qes {

namespace {

void require_size(int N)
{
  if (N < 1)
    throw std::invalid_argument("Kac matrix size must be >= 1, got " + std::to_string(N));
}

// Coefficients of (1+x)^a (1-x)^b, lowest power first.
std::vector<Rational> binomial_product(int a, int b)
{
  std::vector<Rational> c{Rational(1)};
  auto multiply_by = [&c](int sign) {
    c.emplace_back(0);
    for (std::size_t i = c.size() - 1; i > 0; --i)
      c[i] += Rational(sign) * c[i - 1];
  };
  for (int i = 0; i < a; ++i)
    multiply_by(+1);
  for (int i = 0; i < b; ++i)
    multiply_by(-1);
  return c;
}

} // namespace

RationalMatrix build_T(int N)
{
  require_size(N);
  RationalMatrix t = RationalMatrix::Zero(N, N);
  for (int n = 0; n < N; ++n) {
    if (n > 0)
      t(n, n - 1) = Rational(N - n);
    if (n + 1 < N)
      t(n, n + 1) = Rational(n + 1);
  }
  return t;
}

std::vector<long> kac_eigenvalues(int N)
{
  require_size(N);
  std::vector<long> z(N);
  for (int j = 0; j < N; ++j)
    z[j] = (N - 1) - 2L * j;
  return z;
}

KacDecomposition build_P(int N)
{
  KacDecomposition dec;
  dec.N = N;
  dec.T = build_T(N);
  dec.Z = kac_eigenvalues(N);
  dec.M = RationalMatrix::Zero(N, N);
  for (int j = 0; j < N; ++j) {
    auto col = binomial_product(N - 1 - j, j);
    for (int i = 0; i < N; ++i)
      dec.M(i, j) = col[i];
  }
  dec.scale_pow = N - 1;
  return dec;
}

KacResiduals kac_residuals(const KacDecomposition& dec)
{
  const Eigen::Index n = dec.N;
  Vector<Rational> z(n);
  for (Eigen::Index j = 0; j < n; ++j)
    z(j) = Rational(dec.Z[j]);
  RationalMatrix zd = diagonal_matrix(z);

  KacResiduals r;
  r.involution = dec.M * dec.M - RationalMatrix(pow2(dec.scale_pow) * identity<Rational>(n));
  r.right = dec.T * dec.M - dec.M * zd;
  r.left = dec.M * dec.T - zd * dec.M;
  return r;
}

} // namespace qes
