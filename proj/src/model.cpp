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

#include "qes/model.hpp"

#include <string>

namespace qes {

void ModelParams::validate() const
{
  if (N < 1)
    throw InvalidParameters("N must be >= 1, got " + std::to_string(N));
  if (k < 0)
    throw InvalidParameters("k must be >= 0, got " + std::to_string(k));
  if (beta.sign() <= 0)
    throw InvalidParameters("beta must be > 0, got " + beta.str());
  if (gamma.sign() <= 0)
    throw InvalidParameters("gamma must be > 0, got " + gamma.str());
}

namespace {

void require_positive_dimension(const Rational& D)
{
  if (D.sign() <= 0)
    throw InvalidParameters("D must be > 0, got " + D.str());
}

} // namespace

Rational qes_coupling_a(const ModelParams& params, const Rational& D)
{
  params.validate();
  require_positive_dimension(D);
  const Rational two_ell = Rational(2) * params.ell(D);
  return params.beta * params.beta - params.gamma * (Rational(4 * params.N) + two_ell + Rational(1));
}

RationalMatrix build_qes_matrix(const ModelParams& params, const Rational& D)
{
  params.validate();
  require_positive_dimension(D);
  const int N = params.N;
  const Rational two_k(2 * params.k);

  RationalMatrix q = RationalMatrix::Zero(N, N);
  for (int n = 0; n < N; ++n) {
    q(n, n) = params.beta * (Rational(4 * n) + two_k + D);
    if (n > 0)
      q(n, n - 1) = Rational(4) * params.gamma * Rational(n - N);
    if (n + 1 < N)
      q(n, n + 1) = Rational(-2 * (n + 1)) * (Rational(2 * n) + two_k + D);
  }
  return q;
}

RationalMatrix build_general_matrix(int n_trunc, const Rational& a, const ModelParams& params,
                                    const Rational& D)
{
  params.validate();
  require_positive_dimension(D);
  if (n_trunc < 1)
    throw InvalidParameters("truncation size must be >= 1, got " + std::to_string(n_trunc));
  const Rational two_ell = Rational(2) * params.ell(D);
  const Rational beta_sq = params.beta * params.beta;

  RationalMatrix q = RationalMatrix::Zero(n_trunc, n_trunc);
  for (int n = 0; n < n_trunc; ++n) {
    q(n, n) = params.beta * (Rational(4 * n) + two_ell + Rational(3));
    if (n > 0)
      q(n, n - 1) = params.gamma * (Rational(4 * n) + two_ell + Rational(1)) + a - beta_sq;
    if (n + 1 < n_trunc)
      q(n, n + 1) = Rational(-2 * (n + 1)) * (Rational(2 * n) + two_ell + Rational(3));
  }
  return q;
}

RationalMatrix shifted_qes_matrix(const ModelParams& params, const Rational& D)
{
  RationalMatrix q = build_qes_matrix(params, D);
  const Rational shift = params.beta * D;
  for (Eigen::Index n = 0; n < q.rows(); ++n)
    q(n, n) -= shift;
  return q;
}

PerturbationSplit perturbation_split(int N, int k)
{
  if (N < 1 || k < 0)
    throw InvalidParameters("perturbation split needs N >= 1 and k >= 0");
  PerturbationSplit s;
  s.N = N;
  s.k = k;
  s.H0 = ExactMatrix::Zero(N, N);
  s.H1 = ExactMatrix::Zero(N, N);
  s.H2 = ExactMatrix::Zero(N, N);
  for (int n = 0; n < N; ++n) {
    s.H1(n, n) = TPoly::monomial(Rational(2 * n + k), 1);
    if (n > 0)
      s.H0(n, n - 1) = TPoly(-(N - n));
    if (n + 1 < N) {
      s.H0(n, n + 1) = TPoly(-(n + 1));
      s.H2(n, n + 1) = TPoly(-(n + 1) * (2 * n + 2 * k));
    }
  }
  return s;
}

} // namespace qes
