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

#include "qes/rspt.hpp"

#include <stdexcept>
#include <string>

namespace qes {

namespace {

// W scaled column-wise by the corrections of one order: W diag(e).
ExactMatrix scale_columns(const ExactMatrix& w, const std::vector<TPoly>& e)
{
  ExactMatrix r = w;
  for (Eigen::Index j = 0; j < r.cols(); ++j)
    r.col(j) *= e[j];
  return r;
}

ExactMatrix rhs(const ExactMatrix& g1, const ExactMatrix& g2, const SeriesResult& s, int order)
{
  ExactMatrix r = g1 * s.W[order - 1];
  if (order >= 2)
    r += g2 * s.W[order - 2];
  for (int m = 1; m < order; ++m)
    r -= scale_columns(s.W[order - m], s.eps[m]);
  return r;
}

} // namespace

SeriesResult rspt_run(const PerturbationSplit& split, int K, const DiagonalGauge& gauge)
{
  if (K < 0)
    throw std::invalid_argument("perturbation order K must be >= 0, got " + std::to_string(K));
  const int N = split.N;
  const KacDecomposition kac = build_P(N);
  const ExactMatrix g1 = kac.conjugate(split.H1);
  const ExactMatrix g2 = kac.conjugate(split.H2);

  SeriesResult s;
  s.N = N;
  s.k = split.k;
  s.K = K;
  s.eps.assign(K + 1, std::vector<TPoly>(N));
  s.W.reserve(K + 1);

  std::vector<Rational> eps0(N);
  for (int j = 0; j < N; ++j) {
    eps0[j] = Rational(2 * j - (N - 1));
    s.eps[0][j] = TPoly(eps0[j]);
  }
  s.W.push_back(identity(N));

  for (int order = 1; order <= K; ++order) {
    const ExactMatrix r = rhs(g1, g2, s, order);
    ExactMatrix w(N, N);
    for (int j = 0; j < N; ++j) {
      s.eps[order][j] = r(j, j);
      for (int i = 0; i < N; ++i)
        w(i, j) = i == j ? gauge(order, j) : r(i, j) / (eps0[j] - eps0[i]);
    }
    s.W.push_back(std::move(w));
  }
  return s;
}

ExactMatrix rspt_rhs(const SeriesResult& result, const KacDecomposition& kac,
                     const PerturbationSplit& split, int order)
{
  if (order < 1 || order > result.K)
    throw std::out_of_range("order out of range: " + std::to_string(order));
  return rhs(kac.conjugate(split.H1), kac.conjugate(split.H2), result, order);
}

FirstOrderConstraints first_order_constraints(const SeriesResult& result)
{
  if (result.N != 2 || result.k != 0 || result.K < 1)
    throw std::invalid_argument("first-order constraints need an N = 2, k = 0 run with K >= 1");
  const KacDecomposition kac = build_P(2);
  const ExactMatrix psi = to_poly(kac.M) * result.W[1];

  // diag(1, -1) on rows, exchange of the two columns
  ExactMatrix z(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      z(i, j) = i == 0 ? psi(i, 1 - j) : -psi(i, 1 - j);

  FirstOrderConstraints c;
  c.psi1 = z;
  c.scale_pow = kac.scale_pow;
  c.residual_lhs = z(0, 0) - z(1, 0) + TPoly::t();
  c.residual_rhs = z(0, 1) + z(1, 1) - TPoly::t();
  return c;
}

std::vector<TPoly> energy_coefficients(const SeriesResult& result, int state)
{
  if (state < 0 || state >= result.N)
    throw std::out_of_range("state index out of range: " + std::to_string(state));
  std::vector<TPoly> c;
  c.reserve(result.K + 2);
  c.push_back(TPoly::t());
  for (int order = 0; order <= result.K; ++order)
    c.push_back(result.eps[order][state] * Rational(2));
  return c;
}

} // namespace qes
