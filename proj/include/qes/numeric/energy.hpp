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

#ifndef QES_NUMERIC_ENERGY_HPP
#define QES_NUMERIC_ENERGY_HPP

#include <cmath>
#include <vector>

#include "qes/numeric/tridiagonal.hpp"
#include "qes/rspt.hpp"

// Physical units enter only here, in floating point.
namespace qes::numeric {

/// t = beta / sqrt(2 gamma).
template <typename Real = double>
Real t_value(const ModelParams& params)
{
  using std::sqrt;
  return real_of<Real>(params.beta) / sqrt(Real(2) * real_of<Real>(params.gamma));
}

/// E = beta D + 2 sqrt(2 gamma D) eps.
template <typename Real = double>
Real energy_from_epsilon(const Real& eps, const Real& D, const ModelParams& params)
{
  using std::sqrt;
  return real_of<Real>(params.beta) * D + Real(2) * sqrt(Real(2) * real_of<Real>(params.gamma) * D) * eps;
}

/// sum_{k <= through} eps[k](t) lambda^k for one state.
template <typename Real = double>
Real epsilon_partial_sum(const SeriesResult& result, int state, const Real& t, const Real& lambda,
                         int through)
{
  Real acc(0);
  for (int k = std::min(through, result.K); k >= 0; --k)
    acc = acc * lambda + evaluate_real(result.eps[k][state], t);
  return acc;
}

/// sqrt(2 gamma) sum_i coeffs[i](t) lambda^(i-2), coeffs from energy_coefficients.
template <typename Real = double>
Real energy_partial_sum(const std::vector<TPoly>& coeffs, const Real& t, const Real& lambda,
                        const ModelParams& params)
{
  using std::sqrt;
  Real acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * lambda + evaluate_real(*it, t);
  return sqrt(Real(2) * real_of<Real>(params.gamma)) * acc / (lambda * lambda);
}

} // namespace qes::numeric

#endif // QES_NUMERIC_ENERGY_HPP
