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

#ifndef QES_NUMERIC_ORACLE_HPP
#define QES_NUMERIC_ORACLE_HPP

#include <complex>
#include <vector>

#include "qes/model.hpp"
#include "qes/numeric/tridiagonal.hpp"

namespace qes::numeric {

inline constexpr double default_tolerance = 1e-12;

/// Eigenvalues of build_qes_matrix(params, D), ascending.
template <typename Real = double>
std::vector<Real> qes_spectrum_numeric(const ModelParams& params, const Rational& D,
                                       const Real& tol = Real(default_tolerance))
{
  return eigenvalues_bisection(symmetrize(to_tridiagonal<Real>(build_qes_matrix(params, D))), tol);
}

/**
 * Dimensionless eigenvalues eps = (E - beta D) / (2 sqrt(2 gamma D)),
 * ascending. The beta D shift is applied exactly before rounding, so the
 * result keeps full relative precision at large D.
 */
template <typename Real = double>
std::vector<Real> qes_epsilon_numeric(const ModelParams& params, const Rational& D,
                                      const Real& tol = Real(default_tolerance))
{
  using std::sqrt;
  const Real scale = Real(2) * sqrt(Real(2) * real_of<Real>(params.gamma) * real_of<Real>(D));
  auto shifted = symmetrize(to_tridiagonal<Real>(shifted_qes_matrix(params, D)));
  std::vector<Real> values = eigenvalues_bisection(shifted, tol * scale);
  for (auto& v : values)
    v /= scale;
  return values;
}

/// Unit right eigenvector h of build_qes_matrix(params, D) for the state-th
/// eigenvalue in ascending order.
std::vector<double> qes_eigenvector_numeric(const ModelParams& params, const Rational& D, int state);

/// Report of the block-triangular embedding of the QES block in a
/// larger truncation of the full recurrence with a = a(N).
struct EmbeddingReport {
  int n_trunc = 0;
  std::vector<double> qes_values;              ///< from the N x N block
  std::vector<std::complex<double>> matched;   ///< nearest eigenvalue of the truncation
  double max_relative_deviation = 0.0;
  bool coupling_vanishes = false;              ///< A_N == 0 exactly
};

/**
 * Eigenvalues of the (N + extra) truncation are computed with a general
 * nonsymmetric eigensolver after a diagonal balancing similarity, since
 * rows below the block are not symmetrizable.
 */
EmbeddingReport embedding_check(const ModelParams& params, const Rational& D, int extra);

} // namespace qes::numeric

#endif // QES_NUMERIC_ORACLE_HPP
