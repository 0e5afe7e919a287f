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

#ifndef QES_RSPT_HPP
#define QES_RSPT_HPP

#include <functional>
#include <vector>

#include "qes/kac.hpp"
#include "qes/model.hpp"

namespace qes {

/**
 * Exact perturbation series of the eigenvalues of
 * H(lambda) = H0 + lambda H1 + lambda^2 H2.
 *
 * States are ordered by ascending eps[0][j] = 2j - (N-1). The column j
 * of the (unnormalized) eigenvector matrix is P W(lambda) e_j with
 * W = sum_k lambda^k W[k], W[0] = I, and P the Kac involution.
 *
 * Energies are in units of sqrt(2 gamma) and are polynomials in t.
 */
struct SeriesResult {
  int N = 1;
  int k = 0;
  int K = 0;
  std::vector<std::vector<TPoly>> eps; ///< eps[order][state], order 0..K
  std::vector<ExactMatrix> W;          ///< W[order], order 0..K, W[0] = I
};

/// Choice of diag(W[order]); the eigenvalue corrections do not depend on it.
using DiagonalGauge = std::function<TPoly(int order, int state)>;

/// Intermediate normalization: every diag(W[order]) is zero.
inline TPoly intermediate_normalization(int, int) { return {}; }

/**
 * Runs the recursion to order K. With G1 = P H1 P and G2 = P H2 P,
 *
 *   R[k] = G1 W[k-1] + G2 W[k-2] - sum_{m=1}^{k-1} W[k-m] diag(eps[m]),
 *   eps[k]_j   = R[k]_jj,
 *   W[k]_ij    = R[k]_ij / (eps[0]_j - eps[0]_i)   (i != j),
 *
 * with W[-1] = 0. Every gap is a nonzero even integer.
 */
SeriesResult rspt_run(const PerturbationSplit& split, int K,
                      const DiagonalGauge& gauge = intermediate_normalization);

/// Right-hand side R[order] rebuilt from a finished run.
ExactMatrix rspt_rhs(const SeriesResult& result, const KacDecomposition& kac,
                     const PerturbationSplit& split, int order);

/**
 * The two first-order wavefunction relations of the N = 2, k = 0 problem,
 *
 *   Psi1(0,0) - Psi1(1,0) = -t,   Psi1(0,1) + Psi1(1,1) = t,
 *
 * stated for Psi1 = M W[1] in the basis where H0 = +T and states run in
 * descending-z order. For N = 2, k = 0 that problem is similar to ours
 * via diag(1, -1) with the two states exchanged, so Psi1 is mapped
 * across before the relations are checked.
 */
struct FirstOrderConstraints {
  ExactMatrix psi1;   ///< M W[1] in the descending-z basis
  int scale_pow = 1;  ///< normalized Psi1 = psi1 / sqrt(2^scale_pow)
  TPoly residual_lhs; ///< psi1(0,0) - psi1(1,0) + t
  TPoly residual_rhs; ///< psi1(0,1) + psi1(1,1) - t

  bool hold() const { return residual_lhs.is_zero() && residual_rhs.is_zero(); }
};

/// Requires a result with N = 2, k = 0 and K >= 1.
FirstOrderConstraints first_order_constraints(const SeriesResult& result);

/**
 * Exact coefficients of E / sqrt(2 gamma) for one state:
 *
 *   E / sqrt(2 gamma) = t / lambda^2 + 2 eps[0] / lambda + 2 sum_{k>=1} eps[k] lambda^(k-1),
 *
 * entry i multiplies lambda^(i-2).
 */
std::vector<TPoly> energy_coefficients(const SeriesResult& result, int state);

} // namespace qes

#endif // QES_RSPT_HPP
