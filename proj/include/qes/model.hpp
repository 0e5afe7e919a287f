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

#ifndef QES_MODEL_HPP
#define QES_MODEL_HPP

#include <optional>
#include <stdexcept>

#include "qes/exact_matrix.hpp"

namespace qes {

class InvalidParameters : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Physical configuration of the sextic oscillator
 *
 *   V(r) = a r^2 + b r^4 + c r^6,  b = 2 beta gamma,  c = gamma^2,
 *
 * restricted to its QES sector of N states at angular momentum k. The
 * quadratic coupling a is not free: it is fixed by `qes_coupling_a`.
 */
struct ModelParams {
  int N = 1;
  int k = 0;
  Rational beta = 1;
  Rational gamma = 1;

  /// Throws InvalidParameters unless N >= 1, k >= 0, beta > 0, gamma > 0.
  void validate() const;

  /// t^2 = beta^2 / (2 gamma), always rational.
  Rational t_squared() const { return beta * beta / (Rational(2) * gamma); }
  /// t = beta / sqrt(2 gamma) when that is rational; otherwise t stays symbolic.
  std::optional<Rational> exact_t() const { return t_squared().exact_sqrt(); }

  /// ell = k + (D - 3)/2.
  Rational ell(const Rational& D) const { return Rational(k) + (D - Rational(3)) / Rational(2); }
};

/// a(N) = b^2/(4 gamma^2) - gamma (4N + 2 ell + 1) = beta^2 - gamma (4N + 2 ell + 1).
Rational qes_coupling_a(const ModelParams& params, const Rational& D);

/**
 * The N x N QES block acting on the Taylor coefficients h_n:
 *   row n:  A_n h_{n-1} + B_n h_n + C_n h_{n+1} = E h_n
 * with A_n = 4 gamma (n - N), B_n = beta (4n + 2k + D) and
 * C_n = -2 (n+1)(2n + 2k + D).
 *
 * B_n has no energy dependence even though it is sometimes labelled B_n(E).
 */
RationalMatrix build_qes_matrix(const ModelParams& params, const Rational& D);

/// Truncation of the full (non-terminating) recurrence at n_trunc rows with
/// a free quadratic coupling a: A_n = gamma (4n + 2 ell + 1) + a - beta^2.
RationalMatrix build_general_matrix(int n_trunc, const Rational& a, const ModelParams& params,
                                    const Rational& D);

/// build_qes_matrix(params, D) - beta D I, exact. Its eigenvalues are
/// 2 sqrt(2 gamma D) eps and stay O(sqrt(D)) when D is large.
RationalMatrix shifted_qes_matrix(const ModelParams& params, const Rational& D);

/**
 * H(lambda) = H0 + lambda H1 + lambda^2 H2, lambda = 1/sqrt(D), defined by
 *   S Q S^-1 = beta D I + 2 sqrt(2 gamma D) H(lambda),  S = diag(rho^n),
 *   rho = sqrt(D / (2 gamma)).
 * The expansion terminates at lambda^2 and depends only on N and k.
 */
struct PerturbationSplit {
  int N = 1;
  int k = 0;
  ExactMatrix H0; ///< sub -(N-n), super -(n+1), diag 0
  ExactMatrix H1; ///< diag t (2n + k)
  ExactMatrix H2; ///< super -(n+1)(2n + 2k)
};

PerturbationSplit perturbation_split(int N, int k);
inline PerturbationSplit perturbation_split(const ModelParams& params)
{
  params.validate();
  return perturbation_split(params.N, params.k);
}

} // namespace qes

#endif // QES_MODEL_HPP
