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

#ifndef QES_KAC_HPP
#define QES_KAC_HPP

#include <vector>

#include "qes/exact_matrix.hpp"

namespace qes {

/**
 * Infinite-dimension limit of the rescaled QES matrix.
 *
 * T is the N x N integer tridiagonal matrix with zero diagonal,
 * T(n, n-1) = N - n and T(n, n+1) = n + 1. Its spectrum is the
 * equidistant set z_j = (N-1) - 2j.
 *
 * M collects integer eigenvectors: column j holds the coefficients of
 * (1+x)^(N-1-j) (1-x)^j, so T M = M diag(Z) and M T = diag(Z) M. The
 * normalized eigenvector matrix P = M / 2^((N-1)/2) is an involution,
 * which is kept irrational-free by storing M and the power separately.
 */
struct KacDecomposition {
  int N = 1;
  RationalMatrix T;
  std::vector<long> Z;
  RationalMatrix M;
  int scale_pow = 0; ///< P = M / sqrt(2^scale_pow), scale_pow = N - 1

  /// M * X * M / 2^(N-1), i.e. P X P without any square roots.
  template <ExactScalar Scalar>
  Matrix<Scalar> conjugate(const Matrix<Scalar>& x) const
  {
    Matrix<Scalar> m = M.template cast<Scalar>();
    Matrix<Scalar> r = m * x * m;
    const Rational inv = pow2(-scale_pow);
    return r.unaryExpr([&](const Scalar& e) { return Scalar(e * inv); });
  }
};

/// The Kac-type matrix T of size N.
RationalMatrix build_T(int N);

/// z_j = (N-1) - 2j for j = 0..N-1 (descending).
std::vector<long> kac_eigenvalues(int N);

/// Closed-form integer eigenvector matrix together with T and Z.
KacDecomposition build_P(int N);

struct KacResiduals {
  RationalMatrix involution; ///< M^2 - 2^(N-1) I
  RationalMatrix right;      ///< T M - M diag(Z)
  RationalMatrix left;       ///< M T - diag(Z) M

  bool all_zero() const { return is_zero(involution) && is_zero(right) && is_zero(left); }
};

KacResiduals kac_residuals(const KacDecomposition& dec);

} // namespace qes

#endif // QES_KAC_HPP
