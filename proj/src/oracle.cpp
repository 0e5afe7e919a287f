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

#include "qes/numeric/oracle.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

namespace qes::numeric {

std::vector<double> qes_eigenvector_numeric(const ModelParams& params, const Rational& D, int state)
{
  if (state < 0 || state >= params.N)
    throw std::out_of_range("state index out of range: " + std::to_string(state));
  const auto tri = to_tridiagonal<double>(build_qes_matrix(params, D));
  const auto values = eigenvalues_bisection(symmetrize(tri), default_tolerance);
  const RealVector<double> v = eigenvector_inverse_iteration(tri, values[state]);
  return {v.data(), v.data() + v.size()};
}

EmbeddingReport embedding_check(const ModelParams& params, const Rational& D, int extra)
{
  if (extra < 0)
    throw std::invalid_argument("embedding margin must be >= 0");
  EmbeddingReport report;
  report.n_trunc = params.N + extra;
  const Rational a = qes_coupling_a(params, D);
  const RationalMatrix general = build_general_matrix(report.n_trunc, a, params, D);
  report.coupling_vanishes = report.n_trunc == params.N || general(params.N, params.N - 1).is_zero();

  // Balance: scale so that |sub| == |super| wherever both are nonzero.
  const auto tri = to_tridiagonal<double>(general);
  const Eigen::Index n = tri.size();
  Eigen::VectorXd s(n);
  s(0) = 1.0;
  for (Eigen::Index i = 1; i < n; ++i) {
    const double lower = std::abs(tri.sub(i - 1));
    const double upper = std::abs(tri.super(i - 1));
    s(i) = s(i - 1) * (lower > 0.0 && upper > 0.0 ? std::sqrt(upper / lower) : 1.0);
  }
  Eigen::MatrixXd balanced = tri.dense();
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      balanced(i, j) *= s(i) / s(j);

  Eigen::EigenSolver<Eigen::MatrixXd> solver(balanced, false);
  if (solver.info() != Eigen::Success)
    throw NoConvergence("nonsymmetric eigensolver failed on the truncated matrix");
  const Eigen::VectorXcd all = solver.eigenvalues();

  report.qes_values = qes_spectrum_numeric<double>(params, D);
  for (double e : report.qes_values) {
    std::complex<double> best = all(0);
    for (Eigen::Index i = 1; i < all.size(); ++i)
      if (std::abs(all(i) - e) < std::abs(best - e))
        best = all(i);
    report.matched.push_back(best);
    const double denom = std::max(std::abs(e), std::numeric_limits<double>::min());
    report.max_relative_deviation = std::max(report.max_relative_deviation, std::abs(best - e) / denom);
  }
  return report;
}

} // namespace qes::numeric
