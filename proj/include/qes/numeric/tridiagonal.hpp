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

#ifndef QES_NUMERIC_TRIDIAGONAL_HPP
#define QES_NUMERIC_TRIDIAGONAL_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "qes/exact_matrix.hpp"

namespace qes::numeric {

template <typename Real>
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

template <typename Real>
using RealMatrix = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;

/// Rounds an exact rational into Real. Builtin types go through long
/// double; multiprecision types are built from the decimal num/den.
template <typename Real = double>
Real real_of(const Rational& q)
{
  if constexpr (std::is_floating_point_v<Real>)
    return static_cast<Real>(q.to_long_double());
  else
    return Real(q.numerator().get_str()) / Real(q.denominator().get_str());
}

/// Horner evaluation of an exact polynomial at a real t.
template <typename Real = double>
Real evaluate_real(const TPoly& p, const Real& t0)
{
  Real acc(0);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it)
    acc = acc * t0 + real_of<Real>(*it);
  return acc;
}

class NotSymmetrizable : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

class NoConvergence : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// General real tridiagonal matrix: sub(n) = A(n+1, n), super(n) = A(n, n+1).
template <typename Real>
struct TridiagonalReal {
  RealVector<Real> diag;
  RealVector<Real> sub;
  RealVector<Real> super;

  Eigen::Index size() const { return diag.size(); }

  RealMatrix<Real> dense() const
  {
    const Eigen::Index n = size();
    RealMatrix<Real> m = RealMatrix<Real>::Zero(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      m(i, i) = diag(i);
      if (i + 1 < n) {
        m(i + 1, i) = sub(i);
        m(i, i + 1) = super(i);
      }
    }
    return m;
  }

  /// Max-row-sum norm.
  Real norm_inf() const
  {
    using std::abs;
    Real best(0);
    for (Eigen::Index i = 0; i < size(); ++i) {
      Real row = abs(diag(i));
      if (i > 0)
        row += abs(sub(i - 1));
      if (i + 1 < size())
        row += abs(super(i));
      best = std::max(best, row);
    }
    return best;
  }
};

template <typename Real>
struct SymmetricTridiagonal {
  RealVector<Real> diag;
  RealVector<Real> off;

  Eigen::Index size() const { return diag.size(); }
};

/// Rounds an exact tridiagonal matrix into Real, reading only the three bands.
template <typename Real>
TridiagonalReal<Real> to_tridiagonal(const RationalMatrix& m)
{
  const Eigen::Index n = m.rows();
  TridiagonalReal<Real> t;
  t.diag.resize(n);
  t.sub.resize(std::max<Eigen::Index>(n - 1, 0));
  t.super.resize(std::max<Eigen::Index>(n - 1, 0));
  for (Eigen::Index i = 0; i < n; ++i) {
    t.diag(i) = real_of<Real>(m(i, i));
    if (i + 1 < n) {
      t.sub(i) = real_of<Real>(m(i + 1, i));
      t.super(i) = real_of<Real>(m(i, i + 1));
    }
  }
  return t;
}

/**
 * Diagonal similarity onto a symmetric tridiagonal matrix with
 * off(n) = sqrt(sub(n) super(n)). Requires every product to be positive.
 */
template <typename Real>
SymmetricTridiagonal<Real> symmetrize(const TridiagonalReal<Real>& m)
{
  using std::sqrt;
  SymmetricTridiagonal<Real> s;
  s.diag = m.diag;
  s.off.resize(m.sub.size());
  for (Eigen::Index i = 0; i < m.sub.size(); ++i) {
    const Real p = m.sub(i) * m.super(i);
    if (!(p > Real(0)))
      throw NotSymmetrizable("sub*super <= 0 at row " + std::to_string(i + 1));
    s.off(i) = sqrt(p);
  }
  return s;
}

/// Number of eigenvalues strictly below x (Sturm sequence / LDL^T inertia).
template <typename Real>
Eigen::Index sturm_count(const SymmetricTridiagonal<Real>& m, const Real& x)
{
  using std::abs;
  const Real tiny = std::numeric_limits<Real>::min();
  Eigen::Index count = 0;
  Real q(1);
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    q = m.diag(i) - x - (i > 0 ? m.off(i - 1) * m.off(i - 1) / q : Real(0));
    if (q == Real(0))
      q = -tiny;
    if (q < Real(0))
      ++count;
  }
  return count;
}

/// Gershgorin enclosure [lo, hi] of the whole spectrum.
template <typename Real>
std::pair<Real, Real> gershgorin_bounds(const SymmetricTridiagonal<Real>& m)
{
  using std::abs;
  Real lo = std::numeric_limits<Real>::max();
  Real hi = std::numeric_limits<Real>::lowest();
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    Real r(0);
    if (i > 0)
      r += abs(m.off(i - 1));
    if (i + 1 < m.size())
      r += abs(m.off(i));
    lo = std::min(lo, m.diag(i) - r);
    hi = std::max(hi, m.diag(i) + r);
  }
  return {lo, hi};
}

/**
 * All eigenvalues by Sturm bisection, ascending, each to absolute
 * tolerance tol (or until the bracket cannot shrink in Real).
 */
template <typename Real>
std::vector<Real> eigenvalues_bisection(const SymmetricTridiagonal<Real>& m, const Real& tol)
{
  if (!(tol > Real(0)))
    throw std::invalid_argument("bisection tolerance must be > 0");
  const Eigen::Index n = m.size();
  if (n == 1)
    return {m.diag(0)};
  auto [lo0, hi0] = gershgorin_bounds(m);
  const Real pad = (hi0 - lo0) * Real(1e-3) + tol;
  lo0 -= pad;
  hi0 += pad;

  std::vector<Real> values(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    // i-th eigenvalue: sturm_count(lo) <= i < sturm_count(hi)
    Real lo = i > 0 ? std::max(lo0, values[i - 1] - tol) : lo0;
    Real hi = hi0;
    while (hi - lo > tol) {
      const Real mid = lo + (hi - lo) / Real(2);
      if (mid <= lo || mid >= hi)
        break;
      if (sturm_count(m, mid) > i)
        hi = mid;
      else
        lo = mid;
    }
    values[i] = lo + (hi - lo) / Real(2);
  }
  return values;
}

/**
 * Unit-norm right eigenvector of a general tridiagonal matrix for an
 * eigenvalue estimate, by shifted inverse iteration. The residual target
 * is ||(M - eval I) v|| <= 1e-10 ||M||.
 */
template <typename Real>
RealVector<Real> eigenvector_inverse_iteration(const TridiagonalReal<Real>& m, const Real& eval,
                                               int max_iterations = 50)
{
  using std::abs;
  const Eigen::Index n = m.size();
  const RealMatrix<Real> a = m.dense();
  const Real scale = std::max(m.norm_inf(), Real(1));
  const Real target = Real(1e-10) * scale;

  // A shift exactly at the eigenvalue would make the factorization singular.
  const Real shift = eval + scale * Real(64) * std::numeric_limits<Real>::epsilon();
  Eigen::PartialPivLU<RealMatrix<Real>> lu(a - shift * RealMatrix<Real>::Identity(n, n));

  RealVector<Real> v = RealVector<Real>::Ones(n).normalized();
  for (int it = 0; it < max_iterations; ++it) {
    RealVector<Real> next = lu.solve(v);
    const Real norm = next.norm();
    if (!(norm > Real(0)) || !std::isfinite(static_cast<double>(norm)))
      throw NoConvergence("inverse iteration produced a degenerate iterate");
    v = next / norm;
    const Real residual = (a * v - eval * v).norm();
    if (residual <= target) {
      // fix the sign so the largest-magnitude component is positive
      Eigen::Index imax = 0;
      v.cwiseAbs().maxCoeff(&imax);
      return v(imax) < Real(0) ? RealVector<Real>(-v) : v;
    }
  }
  throw NoConvergence("inverse iteration did not reach the residual target");
}

} // namespace qes::numeric

#endif // QES_NUMERIC_TRIDIAGONAL_HPP
