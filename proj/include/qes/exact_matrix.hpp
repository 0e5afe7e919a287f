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

#ifndef QES_EXACT_MATRIX_HPP
#define QES_EXACT_MATRIX_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <type_traits>

#include <Eigen/Core>

#include "qes/rational.hpp"
#include "qes/tpoly.hpp"

// Eigen needs to know the exact scalars are not floating point: no
// epsilon, no vectorization, and non-trivial construction.
namespace Eigen {

template <>
struct NumTraits<qes::Rational> : GenericNumTraits<qes::Rational> {
  using Real = qes::Rational;
  using NonInteger = qes::Rational;
  using Literal = qes::Rational;
  using Nested = qes::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<qes::TPoly> : GenericNumTraits<qes::TPoly> {
  using Real = qes::TPoly;
  using NonInteger = qes::TPoly;
  using Literal = qes::TPoly;
  using Nested = qes::TPoly;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 32
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};

} // namespace Eigen

namespace qes {

/// Scalars on which every operation is exact. Floating types are excluded.
template <typename T>
concept ExactScalar = std::is_same_v<T, Rational> || std::is_same_v<T, TPoly>;

template <ExactScalar Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <ExactScalar Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Square matrix over TPoly; integer and rational matrices are the degree-0 case.
using ExactMatrix = Matrix<TPoly>;
using RationalMatrix = Matrix<Rational>;

class DimensionMismatch : public std::invalid_argument {
public:
  DimensionMismatch(Eigen::Index ar, Eigen::Index ac, Eigen::Index br, Eigen::Index bc)
    : std::invalid_argument("dimension mismatch: " + std::to_string(ar) + "x" + std::to_string(ac) +
                            " times " + std::to_string(br) + "x" + std::to_string(bc))
  {
  }
};

/// Checked exact product; Eigen itself only asserts on mismatched shapes.
template <typename DerivedA, typename DerivedB>
auto mat_mul(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b)
{
  using Scalar = typename DerivedA::Scalar;
  static_assert(ExactScalar<Scalar>, "mat_mul is for exact scalars");
  if (a.cols() != b.rows())
    throw DimensionMismatch(a.rows(), a.cols(), b.rows(), b.cols());
  Matrix<Scalar> r = a * b;
  return r;
}

template <ExactScalar Scalar = TPoly>
Matrix<Scalar> identity(Eigen::Index n)
{
  return Matrix<Scalar>::Identity(n, n);
}

/// diag(v) as a dense matrix.
template <ExactScalar Scalar>
Matrix<Scalar> diagonal_matrix(const Vector<Scalar>& v)
{
  Matrix<Scalar> d = Matrix<Scalar>::Zero(v.size(), v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i)
    d(i, i) = v(i);
  return d;
}

/// Lift a rational matrix into TPoly entries of degree <= 0.
inline ExactMatrix to_poly(const RationalMatrix& m) { return m.unaryExpr([](const Rational& x) { return TPoly(x); }); }

/// Substitute t = t0 in every entry.
inline RationalMatrix evaluate(const ExactMatrix& m, const Rational& t0)
{
  return m.unaryExpr([&](const TPoly& p) { return p.evaluate(t0); });
}

template <ExactScalar Scalar>
bool is_zero(const Matrix<Scalar>& m)
{
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (!m(i, j).is_zero())
        return false;
  return true;
}

/// Largest t-degree of any entry; -1 for the zero matrix.
inline int max_degree(const ExactMatrix& m)
{
  int d = -1;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      d = std::max(d, m(i, j).degree());
  return d;
}

} // namespace qes

#endif // QES_EXACT_MATRIX_HPP
