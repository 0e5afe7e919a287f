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

#include <doctest.h>

#include <cmath>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "oracles.hpp"
#include "qes/numeric/energy.hpp"
#include "qes/numeric/oracle.hpp"
#include "qes/numeric/wavefunction.hpp"

using qes::ModelParams;
using qes::Rational;
namespace num = qes::numeric;

namespace {

num::TridiagonalReal<double> tri(std::vector<double> d, std::vector<double> sub, std::vector<double> super)
{
  num::TridiagonalReal<double> m;
  m.diag = Eigen::Map<Eigen::VectorXd>(d.data(), static_cast<Eigen::Index>(d.size()));
  m.sub = Eigen::Map<Eigen::VectorXd>(sub.data(), static_cast<Eigen::Index>(sub.size()));
  m.super = Eigen::Map<Eigen::VectorXd>(super.data(), static_cast<Eigen::Index>(super.size()));
  return m;
}

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

} // namespace

TEST_SUITE("numeric") {

TEST_CASE("symmetrize")
{
  const auto s = num::symmetrize(tri({3, 7}, {-4}, {-6}));
  CHECK(s.diag(0) == 3.0);
  CHECK(s.diag(1) == 7.0);
  CHECK(s.off(0) == doctest::Approx(std::sqrt(24.0)).epsilon(1e-15));

  const auto same = num::symmetrize(tri({1, 2, 3}, {5, 6}, {5, 6}));
  CHECK(same.off(0) == 5.0);
  CHECK(same.off(1) == 6.0);

  CHECK_THROWS_AS(num::symmetrize(tri({1, 2}, {0}, {3})), num::NotSymmetrizable);
  CHECK_THROWS_AS(num::symmetrize(tri({1, 2}, {-1}, {3})), num::NotSymmetrizable);
}

TEST_CASE("bisection on small matrices")
{
  num::SymmetricTridiagonal<double> m;
  m.diag = Eigen::VectorXd::Zero(2);
  m.off = Eigen::VectorXd::Ones(1);
  const auto v = num::eigenvalues_bisection(m, 1e-13);
  REQUIRE(v.size() == 2);
  CHECK(close(v[0], -1.0, 1e-13));
  CHECK(close(v[1], 1.0, 1e-13));

  const auto t4 = num::eigenvalues_bisection(num::symmetrize(num::to_tridiagonal<double>(qes::build_T(4))), 1e-13);
  const std::vector<double> expected{-3, -1, 1, 3};
  for (int i = 0; i < 4; ++i)
    CHECK(close(t4[i], expected[i], 1e-13));

  CHECK_THROWS_AS(num::eigenvalues_bisection(m, 0.0), std::invalid_argument);
}

TEST_CASE("bisection agrees with the quadratic formula")
{
  // [[3, -6], [-4, 7]]: trace 10, determinant -3
  const auto v = num::qes_spectrum_numeric({2, 0, 1, 1}, 3);
  const auto [lo, hi] = oracle::quadratic_roots(10.0, -3.0);
  REQUIRE(v.size() == 2);
  CHECK(close(v[0], lo, 1e-12));
  CHECK(close(v[1], hi, 1e-12));
  CHECK(close(v[0], 5.0 - 2.0 * std::sqrt(7.0), 1e-12));
}

TEST_CASE("single-state spectrum is exact")
{
  for (int k = 0; k <= 4; ++k)
    for (int D = 1; D <= 9; D += 2) {
      const auto v = num::qes_spectrum_numeric({1, k, Rational(3, 2), 5}, D);
      CHECK(v.size() == 1);
      CHECK(v[0] == 1.5 * (2 * k + D));
    }
}

TEST_CASE("inverse iteration")
{
  const auto one = num::eigenvector_inverse_iteration(tri({4}, {}, {}), 4.0);
  REQUIRE(one.size() == 1);
  CHECK(one(0) == doctest::Approx(1.0));

  const auto v = num::eigenvector_inverse_iteration(num::to_tridiagonal<double>(qes::build_T(3)), 2.0);
  const double s = 1.0 / std::sqrt(6.0);
  CHECK(close(v(0), s, 1e-10));
  CHECK(close(v(1), 2 * s, 1e-10));
  CHECK(close(v(2), s, 1e-10));

  const auto m = num::to_tridiagonal<double>(qes::build_qes_matrix({2, 0, 1, 1}, 3));
  const double e0 = num::qes_spectrum_numeric({2, 0, 1, 1}, 3)[0];
  const auto h = num::eigenvector_inverse_iteration(m, e0);
  CHECK(h.norm() == doctest::Approx(1.0));
  CHECK((m.dense() * h - e0 * h).norm() <= 1e-10 * m.norm_inf());
}

TEST_CASE("large-D spectrum matches the K = 6 energy series")
{
  const ModelParams p{2, 0, 1, 1};
  const auto r = qes::rspt_run(qes::perturbation_split(p), 6);
  const double D = 1e6;
  const auto v = num::qes_spectrum_numeric(p, static_cast<long long>(D));
  const double t = num::t_value(p);
  for (int j = 0; j < 2; ++j) {
    const double e = num::energy_partial_sum(qes::energy_coefficients(r, j), t, 1.0 / std::sqrt(D), p);
    CHECK(std::fabs(e - v[j]) <= 1e-12 * std::fabs(v[j]));
  }
}

TEST_CASE("Sturm counts and simple spectra")
{
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const ModelParams p{2 + static_cast<int>(rng() % 9), static_cast<int>(rng() % 4),
                        Rational(1 + static_cast<long long>(rng() % 4), 1 + static_cast<long long>(rng() % 3)),
                        Rational(1 + static_cast<long long>(rng() % 3), 1 + static_cast<long long>(rng() % 2))};
    const Rational D(1 + static_cast<long long>(rng() % 20));
    CAPTURE(p.N);
    const auto sym = num::symmetrize(num::to_tridiagonal<double>(qes::build_qes_matrix(p, D)));
    const auto [lo, hi] = num::gershgorin_bounds(sym);
    CHECK(num::sturm_count(sym, hi + 1.0) - num::sturm_count(sym, lo - 1.0) == p.N);
    const auto v = num::eigenvalues_bisection(sym, 1e-12);
    for (int i = 0; i + 1 < p.N; ++i) {
      CHECK(v[i + 1] - v[i] > 1e-9);
      // exactly one eigenvalue in each gap-centred window
      const double mid = 0.5 * (v[i] + v[i + 1]);
      CHECK(num::sturm_count(sym, mid) == i + 1);
    }
  }
}

TEST_CASE("symmetrized spectrum reproduces the exact characteristic polynomial")
{
  // exact coefficients from the three-term recurrence over cpp_rational,
  // compared with prod (x - lambda_i) from a 50-digit bisection
  using Real = boost::multiprecision::cpp_bin_float_50;
  using BigQ = oracle::BigRational;
  for (int N = 1; N <= 5; ++N)
    for (int k : {0, 1, 3}) {
      const ModelParams p{N, k, Rational(2, 3), Rational(5, 4)};
      const Rational D(7, 2);
      const auto q = qes::build_qes_matrix(p, D);
      auto big = [](const Rational& x) {
        return BigQ(oracle::BigInt(x.numerator().get_str()), oracle::BigInt(x.denominator().get_str()));
      };
      std::vector<BigQ> prev{BigQ(1)}, cur{-big(q(0, 0)), BigQ(1)};
      for (int n = 1; n < N; ++n) {
        std::vector<BigQ> next(cur.size() + 1, BigQ(0));
        for (std::size_t i = 0; i < cur.size(); ++i) {
          next[i + 1] += cur[i];
          next[i] -= big(q(n, n)) * cur[i];
        }
        const BigQ c = big(q(n, n - 1)) * big(q(n - 1, n));
        for (std::size_t i = 0; i < prev.size(); ++i)
          next[i] -= c * prev[i];
        prev = cur;
        cur = next;
      }
      const auto roots = num::qes_spectrum_numeric<Real>(p, D, Real("1e-40"));
      std::vector<Real> fromroots{Real(1)};
      for (const auto& rt : roots) {
        std::vector<Real> next(fromroots.size() + 1, Real(0));
        for (std::size_t i = 0; i < fromroots.size(); ++i) {
          next[i + 1] += fromroots[i];
          next[i] -= rt * fromroots[i];
        }
        fromroots = next;
      }
      REQUIRE(fromroots.size() == cur.size());
      for (std::size_t i = 0; i < cur.size(); ++i) {
        const Real exact = Real(boost::multiprecision::numerator(cur[i])) /
                           Real(boost::multiprecision::denominator(cur[i]));
        const Real scale = std::max<Real>(boost::multiprecision::abs(exact), Real(1));
        CHECK(static_cast<double>(boost::multiprecision::abs(fromroots[i] - exact) / scale) <= 1e-10);
      }
    }
}

TEST_CASE("wavefunction evaluation")
{
  const num::RadialWavefunction wf{{1.0}, 1.0, 1.0, 0.0};
  CHECK(num::wavefunction_eval(wf, 1.0) == doctest::Approx(std::exp(-0.75)).epsilon(1e-14));
  CHECK(num::wavefunction_eval(wf, 1.0) == doctest::Approx(0.47237).epsilon(1e-5));
  const num::RadialWavefunction wf2{{1.0, 0.0, 0.0}, 2.0, 3.0, 1.5};
  for (double r : {1e-2, 1e-4, 1e-6})
    CHECK(num::wavefunction_eval(wf2, r) / std::pow(r, 2.5) == doctest::Approx(1.0).epsilon(3 * r * r));
  CHECK_THROWS_AS(num::wavefunction_eval(wf, 0.0), std::domain_error);
}

TEST_CASE("QES wavefunctions solve the radial equation")
{
  // -psi'' + (ell(ell+1)/r^2 + a r^2 + b r^4 + c r^6) psi = E psi, by central differences
  struct Case {
    ModelParams p;
    Rational D;
  };
  const std::vector<Case> cases{{{2, 0, 1, 1}, 3}, {{3, 1, 1, 1}, 5}, {{4, 0, Rational(1, 2), 2}, Rational(7, 2)}};
  for (const auto& c : cases)
    for (int state = 0; state < c.p.N; ++state) {
      const auto wf = num::qes_wavefunction(c.p, c.D, state);
      const double E = num::qes_spectrum_numeric(c.p, c.D)[state];
      const double a = qes::qes_coupling_a(c.p, c.D).to_double();
      const double beta = c.p.beta.to_double(), gamma = c.p.gamma.to_double();
      const double b = 2 * beta * gamma, cc = gamma * gamma;
      const double ell = wf.ell;
      const double h = 1e-4;
      double worst = 0.0;
      for (double r = 0.3; r <= 2.5; r += 0.1) {
        const double psi = num::wavefunction_eval(wf, r);
        const double d2 =
            (num::wavefunction_eval(wf, r + h) - 2 * psi + num::wavefunction_eval(wf, r - h)) / (h * h);
        const double pot = ell * (ell + 1) / (r * r) + a * r * r + b * std::pow(r, 4) + cc * std::pow(r, 6);
        const double scale = std::fabs(d2) + std::fabs(pot * psi) + std::fabs(E * psi);
        worst = std::max(worst, std::fabs(-d2 + pot * psi - E * psi) / scale);
      }
      CAPTURE(state);
      CHECK(worst <= 1e-6);
    }
}

TEST_CASE("QES block embeds in larger truncations")
{
  for (int N : {1, 2, 4, 6})
    for (int extra : {0, 20, 40}) {
      CAPTURE(N);
      CAPTURE(extra);
      const auto rep = num::embedding_check({N, 0, 1, 1}, 5, extra);
      CHECK(rep.n_trunc == N + extra);
      CHECK(rep.coupling_vanishes);
      CHECK(rep.matched.size() == static_cast<std::size_t>(N));
      CHECK(rep.max_relative_deviation <= 1e-8);
    }
  CHECK(num::embedding_check({2, 0, 1, 1}, 3, 40).max_relative_deviation <= 1e-8);
  CHECK_THROWS_AS(num::embedding_check({2, 0, 1, 1}, 3, -1), std::invalid_argument);
}

}
