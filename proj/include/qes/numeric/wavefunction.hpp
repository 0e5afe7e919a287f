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

#ifndef QES_NUMERIC_WAVEFUNCTION_HPP
#define QES_NUMERIC_WAVEFUNCTION_HPP

#include <vector>

#include "qes/model.hpp"

namespace qes::numeric {

/**
 * Terminated radial ansatz
 *   psi(r) = sum_{n<N} h_n r^(2n + ell + 1) exp(-beta r^2/2 - gamma r^4/4).
 * Coefficients beyond h_{N-1} are zero.
 */
struct RadialWavefunction {
  std::vector<double> h;
  double beta = 1.0;
  double gamma = 1.0;
  double ell = 0.0;
};

/// Requires r > 0.
double wavefunction_eval(const RadialWavefunction& wf, double r);

/// Wavefunction of the state-th QES level (ascending energy) at dimension D,
/// with h the unit-norm eigenvector of the QES block.
RadialWavefunction qes_wavefunction(const ModelParams& params, const Rational& D, int state);

} // namespace qes::numeric

#endif // QES_NUMERIC_WAVEFUNCTION_HPP
