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

#include "qes/numeric/wavefunction.hpp"

#include <cmath>
#include <stdexcept>

#include "qes/numeric/oracle.hpp"

namespace qes::numeric {

double wavefunction_eval(const RadialWavefunction& wf, double r)
{
  if (!(r > 0.0))
    throw std::domain_error("wavefunction needs r > 0");
  const double r2 = r * r;
  double poly = 0.0;
  for (auto it = wf.h.rbegin(); it != wf.h.rend(); ++it)
    poly = poly * r2 + *it;
  return poly * std::pow(r, wf.ell + 1.0) * std::exp(-0.5 * wf.beta * r2 - 0.25 * wf.gamma * r2 * r2);
}

RadialWavefunction qes_wavefunction(const ModelParams& params, const Rational& D, int state)
{
  RadialWavefunction wf;
  wf.h = qes_eigenvector_numeric(params, D, state);
  wf.beta = params.beta.to_double();
  wf.gamma = params.gamma.to_double();
  wf.ell = params.ell(D).to_double();
  return wf;
}

} // namespace qes::numeric
