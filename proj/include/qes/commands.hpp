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

#ifndef QES_COMMANDS_HPP
#define QES_COMMANDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "qes/model.hpp"
#include "qes/serialize.hpp"

namespace qes::cli {

enum class Format { json, csv };

struct RunConfig {
  std::string subcommand;
  int N = 1;
  int k = 0;
  Rational beta = 1;
  Rational gamma = 1;
  std::vector<Rational> D;
  int K = 10;
  std::optional<Rational> t; ///< overrides beta / sqrt(2 gamma) in series output
  Format format = Format::json;
  double tol = 1e-12;

  bool show_matrix = false;
  std::optional<int> general; ///< truncation size for the embedding check
  int state = 0;
  double rmax = 3.0;
  int samples = 64;
  double max_relative_error = 1e-10;
  double slope_tolerance = 0.2;

  ModelParams params() const { return {N, k, beta, gamma}; }
  /// Throws InvalidParameters for anything the model would reject.
  void validate() const;
};

/**
 * Output of one subcommand. `doc` follows
 *   { "params": {...}, "exact": {...}, "numeric": {...}, "checks": [...] }
 * where exact values are strings and numeric blocks carry "type": "float64".
 */
struct Report {
  json doc;
  std::string csv;

  bool ok() const;
  std::string render(Format format) const;
};

Report cmd_spectrum(const RunConfig& cfg);
Report cmd_series(const RunConfig& cfg);
Report cmd_validate(const RunConfig& cfg);
Report cmd_pmatrix(const RunConfig& cfg);
Report cmd_wavefunction(const RunConfig& cfg);

/// Dispatch on cfg.subcommand.
Report run(const RunConfig& cfg);

/// Least-squares slope of log(y) against log(x).
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace qes::cli

#endif // QES_COMMANDS_HPP
