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

// qes-sextic: exact large-D perturbation series for the QES sextic oscillator.

#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "qes/commands.hpp"

namespace {

using qes::Rational;
using qes::cli::Format;
using qes::cli::RunConfig;

struct Flags {
  std::string beta = "1";
  std::string gamma = "1";
  std::vector<std::string> dims;
  std::string t;
  std::string format;
};

void add_model_flags(CLI::App* sub, RunConfig& cfg, Flags& f, bool needs_dimension)
{
  sub->add_option("-N", cfg.N, "QES block size (number of exact states)")->check(CLI::PositiveNumber);
  sub->add_option("-k", cfg.k, "angular momentum")->check(CLI::NonNegativeNumber);
  sub->add_option("--beta", f.beta, "beta as num/den (b = 2 beta gamma)");
  sub->add_option("--gamma", f.gamma, "gamma as num/den (c = gamma^2)");
  auto* d = sub->add_option("-D", f.dims, "spatial dimension(s), comma separated, num/den each")->delimiter(',');
  if (needs_dimension)
    d->required();
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Exact large-dimension perturbation series for the quasi-exactly solvable sextic oscillator"};
  app.require_subcommand(1);
  RunConfig cfg;
  Flags f;

  auto* spectrum = app.add_subcommand("spectrum", "numeric spectrum of the QES block at one D");
  add_model_flags(spectrum, cfg, f, true);
  spectrum->add_flag("--show-matrix", cfg.show_matrix, "include the exact matrix");
  spectrum->add_option("--general", cfg.general, "truncation size for the embedding check");

  auto* series = app.add_subcommand("series", "exact perturbation series through order K");
  add_model_flags(series, cfg, f, false);
  series->add_option("-K", cfg.K, "maximum order")->check(CLI::NonNegativeNumber);
  series->add_option("--t", f.t, "rational value of t = beta/sqrt(2 gamma)");

  auto* validate = app.add_subcommand("validate", "compare series partial sums with the numeric oracle");
  add_model_flags(validate, cfg, f, true);
  validate->add_option("-K", cfg.K, "maximum order")->check(CLI::NonNegativeNumber);
  validate->add_option("--max-rel", cfg.max_relative_error, "relative energy error allowed at the largest D");
  validate->add_option("--slope-tol", cfg.slope_tolerance, "allowed relative deviation of the fitted slope");

  auto* pmatrix = app.add_subcommand("pmatrix", "integer eigenvector matrix of the infinite-D limit");
  pmatrix->add_option("-N", cfg.N, "matrix size")->check(CLI::PositiveNumber);

  auto* wave = app.add_subcommand("wavefunction", "sample the radial wavefunction of one QES state");
  add_model_flags(wave, cfg, f, true);
  wave->add_option("--state", cfg.state, "state index, ascending energy")->check(CLI::NonNegativeNumber);
  wave->add_option("--rmax", cfg.rmax, "largest radius sampled");
  wave->add_option("--samples", cfg.samples, "number of samples")->check(CLI::PositiveNumber);

  for (auto* sub : {spectrum, series, validate, pmatrix, wave}) {
    sub->add_option("--format", f.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--tol", cfg.tol, "eigenvalue tolerance");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    // --help and --version are successful exits; every usage error is 2
    return rc == 0 ? 0 : 2;
  }

  try {
    cfg.subcommand = app.get_subcommands().front()->get_name();
    cfg.beta = Rational::parse(f.beta);
    cfg.gamma = Rational::parse(f.gamma);
    for (const auto& d : f.dims)
      cfg.D.push_back(Rational::parse(d));
    if (!f.t.empty())
      cfg.t = Rational::parse(f.t);
    if (f.format.empty())
      cfg.format = cfg.subcommand == "wavefunction" ? Format::csv : Format::json;
    else
      cfg.format = f.format == "csv" ? Format::csv : Format::json;

    const auto report = qes::cli::run(cfg);
    std::cout << report.render(cfg.format);
    return report.ok() ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
