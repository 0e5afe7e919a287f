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

#include "qes/commands.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "qes/kac.hpp"
#include "qes/numeric/energy.hpp"
#include "qes/numeric/oracle.hpp"
#include "qes/numeric/wavefunction.hpp"
#include "qes/rspt.hpp"

namespace qes::cli {

namespace {

// Errors below this are treated as the series being exact in long double.
constexpr long double exact_floor = 1e-15L;

json check(const std::string& name, bool pass, json residual)
{
  return {{"name", name}, {"pass", pass}, {"residual", std::move(residual)}};
}

json params_json(const RunConfig& cfg)
{
  json p = {{"N", cfg.N}, {"k", cfg.k}, {"beta", cfg.beta.str()}, {"gamma", cfg.gamma.str()}};
  if (!cfg.D.empty()) {
    json d = json::array();
    for (const auto& v : cfg.D)
      d.push_back(v.str());
    p["D"] = d;
  }
  return p;
}

const Rational& single_dimension(const RunConfig& cfg)
{
  if (cfg.D.size() != 1)
    throw InvalidParameters(cfg.subcommand + " needs exactly one value of D");
  return cfg.D.front();
}

std::string fmt(double v)
{
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

/// Largest |entry| of an exact matrix, as the residual of a zero check.
Rational max_abs(const RationalMatrix& m)
{
  Rational best;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      best = std::max(best, m(i, j).abs());
  return best;
}

} // namespace

void RunConfig::validate() const
{
  params().validate();
  for (const auto& d : D)
    if (d.sign() <= 0)
      throw InvalidParameters("D must be > 0, got " + d.str());
  if (K < 0)
    throw InvalidParameters("K must be >= 0");
  if (!(tol > 0.0))
    throw InvalidParameters("tolerance must be > 0");
  if (samples < 1)
    throw InvalidParameters("samples must be >= 1");
  if (!(rmax > 0.0))
    throw InvalidParameters("rmax must be > 0");
}

bool Report::ok() const
{
  if (!doc.contains("checks"))
    return true;
  for (const auto& c : doc["checks"])
    if (!c.at("pass").get<bool>())
      return false;
  return true;
}

std::string Report::render(Format format) const
{
  if (format == Format::csv)
    return csv;
  return doc.dump(2) + "\n";
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y)
{
  if (x.size() != y.size() || x.size() < 2)
    throw std::invalid_argument("slope fit needs at least two points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += std::log(x[i]);
    my += std::log(y[i]);
  }
  mx /= static_cast<double>(x.size());
  my /= static_cast<double>(x.size());
  double sxy = 0.0, sxx = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double dx = std::log(x[i]) - mx;
    sxy += dx * (std::log(y[i]) - my);
    sxx += dx * dx;
  }
  return sxy / sxx;
}

Report cmd_spectrum(const RunConfig& cfg)
{
  cfg.validate();
  const ModelParams params = cfg.params();
  const Rational& D = single_dimension(cfg);

  Report r;
  r.doc["params"] = params_json(cfg);
  r.doc["exact"] = {{"a", qes_coupling_a(params, D).str()}};
  const RationalMatrix q = build_qes_matrix(params, D);
  if (cfg.show_matrix)
    r.doc["exact"]["matrix"] = to_json(q);

  const auto sym = numeric::symmetrize(numeric::to_tridiagonal<double>(q));
  const auto values = numeric::eigenvalues_bisection(sym, cfg.tol);
  r.doc["numeric"] = {{"type", "float64"}, {"eigenvalues", values}};
  r.doc["checks"] = json::array();

  auto [lo, hi] = numeric::gershgorin_bounds(sym);
  const auto count = numeric::sturm_count(sym, hi + 1.0) - numeric::sturm_count(sym, lo - 1.0);
  r.doc["checks"].push_back(check("eigenvalue_count", count == params.N, static_cast<long>(count)));

  r.csv = "index,eigenvalue\n";
  for (std::size_t i = 0; i < values.size(); ++i)
    r.csv += std::to_string(i) + "," + fmt(values[i]) + "\n";

  if (cfg.general) {
    if (*cfg.general < params.N)
      throw InvalidParameters("--general truncation must be >= N");
    const auto emb = numeric::embedding_check(params, D, *cfg.general - params.N);
    json matched = json::array();
    for (const auto& z : emb.matched)
      matched.push_back({z.real(), z.imag()});
    r.doc["numeric"]["embedding"] = {{"n_trunc", emb.n_trunc},
                                     {"matched", matched},
                                     {"max_relative_deviation", emb.max_relative_deviation}};
    r.doc["checks"].push_back(check("coupling_vanishes", emb.coupling_vanishes, emb.coupling_vanishes ? "0" : "nonzero"));
    r.doc["checks"].push_back(check("embedding", emb.max_relative_deviation <= 1e-8, emb.max_relative_deviation));
  }
  return r;
}

Report cmd_series(const RunConfig& cfg)
{
  cfg.validate();
  const ModelParams params = cfg.params();
  const SeriesResult s = rspt_run(perturbation_split(params), cfg.K);
  const std::optional<Rational> t = cfg.t ? cfg.t : params.exact_t();

  Report r;
  r.doc["params"] = params_json(cfg);
  r.doc["params"]["K"] = cfg.K;
  r.doc["exact"] = {{"t", t ? json(t->str()) : json("symbolic")},
                    {"t_squared", cfg.t ? (*cfg.t * *cfg.t).str() : params.t_squared().str()},
                    {"lambda_power_of_first_energy_coefficient", -2}};
  json states = json::array();
  r.csv = "state,order,eps_coefficients\n";
  bool degrees_ok = true;
  for (int j = 0; j < s.N; ++j) {
    json eps = json::array();
    for (int order = 0; order <= s.K; ++order) {
      const TPoly& e = s.eps[order][j];
      eps.push_back(to_json(e));
      degrees_ok = degrees_ok && e.degree() <= order && e.has_parity(order);
      std::string joined;
      for (const auto& c : e.to_strings())
        joined += (joined.empty() ? "" : ";") + c;
      r.csv += std::to_string(j) + "," + std::to_string(order) + "," + (joined.empty() ? "0" : joined) + "\n";
    }
    json coeffs = json::array();
    const auto ec = energy_coefficients(s, j);
    for (const auto& c : ec)
      coeffs.push_back(to_json(c));
    json state = {{"index", j}, {"eps", eps}, {"energy_coefficients", coeffs}};
    if (t) {
      json at = json::array();
      for (const auto& c : ec)
        at.push_back(c.evaluate(*t).str());
      state["energy_coefficients_at_t"] = at;
    }
    states.push_back(std::move(state));
  }
  r.doc["exact"]["states"] = states;
  r.doc["checks"] = json::array({check("degree_parity", degrees_ok, degrees_ok ? "0" : "violated")});

  if (!cfg.D.empty()) {
    const double tn = cfg.t ? cfg.t->to_double() : numeric::t_value<double>(params);
    json energies = json::array();
    for (const auto& D : cfg.D) {
      const double lambda = 1.0 / std::sqrt(D.to_double());
      json e = json::array();
      for (int j = 0; j < s.N; ++j)
        e.push_back(numeric::energy_partial_sum(energy_coefficients(s, j), tn, lambda, params));
      energies.push_back({{"D", D.str()}, {"E", e}});
    }
    r.doc["numeric"] = {{"type", "float64"}, {"t", tn}, {"energies", energies}};
  }
  return r;
}

Report cmd_validate(const RunConfig& cfg)
{
  cfg.validate();
  if (cfg.D.empty())
    throw InvalidParameters("validate needs at least one value of D");
  if (cfg.t)
    throw InvalidParameters("--t only applies to the series subcommand");
  using Real = long double;
  const ModelParams params = cfg.params();
  const SeriesResult s = rspt_run(perturbation_split(params), cfg.K);
  const Real t = numeric::t_value<Real>(params);
  const double expected = -(cfg.K + 1) / 2.0;

  Report r;
  r.doc["params"] = params_json(cfg);
  r.doc["params"]["K"] = cfg.K;
  r.doc["checks"] = json::array();

  std::vector<double> ds;
  std::vector<std::vector<double>> errors(s.N);
  std::vector<double> rel_at_largest(s.N, 0.0);
  json points = json::array();
  r.csv = "D,state,oracle_E,series_E,abs_error_eps,rel_error_E\n";

  // largest D last
  std::vector<Rational> dims = cfg.D;
  std::sort(dims.begin(), dims.end());
  for (const auto& D : dims) {
    const Real dn = numeric::real_of<Real>(D);
    const Real lambda = Real(1) / std::sqrt(dn);
    const auto oracle = numeric::qes_epsilon_numeric<Real>(params, D, Real(1e-18L));
    json states = json::array();
    ds.push_back(static_cast<double>(dn));
    for (int j = 0; j < s.N; ++j) {
      const Real series = numeric::epsilon_partial_sum(s, j, t, lambda, cfg.K);
      const Real err = std::fabs(series - oracle[j]);
      const Real e_oracle = numeric::energy_from_epsilon(oracle[j], dn, params);
      const Real e_series = numeric::energy_from_epsilon(series, dn, params);
      const Real rel = std::fabs(e_series - e_oracle) / std::fabs(e_oracle);
      errors[j].push_back(static_cast<double>(err));
      rel_at_largest[j] = static_cast<double>(rel);
      states.push_back({{"oracle_E", static_cast<double>(e_oracle)},
                        {"series_E", static_cast<double>(e_series)},
                        {"oracle_eps", static_cast<double>(oracle[j])},
                        {"series_eps", static_cast<double>(series)},
                        {"abs_error_eps", static_cast<double>(err)},
                        {"rel_error_E", static_cast<double>(rel)}});
      r.csv += D.str() + "," + std::to_string(j) + "," + fmt(static_cast<double>(e_oracle)) + "," +
               fmt(static_cast<double>(e_series)) + "," + fmt(static_cast<double>(err)) + "," +
               fmt(static_cast<double>(rel)) + "\n";
    }
    points.push_back({{"D", D.str()}, {"states", states}});
  }

  json slopes = json::array();
  for (int j = 0; j < s.N; ++j) {
    std::vector<double> x, y;
    for (std::size_t i = 0; i < ds.size(); ++i)
      if (errors[j][i] > static_cast<double>(exact_floor)) {
        x.push_back(ds[i]);
        y.push_back(errors[j][i]);
      }
    const std::string name = "slope_state_" + std::to_string(j);
    if (x.empty()) {
      slopes.push_back("exact");
      r.doc["checks"].push_back(check(name, true, 0.0));
    } else if (x.size() < 2) {
      slopes.push_back(nullptr);
    } else {
      const double slope = loglog_slope(x, y);
      const double deviation = std::abs(slope - expected) / std::abs(expected);
      slopes.push_back(slope);
      r.doc["checks"].push_back(check(name, deviation <= cfg.slope_tolerance, deviation));
    }
    r.doc["checks"].push_back(check("relative_error_state_" + std::to_string(j),
                                    rel_at_largest[j] <= cfg.max_relative_error, rel_at_largest[j]));
  }
  r.doc["numeric"] = {{"type", "float64"}, {"expected_slope", expected}, {"slopes", slopes}, {"points", points}};
  return r;
}

Report cmd_pmatrix(const RunConfig& cfg)
{
  if (cfg.N < 1)
    throw InvalidParameters("N must be >= 1");
  const KacDecomposition dec = build_P(cfg.N);
  const KacResiduals res = kac_residuals(dec);

  Report r;
  r.doc["params"] = {{"N", cfg.N}};
  json z = json::array();
  for (long v : dec.Z)
    z.push_back(std::to_string(v));
  r.doc["exact"] = {{"T", to_json(dec.T)},
                    {"M", to_json(dec.M)},
                    {"scale_pow", dec.scale_pow},
                    {"scale", "1/sqrt(" + pow2(dec.scale_pow).str() + ")"},
                    {"Z", z},
                    {"residuals",
                     {{"involution", to_json(res.involution)}, {"right", to_json(res.right)}, {"left", to_json(res.left)}}}};
  r.doc["checks"] = json::array({check("involution", is_zero(res.involution), max_abs(res.involution).str()),
                                 check("right_eigenvectors", is_zero(res.right), max_abs(res.right).str()),
                                 check("left_eigenvectors", is_zero(res.left), max_abs(res.left).str())});
  r.csv = "row";
  for (int j = 0; j < cfg.N; ++j)
    r.csv += ",col" + std::to_string(j);
  r.csv += "\n";
  for (int i = 0; i < cfg.N; ++i) {
    r.csv += std::to_string(i);
    for (int j = 0; j < cfg.N; ++j)
      r.csv += "," + dec.M(i, j).str();
    r.csv += "\n";
  }
  return r;
}

Report cmd_wavefunction(const RunConfig& cfg)
{
  cfg.validate();
  const ModelParams params = cfg.params();
  const Rational& D = single_dimension(cfg);
  if (cfg.state < 0 || cfg.state >= params.N)
    throw InvalidParameters("state must be in [0, N)");
  const auto wf = numeric::qes_wavefunction(params, D, cfg.state);
  const double energy = numeric::qes_spectrum_numeric<double>(params, D, cfg.tol)[cfg.state];

  Report r;
  r.doc["params"] = params_json(cfg);
  r.doc["params"]["state"] = cfg.state;
  json samples = json::array();
  r.csv = "r,psi\n";
  for (int i = 1; i <= cfg.samples; ++i) {
    const double radius = cfg.rmax * i / cfg.samples;
    const double psi = numeric::wavefunction_eval(wf, radius);
    samples.push_back({radius, psi});
    r.csv += fmt(radius) + "," + fmt(psi) + "\n";
  }
  r.doc["numeric"] = {{"type", "float64"}, {"energy", energy}, {"ell", wf.ell}, {"h", wf.h}, {"samples", samples}};
  r.doc["checks"] = json::array();
  return r;
}

Report run(const RunConfig& cfg)
{
  if (cfg.subcommand == "spectrum")
    return cmd_spectrum(cfg);
  if (cfg.subcommand == "series")
    return cmd_series(cfg);
  if (cfg.subcommand == "validate")
    return cmd_validate(cfg);
  if (cfg.subcommand == "pmatrix")
    return cmd_pmatrix(cfg);
  if (cfg.subcommand == "wavefunction")
    return cmd_wavefunction(cfg);
  throw std::invalid_argument("unknown subcommand '" + cfg.subcommand + "'");
}

} // namespace qes::cli
