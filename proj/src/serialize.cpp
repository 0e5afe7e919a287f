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

#include "qes/serialize.hpp"

namespace qes {

json to_json(const Rational& q) { return q.str(); }

json to_json(const TPoly& p) { return p.to_strings(); }

json to_json(const RationalMatrix& m)
{
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const ExactMatrix& m)
{
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Rational rational_from_json(const json& j)
{
  if (!j.is_string())
    throw ParseError("exact value must be a string, got " + j.dump());
  return Rational::parse(j.get<std::string>());
}

TPoly tpoly_from_json(const json& j)
{
  if (!j.is_array())
    throw ParseError("polynomial must be an array of strings, got " + j.dump());
  std::vector<Rational> c;
  for (const auto& e : j)
    c.push_back(rational_from_json(e));
  return TPoly(std::move(c));
}

namespace {

template <typename Scalar, typename Parse>
Matrix<Scalar> matrix_from_json(const json& j, Parse parse)
{
  if (!j.is_array())
    throw ParseError("matrix must be an array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  const auto cols = rows == 0 ? Eigen::Index(0) : static_cast<Eigen::Index>(j[0].size());
  Matrix<Scalar> m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    if (!j[i].is_array() || static_cast<Eigen::Index>(j[i].size()) != cols)
      throw ParseError("ragged matrix row " + std::to_string(i));
    for (Eigen::Index c = 0; c < cols; ++c)
      m(i, c) = parse(j[i][c]);
  }
  return m;
}

} // namespace

RationalMatrix rational_matrix_from_json(const json& j)
{
  return matrix_from_json<Rational>(j, rational_from_json);
}

ExactMatrix exact_matrix_from_json(const json& j) { return matrix_from_json<TPoly>(j, tpoly_from_json); }

} // namespace qes
