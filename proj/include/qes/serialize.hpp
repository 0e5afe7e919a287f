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

#ifndef QES_SERIALIZE_HPP
#define QES_SERIALIZE_HPP

#include <json.hpp>

#include "qes/exact_matrix.hpp"

// Exact values are always strings in JSON, never numbers.
namespace qes {

using json = nlohmann::json;

json to_json(const Rational& q);
json to_json(const TPoly& p);
json to_json(const RationalMatrix& m);
json to_json(const ExactMatrix& m);

Rational rational_from_json(const json& j);
TPoly tpoly_from_json(const json& j);
RationalMatrix rational_matrix_from_json(const json& j);
ExactMatrix exact_matrix_from_json(const json& j);

} // namespace qes

#endif // QES_SERIALIZE_HPP
