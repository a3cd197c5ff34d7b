// Copyright 2026 The Malmsten Toolkit Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "malmsten/quadrature.hpp"
#include "malmsten/real.hpp"
#include "malmsten/reconstruct.hpp"

namespace malmsten::io {

using Json = nlohmann::json;

// Values travel as decimal strings with explicit error bounds, never binary
// floats; enough digits are emitted that parsing at the same precision is
// the identity.
Json real_to_json(const Real& x);
Real real_from_json(const Json& j);

Json quadrature_to_json(const std::string& kernel_id, const QuadratureResult& r);
Json relation_to_json(const RelationResult& r);
RelationResult relation_from_json(const Json& j);
Json coeff_row_to_json(const CoeffRow& row);
CoeffRow coeff_row_from_json(const Json& j);
Json coeff_table_to_json(const CoeffTable& table);
Json polynomial_to_json(const RationalPolynomial& p);
RationalPolynomial polynomial_from_json(const Json& j);

// RFC-style CSV quoting: fields with commas, quotes or newlines are wrapped
// and inner quotes doubled.
std::string csv_field(const std::string& s);
std::string csv_line(const std::vector<std::string>& fields);

}  // namespace malmsten::io
