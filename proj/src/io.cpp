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

#include "malmsten/io.hpp"

#include <cmath>

namespace malmsten::io {

namespace {

size_t digits_for_prec(mpfr_prec_t prec) {
    return static_cast<size_t>(std::ceil(static_cast<double>(prec) * 0.30103)) + 3;
}

}  // namespace

Json real_to_json(const Real& x) {
    Json j;
    j["value"] = x.to_decimal(digits_for_prec(x.precision()));
    j["error_bound"] = x.is_exact() ? "0" : x.error_to_decimal();
    j["prec_bits"] = static_cast<long>(x.precision());
    return j;
}

Real real_from_json(const Json& j) {
    mpfr_prec_t prec = j.at("prec_bits").get<long>();
    std::string err = j.at("error_bound").get<std::string>();
    return Real::parse(j.at("value").get<std::string>(), err == "0" ? "" : err, prec);
}

Json quadrature_to_json(const std::string& kernel_id, const QuadratureResult& r) {
    Json j;
    j["kernel"] = kernel_id;
    j["result"] = real_to_json(r.value);
    j["nodes_used"] = r.nodes_used;
    j["levels"] = r.levels;
    j["transform"] = to_string(r.transform);
    return j;
}

Json relation_to_json(const RelationResult& r) {
    Json j;
    j["status"] = r.status == RelationResult::Status::found ? "found" : "none-up-to-bound";
    j["height_bound"] = r.height_bound;
    j["digits_used"] = r.digits_used;
    j["iterations"] = r.iterations;
    if (r.status == RelationResult::Status::found) {
        Json coeffs = Json::array();
        for (const auto& c : r.coefficients) coeffs.push_back(c.get_str());
        j["coefficients"] = coeffs;
        j["residual"] = real_to_json(r.residual);
    } else {
        j["norm_lower_bound"] = to_string(r.norm_bound);
    }
    return j;
}

RelationResult relation_from_json(const Json& j) {
    RelationResult r;
    r.status = j.at("status").get<std::string>() == "found"
                   ? RelationResult::Status::found
                   : RelationResult::Status::none_up_to_bound;
    r.height_bound = j.at("height_bound").get<long>();
    r.digits_used = j.at("digits_used").get<long>();
    r.iterations = j.at("iterations").get<long>();
    if (r.status == RelationResult::Status::found) {
        for (const auto& c : j.at("coefficients"))
            r.coefficients.emplace_back(c.get<std::string>(), 10);
        r.residual = real_from_json(j.at("residual"));
    } else {
        r.norm_bound = parse_rational(j.at("norm_lower_bound").get<std::string>());
    }
    return r;
}

Json coeff_row_to_json(const CoeffRow& row) {
    Json j;
    j["n"] = row.n;
    Json cs = Json::array();
    for (const auto& c : row.coeffs) cs.push_back(to_string(c));
    j["coefficients"] = cs;
    j["certified"] = row.certified;
    j["digits_used"] = row.digits_used;
    j["residual"] = real_to_json(row.residual);
    return j;
}

CoeffRow coeff_row_from_json(const Json& j) {
    CoeffRow row;
    row.n = j.at("n").get<long>();
    for (const auto& c : j.at("coefficients"))
        row.coeffs.push_back(parse_rational(c.get<std::string>()));
    row.certified = j.at("certified").get<bool>();
    row.digits_used = j.at("digits_used").get<long>();
    row.residual = real_from_json(j.at("residual"));
    return row;
}

Json coeff_table_to_json(const CoeffTable& table) {
    Json j;
    j["family"] = coeff_family_name(table.family);
    j["basis"] = table.zeta_basis ? "zeta" : "beta";
    Json rows = Json::array();
    for (const auto& r : table.rows) rows.push_back(coeff_row_to_json(r));
    j["rows"] = rows;
    return j;
}

Json polynomial_to_json(const RationalPolynomial& p) {
    Json j;
    Json cs = Json::array();
    for (const auto& c : p.coefficients()) cs.push_back(to_string(c));
    j["coefficients_ascending"] = cs;
    j["display"] = p.to_display_string();
    return j;
}

RationalPolynomial polynomial_from_json(const Json& j) {
    std::vector<BigRational> cs;
    for (const auto& c : j.at("coefficients_ascending"))
        cs.push_back(parse_rational(c.get<std::string>()));
    return RationalPolynomial(std::move(cs));
}

std::string csv_field(const std::string& s) {
    bool needs_quote = s.find_first_of(",\"\n\r") != std::string::npos;
    if (!needs_quote) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_line(const std::vector<std::string>& fields) {
    std::string out;
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out += ',';
        out += csv_field(fields[i]);
    }
    out += '\n';
    return out;
}

}  // namespace malmsten::io
