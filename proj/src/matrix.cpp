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

#include "malmsten/matrix.hpp"

#include "malmsten/polynomial.hpp"

namespace malmsten {

std::vector<BigRational> triangular_invert(const RationalMatrix& M, size_t rhs_index) {
    if (!M.is_square()) throw std::invalid_argument("triangular_invert: square matrix required");
    if (!M.is_lower_triangular())
        throw std::invalid_argument("triangular_invert: lower-triangular matrix required");
    size_t n = M.rows();
    if (rhs_index < 1 || rhs_index > n)
        throw std::invalid_argument("triangular_invert: rhs_index out of range");
    for (size_t i = 0; i < n; ++i)
        if (M.at(i, i) == 0) throw std::domain_error("triangular_invert: singular system");

    // Row r of M^{-1} solves M^T z = e_r; back substitution top-down on M^T.
    size_t r = rhs_index - 1;
    std::vector<BigRational> z(n);
    for (size_t ii = n; ii-- > 0;) {
        BigRational acc = (ii == r) ? BigRational(1) : BigRational(0);
        for (size_t j = ii + 1; j < n; ++j) acc -= M.at(j, ii) * z[j];
        z[ii] = acc / M.at(ii, ii);
    }
    return z;
}

std::string RationalPolynomial::to_display_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!s.empty()) s += (c_[i] > 0) ? " + " : " - ";
        else if (c_[i] < 0) s += "-";
        BigRational a = abs(c_[i]);
        bool unit = (a == 1) && i > 0;
        if (!unit) s += to_string(a);
        if (i > 0) {
            if (!unit) s += "*";
            s += var;
            if (i > 1) s += "^" + std::to_string(i);
        }
    }
    return s;
}

}  // namespace malmsten
