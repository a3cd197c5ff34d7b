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

#include <stdexcept>
#include <vector>

#include "malmsten/rational.hpp"

namespace malmsten {

// Dense rational matrix, row-major. Only the operations the triangular
// inversion work needs.
class RationalMatrix {
public:
    RationalMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {
        if (rows == 0 || cols == 0) throw std::invalid_argument("RationalMatrix: empty");
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    BigRational& at(size_t i, size_t j) { return a_.at(i * cols_ + j); }
    const BigRational& at(size_t i, size_t j) const { return a_.at(i * cols_ + j); }

    bool is_square() const { return rows_ == cols_; }
    bool is_lower_triangular() const {
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = i + 1; j < cols_; ++j)
                if (at(i, j) != 0) return false;
        return true;
    }

    RationalMatrix mul(const RationalMatrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("mul: shape mismatch");
        RationalMatrix r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t k = 0; k < cols_; ++k) {
                if (at(i, k) == 0) continue;
                for (size_t j = 0; j < o.cols_; ++j)
                    r.at(i, j) += at(i, k) * o.at(k, j);
            }
        return r;
    }

private:
    size_t rows_, cols_;
    std::vector<BigRational> a_;
};

// Given the lower-triangular system I_m = sum_{k<=m} M[m][k] J_k, returns the
// coefficients (y_1,...,y_n) with J_{rhs_index} = sum_k y_k I_k, i.e. row
// rhs_index of M^{-1} (1-based row index; entries beyond rhs_index are zero).
// Exact rational arithmetic throughout; a zero diagonal entry is an error.
std::vector<BigRational> triangular_invert(const RationalMatrix& M, size_t rhs_index);

}  // namespace malmsten
