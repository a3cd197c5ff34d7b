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

#include <string>
#include <vector>

#include "malmsten/rational.hpp"

namespace malmsten {

// Polynomial over Q, coefficients stored with index = degree. The trailing
// coefficient is nonzero unless the polynomial is zero.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<BigRational> ascending)
        : c_(std::move(ascending)) {
        normalize();
    }

    bool is_zero() const { return c_.empty(); }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<BigRational>& coefficients() const { return c_; }
    BigRational coeff(size_t deg) const {
        return deg < c_.size() ? c_[deg] : BigRational(0);
    }

    BigRational eval(const BigRational& x) const {
        BigRational acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.c_ == b.c_;
    }

    std::string to_display_string(const std::string& var = "x") const;

private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<BigRational> c_;
};

}  // namespace malmsten
