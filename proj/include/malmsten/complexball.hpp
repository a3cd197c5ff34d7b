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

#include "malmsten/real.hpp"

namespace malmsten {

// Rectangular complex ball built from two tracked reals. Used for the
// imaginary-axis evaluations (Li_{-n}(ix)) and the contour-quadrature
// residue oracle.
struct Complex {
    Real re;
    Real im;

    Complex() = default;
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    static Complex from_real(Real r) {
        mpfr_prec_t p = r.precision();
        return {std::move(r), Real(p)};
    }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex cneg(const Complex& a);
Complex cpow_ui(const Complex& a, unsigned long n);
Real abs_sqr(const Complex& a);

Complex csinh(const Complex& z);
Complex ccosh(const Complex& z);

}  // namespace malmsten
