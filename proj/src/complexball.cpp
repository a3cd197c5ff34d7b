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

#include "malmsten/complexball.hpp"

namespace malmsten {

Complex operator+(const Complex& a, const Complex& b) {
    return {add(a.re, b.re), add(a.im, b.im)};
}

Complex operator-(const Complex& a, const Complex& b) {
    return {sub(a.re, b.re), sub(a.im, b.im)};
}

Complex operator*(const Complex& a, const Complex& b) {
    return {sub(mul(a.re, b.re), mul(a.im, b.im)),
            add(mul(a.re, b.im), mul(a.im, b.re))};
}

Complex operator/(const Complex& a, const Complex& b) {
    Real n = abs_sqr(b);
    Complex conj_num = {add(mul(a.re, b.re), mul(a.im, b.im)),
                        sub(mul(a.im, b.re), mul(a.re, b.im))};
    return {div(conj_num.re, n), div(conj_num.im, n)};
}

Complex cneg(const Complex& a) { return {neg(a.re), neg(a.im)}; }

Complex cpow_ui(const Complex& a, unsigned long n) {
    Complex acc = a;
    if (n == 0) {
        Real one = Real::from_long(1, a.re.precision());
        return Complex::from_real(one);
    }
    Complex base = a;
    bool first = true;
    while (n > 0) {
        if (n & 1ul) {
            acc = first ? base : acc * base;
            first = false;
        }
        n >>= 1ul;
        if (n > 0) base = base * base;
    }
    return acc;
}

Real abs_sqr(const Complex& a) { return add(sqr(a.re), sqr(a.im)); }

Complex csinh(const Complex& z) {
    // sinh(x+iy) = sinh x cos y + i cosh x sin y
    return {mul(sinh(z.re), cos(z.im)), mul(cosh(z.re), sin(z.im))};
}

Complex ccosh(const Complex& z) {
    return {mul(cosh(z.re), cos(z.im)), mul(sinh(z.re), sin(z.im))};
}

}  // namespace malmsten
