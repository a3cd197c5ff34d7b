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

#include <map>
#include <stdexcept>
#include <string>

#include "malmsten/rational.hpp"

namespace malmsten {

// Element of Q(i). The series machinery works over Gaussian rationals because
// the poles of the hyperbolic kernels sit on the imaginary axis.
struct GaussRational {
    BigRational re;
    BigRational im;

    GaussRational() = default;
    GaussRational(BigRational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
    GaussRational(BigRational r, BigRational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRational i() { return {BigRational(0), BigRational(1)}; }
    // i^e for any integer e
    static GaussRational i_pow(long e) {
        switch (((e % 4) + 4) % 4) {
            case 0: return {BigRational(1), BigRational(0)};
            case 1: return {BigRational(0), BigRational(1)};
            case 2: return {BigRational(-1), BigRational(0)};
            default: return {BigRational(0), BigRational(-1)};
        }
    }

    bool is_zero() const { return re == 0 && im == 0; }
    bool is_real() const { return im == 0; }

    friend bool operator==(const GaussRational& a, const GaussRational& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend GaussRational operator+(const GaussRational& a, const GaussRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussRational operator-(const GaussRational& a, const GaussRational& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussRational operator*(const GaussRational& a, const GaussRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
};

inline GaussRational invert_scalar(const GaussRational& z) {
    BigRational n = z.re * z.re + z.im * z.im;
    if (n == 0) throw std::domain_error("invert_scalar: zero");
    return {z.re / n, BigRational(0) - z.im / n};
}

std::string to_string(const GaussRational& z);

// Finite combination sum_p c_p * pi^p with Gaussian-rational c_p. This is the
// exact carrier for pole residues, whose natural scale is a power of pi.
struct PiLaurent {
    std::map<int, GaussRational> terms;  // pi-power -> coefficient, no zero entries

    PiLaurent() = default;
    PiLaurent(GaussRational c, int pi_power) {  // c * pi^power
        if (!c.is_zero()) terms.emplace(pi_power, std::move(c));
    }

    bool is_zero() const { return terms.empty(); }
    GaussRational coeff(int pi_power) const {
        auto it = terms.find(pi_power);
        return it == terms.end() ? GaussRational{} : it->second;
    }
    void add_term(int pi_power, const GaussRational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms.emplace(pi_power, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms.erase(it);
        }
    }

    friend bool operator==(const PiLaurent& a, const PiLaurent& b) { return a.terms == b.terms; }
    friend PiLaurent operator+(const PiLaurent& a, const PiLaurent& b) {
        PiLaurent r = a;
        for (const auto& [p, c] : b.terms) r.add_term(p, c);
        return r;
    }
    friend PiLaurent operator-(const PiLaurent& a, const PiLaurent& b) {
        PiLaurent r = a;
        for (const auto& [p, c] : b.terms) r.add_term(p, GaussRational{} - c);
        return r;
    }
    friend PiLaurent operator*(const PiLaurent& a, const PiLaurent& b) {
        PiLaurent r;
        for (const auto& [pa, ca] : a.terms)
            for (const auto& [pb, cb] : b.terms) r.add_term(pa + pb, ca * cb);
        return r;
    }
};

inline PiLaurent invert_scalar(const PiLaurent& x) {
    if (x.terms.size() != 1)
        throw std::domain_error("invert_scalar(PiLaurent): only single-term values invert");
    const auto& [p, c] = *x.terms.begin();
    return PiLaurent(invert_scalar(c), -p);
}

std::string to_string(const PiLaurent& x);

}  // namespace malmsten
