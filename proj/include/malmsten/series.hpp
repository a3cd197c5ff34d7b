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

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "malmsten/rational.hpp"

namespace malmsten {

// Finite Laurent/Taylor series in one variable w, known modulo
// O(w^{truncation_order+1}). Coefficients live in an exact ring C
// (BigRational, GaussRational, PiLaurent).
//
// Invariant: coeffs.size() == truncation_order - leading_order + 1.
template <typename C>
struct TruncatedSeries {
    int leading_order = 0;
    int truncation_order = -1;
    std::vector<C> coeffs;  // coeffs[i] multiplies w^{leading_order + i}

    TruncatedSeries() = default;
    TruncatedSeries(int lead, int trunc)
        : leading_order(lead), truncation_order(trunc) {
        if (trunc < lead) throw std::invalid_argument("series: trunc < lead");
        coeffs.assign(static_cast<size_t>(trunc - lead + 1), C{});
    }

    const C& coeff(int order) const {
        static const C zero{};
        if (order < leading_order || order > truncation_order) return zero;
        return coeffs[static_cast<size_t>(order - leading_order)];
    }
    C& at(int order) { return coeffs.at(static_cast<size_t>(order - leading_order)); }

    static TruncatedSeries constant(const C& value, int trunc) {
        TruncatedSeries s(0, trunc);
        s.coeffs[0] = value;
        return s;
    }
    static TruncatedSeries monomial(const C& value, int order, int trunc) {
        TruncatedSeries s(order, std::max(order, trunc));
        s.coeffs[0] = value;
        return s;
    }

    // Drops exactly-zero leading coefficients without losing knowledge.
    void trim_leading_zeros() {
        size_t i = 0;
        while (i + 1 < coeffs.size() && coeffs[i] == C{}) ++i;
        if (i > 0) {
            coeffs.erase(coeffs.begin(), coeffs.begin() + static_cast<long>(i));
            leading_order += static_cast<int>(i);
        }
    }
};

template <typename C>
TruncatedSeries<C> series_add(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
    int lead = std::min(a.leading_order, b.leading_order);
    int trunc = std::min(a.truncation_order, b.truncation_order);
    TruncatedSeries<C> r(lead, trunc);
    for (int o = lead; o <= trunc; ++o) r.at(o) = a.coeff(o) + b.coeff(o);
    return r;
}

template <typename C>
TruncatedSeries<C> series_scale(const TruncatedSeries<C>& a, const C& s) {
    TruncatedSeries<C> r = a;
    for (auto& c : r.coeffs) c = c * s;
    return r;
}

// Cauchy product. The result is only trustworthy to the order both factors
// support: min(trunc_a + lead_b, trunc_b + lead_a).
template <typename C>
TruncatedSeries<C> series_mul(const TruncatedSeries<C>& a, const TruncatedSeries<C>& b) {
    int lead = a.leading_order + b.leading_order;
    int trunc = std::min(a.truncation_order + b.leading_order,
                         b.truncation_order + a.leading_order);
    TruncatedSeries<C> r(lead, trunc);
    for (size_t i = 0; i < a.coeffs.size(); ++i) {
        int oa = a.leading_order + static_cast<int>(i);
        if (oa + b.leading_order > trunc) break;
        if (a.coeffs[i] == C{}) continue;
        for (size_t j = 0; j < b.coeffs.size(); ++j) {
            int o = oa + b.leading_order + static_cast<int>(j);
            if (o > trunc) break;
            r.at(o) = r.at(o) + a.coeffs[i] * b.coeffs[j];
        }
    }
    return r;
}

inline BigRational invert_scalar(const BigRational& q) {
    if (q == 0) throw std::domain_error("invert_scalar: zero");
    return 1 / q;
}

// Multiplicative inverse: series_mul(a, series_invert(a)) == 1 up to the
// supported truncation. Requires a nonzero leading coefficient.
template <typename C>
TruncatedSeries<C> series_invert(const TruncatedSeries<C>& a) {
    TruncatedSeries<C> s = a;
    s.trim_leading_zeros();
    if (s.coeffs.empty() || s.coeffs[0] == C{})
        throw std::domain_error("series_invert: zero leading coefficient");
    int m = s.truncation_order - s.leading_order;  // relative orders carried
    C inv0 = invert_scalar(s.coeffs[0]);
    TruncatedSeries<C> r(-s.leading_order, -s.leading_order + m);
    r.coeffs[0] = inv0;
    for (int k = 1; k <= m; ++k) {
        C acc{};
        for (int j = 1; j <= k; ++j)
            acc = acc + s.coeffs[static_cast<size_t>(j)] * r.coeffs[static_cast<size_t>(k - j)];
        r.coeffs[static_cast<size_t>(k)] = C{} - acc * inv0;
    }
    return r;
}

template <typename C>
TruncatedSeries<C> series_pow(const TruncatedSeries<C>& a, unsigned n, const C& one) {
    if (n == 0) return TruncatedSeries<C>::constant(one, a.truncation_order - a.leading_order);
    TruncatedSeries<C> base = a;
    unsigned e = n;
    bool first = true;
    TruncatedSeries<C> acc;
    while (e > 0) {
        if (e & 1u) {
            acc = first ? base : series_mul(acc, base);
            first = false;
        }
        e >>= 1u;
        if (e > 0) base = series_mul(base, base);
    }
    return acc;
}

// sinh(a w) = sum_{j>=0} a^{2j+1} w^{2j+1} / (2j+1)!   (orders <= trunc)
TruncatedSeries<BigRational> sinh_series(long a, int trunc);
// cosh(a w) = sum_{j>=0} a^{2j} w^{2j} / (2j)!
TruncatedSeries<BigRational> cosh_series(long a, int trunc);

}  // namespace malmsten
