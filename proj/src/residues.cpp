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

#include "malmsten/residues.hpp"

#include <stdexcept>

namespace malmsten {

namespace {

TruncatedSeries<GaussRational> to_gauss(const TruncatedSeries<BigRational>& s) {
    TruncatedSeries<GaussRational> r(s.leading_order, s.truncation_order);
    for (size_t i = 0; i < s.coeffs.size(); ++i) r.coeffs[i] = GaussRational(s.coeffs[i]);
    return r;
}

TruncatedSeries<PiLaurent> to_pi(const TruncatedSeries<GaussRational>& s) {
    TruncatedSeries<PiLaurent> r(s.leading_order, s.truncation_order);
    for (size_t i = 0; i < s.coeffs.size(); ++i) r.coeffs[i] = PiLaurent(s.coeffs[i], 0);
    return r;
}

}  // namespace

TruncatedSeries<GaussRational> laurent_inverse_cosh_pow(unsigned n, long l, int order) {
    if (n < 1) throw std::domain_error("laurent_inverse_cosh_pow: n >= 1 required");
    if (order < -static_cast<int>(n))
        throw std::domain_error("laurent_inverse_cosh_pow: order below pole order");
    // sinh^n w needs relative depth order + n beyond its leading term.
    int trunc = order + 2 * static_cast<int>(n);
    auto sinh_n = series_pow(to_gauss(sinh_series(1, trunc)), n, GaussRational(BigRational(1)));
    auto inv = series_invert(sinh_n);  // leading order -n
    // 1 / sinh^n(z_l) = (i (-1)^l)^{-n}
    GaussRational scale = GaussRational::i_pow(-static_cast<long>(n));
    if ((l * static_cast<long>(n)) % 2 != 0) scale = GaussRational{} - scale;
    auto r = series_scale(inv, scale);
    if (r.truncation_order > order) {
        r.coeffs.resize(static_cast<size_t>(order - r.leading_order + 1));
        r.truncation_order = order;
    }
    return r;
}

TruncatedSeries<PiLaurent> taylor_sinh_ratio(unsigned k, long l, int order) {
    if (order < 0) throw std::domain_error("taylor_sinh_ratio: order >= 0 required");
    // sinh((2k+1)(z_l+w)) = i (-1)^{k+l} cosh((2k+1) w), because
    // cosh((2k+1) z_l) = 0 and sinh((2k+1) z_l) = i (-1)^{k+l}.
    auto osc = to_pi(to_gauss(cosh_series(2 * static_cast<long>(k) + 1, order)));
    GaussRational front = GaussRational::i();
    if ((static_cast<long>(k) + l) % 2 != 0) front = GaussRational{} - front;
    osc = series_scale(osc, PiLaurent(front, 0));

    // 1/(z_l + w) = sum_m (-1)^m w^m / z_l^{m+1},  z_l = (2l+1) i pi/2.
    TruncatedSeries<PiLaurent> geom(0, order);
    BigRational two_over = make_rational(2, 2 * l + 1);
    for (int m = 0; m <= order; ++m) {
        // (-1)^m / z_l^{m+1} = (-1)^m (-i)^{m+1} (2/(2l+1))^{m+1} pi^{-(m+1)}
        GaussRational c = GaussRational::i_pow(-(m + 1)) * GaussRational(rational_pow(two_over, m + 1));
        if (m % 2 != 0) c = GaussRational{} - c;
        geom.at(m) = PiLaurent(c, -(m + 1));
    }
    return series_mul(osc, geom);
}

PiLaurent residue_at_pole(unsigned n, unsigned k, long l) {
    auto cosh_part = to_pi(laurent_inverse_cosh_pow(n, l, -1));
    auto ratio_part = taylor_sinh_ratio(k, l, static_cast<int>(n) - 1);
    return series_mul(cosh_part, ratio_part).coeff(-1);
}

std::string to_string(const GaussRational& z) {
    if (z.is_zero()) return "0";
    std::string s;
    if (z.re != 0) s = to_string(z.re);
    if (z.im != 0) {
        if (!s.empty() && z.im > 0) s += "+";
        s += to_string(z.im) + "*i";
    }
    return s;
}

std::string to_string(const PiLaurent& x) {
    if (x.is_zero()) return "0";
    std::string s;
    for (const auto& [p, c] : x.terms) {
        if (!s.empty()) s += " + ";
        s += "(" + to_string(c) + ")";
        if (p != 0) s += "*pi^" + std::to_string(p);
    }
    return s;
}

}  // namespace malmsten
