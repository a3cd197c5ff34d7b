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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "malmsten/matrix.hpp"
#include "malmsten/polynomial.hpp"
#include "malmsten/rational.hpp"
#include "malmsten/residues.hpp"
#include "malmsten/sequences.hpp"
#include "malmsten/series.hpp"
#include "test_oracles.hpp"

using namespace malmsten;

namespace {

TruncatedSeries<BigRational> geometric_minus(int trunc) {  // 1 - w
    TruncatedSeries<BigRational> s(0, trunc);
    s.at(0) = 1;
    if (trunc >= 1) s.at(1) = -1;
    return s;
}

}  // namespace

TEST_CASE("bernoulli basics and convention") {
    CHECK(bernoulli(0) == BigRational(1));
    CHECK(bernoulli(1) == make_rational(-1, 2));
    CHECK(bernoulli(2) == make_rational(1, 6));
    CHECK(bernoulli(4) == make_rational(-1, 30));
    CHECK(bernoulli(3) == 0);
    CHECK(bernoulli(12) == make_rational(-691, 2730));
}

TEST_CASE("bernoulli matches the recurrence oracle through n = 30") {
    for (unsigned n = 0; n <= 30; ++n) CHECK(bernoulli(n) == oracles::bernoulli_recurrence(n));
}

TEST_CASE("euler numbers: base cases and the recurrence oracle") {
    CHECK(euler_number(0) == 1);
    CHECK(euler_number(2) == -1);
    CHECK(euler_number(4) == 5);
    CHECK(euler_number(6) == -61);
    CHECK_THROWS_AS(euler_number(3), std::domain_error);
    for (unsigned n = 0; n <= 30; n += 2) CHECK(euler_number(n) == oracles::euler_recurrence(n));
}

TEST_CASE("eulerian numbers of both types vs recurrence oracles") {
    CHECK(eulerian_A(1, 0) == 1);
    CHECK(eulerian_A(2, 1) == 1);
    CHECK(eulerian_A(3, 1) == 4);
    CHECK(eulerian_B(1, 0) == 1);
    CHECK(eulerian_B(2, 1) == 6);
    CHECK(eulerian_B(2, 2) == 1);
    CHECK_THROWS_AS(eulerian_A(3, 3), std::domain_error);
    CHECK_THROWS_AS(eulerian_B(3, 4), std::domain_error);
    for (unsigned n = 1; n <= 12; ++n)
        for (long k = 0; k < static_cast<long>(n); ++k)
            CHECK(eulerian_A(n, k) == oracles::eulerian_A_recurrence(n, k));
    for (unsigned n = 1; n <= 12; ++n)
        for (long k = 0; k <= static_cast<long>(n); ++k)
            CHECK(eulerian_B(n, k) == oracles::eulerian_B_recurrence(n, k));
}

TEST_CASE("eulerian row sums: sum_k A(n,k) = n!, sum_k B(n,k) = 2^n n!") {
    for (unsigned n = 1; n <= 8; ++n) {
        BigInt sa = 0, sb = 0;
        for (long k = 0; k < static_cast<long>(n); ++k) sa += eulerian_A(n, k);
        for (long k = 0; k <= static_cast<long>(n); ++k) sb += eulerian_B(n, k);
        CHECK(sa == factorial(n));
        CHECK(sb == factorial(n) * int_pow(BigInt(2), n));
    }
}

TEST_CASE("eulerian rows reproduce the generating-function numerators") {
    // Li_{-n}(z)(1-z)^{n+1} truncated: build sum k^n z^k directly and multiply.
    for (unsigned n = 1; n <= 6; ++n) {
        int trunc = static_cast<int>(n) + 4;
        TruncatedSeries<BigRational> li(1, trunc);
        for (int k = 1; k <= trunc; ++k)
            li.at(k) = BigRational(int_pow(BigInt(k), n));
        auto poly = series_mul(li, series_pow(geometric_minus(trunc), n + 1, BigRational(1)));
        for (int o = poly.leading_order; o <= poly.truncation_order; ++o) {
            long k = static_cast<long>(n) - o;  // coefficient of z^{n-k}
            BigRational expect = (k >= 0 && k < static_cast<long>(n))
                                     ? BigRational(eulerian_A(n, k))
                                     : BigRational(0);
            CHECK(poly.coeff(o) == expect);
        }
        // P_n(x)(1-x)^{n+1}: same with sum (2k+1)^n x^k.
        TruncatedSeries<BigRational> pn(0, trunc);
        for (int k = 0; k <= trunc; ++k)
            pn.at(k) = BigRational(int_pow(BigInt(2 * k + 1), n));
        auto polb = series_mul(pn, series_pow(geometric_minus(trunc), n + 1, BigRational(1)));
        for (int o = polb.leading_order; o <= polb.truncation_order; ++o) {
            BigRational expect = (o >= 0 && o <= static_cast<long>(n))
                                     ? BigRational(eulerian_B(n, o))
                                     : BigRational(0);
            CHECK(polb.coeff(o) == expect);
        }
    }
}

TEST_CASE("series examples from the contract") {
    auto one_plus = geometric_minus(2);
    one_plus.at(1) = 1;  // 1 + w
    auto prod = series_mul(one_plus, geometric_minus(2));
    CHECK(prod.coeff(0) == 1);
    CHECK(prod.coeff(1) == 0);
    CHECK(prod.coeff(2) == -1);

    auto winv = TruncatedSeries<BigRational>::monomial(BigRational(1), -1, -1);
    auto w = TruncatedSeries<BigRational>::monomial(BigRational(1), 1, 1);
    auto unit = series_mul(winv, w);
    CHECK(unit.leading_order == 0);
    CHECK(unit.coeff(0) == 1);

    auto s5 = sinh_series(1, 5);
    auto sq = series_mul(s5, s5);
    CHECK(sq.coeff(2) == 1);
    CHECK(sq.coeff(3) == 0);
    CHECK(sq.coeff(4) == make_rational(1, 3));

    auto geo = series_invert(geometric_minus(5));
    for (int o = 0; o <= 5; ++o) CHECK(geo.coeff(o) == 1);

    auto w2 = TruncatedSeries<BigRational>::monomial(BigRational(1), 2, 2);
    auto w2inv = series_invert(w2);
    CHECK(w2inv.leading_order == -2);
    CHECK(w2inv.coeff(-2) == 1);

    auto sqinv = series_invert(sq);
    CHECK(sqinv.coeff(-2) == 1);
    CHECK(sqinv.coeff(0) == make_rational(-1, 3));

    CHECK_THROWS_AS(series_invert(TruncatedSeries<BigRational>(0, 3)), std::domain_error);
}

TEST_CASE("series invert round-trips on random rational series") {
    std::mt19937 rng(20260808);
    std::uniform_int_distribution<long> num(-20, 20);
    std::uniform_int_distribution<long> den(1, 12);
    std::uniform_int_distribution<int> lead(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        int lo = lead(rng);
        TruncatedSeries<GaussRational> s(lo, lo + 8);
        for (auto& c : s.coeffs)
            c = GaussRational(make_rational(num(rng), den(rng)), make_rational(num(rng), den(rng)));
        if (s.coeffs[0].is_zero()) s.coeffs[0] = GaussRational(BigRational(1));
        auto inv = s;
        inv = series_invert(s);
        auto prod = series_mul(s, inv);
        CHECK(prod.coeff(0) == GaussRational(BigRational(1)));
        for (int o = prod.leading_order; o <= prod.truncation_order; ++o)
            if (o != 0) CHECK(prod.coeff(o).is_zero());
    }
}

TEST_CASE("laurent expansion of 1/cosh^n around the pole") {
    auto s1 = laurent_inverse_cosh_pow(1, 0, 1);
    CHECK(s1.coeff(-1) == GaussRational(BigRational(0), BigRational(-1)));
    CHECK(s1.coeff(0).is_zero());
    CHECK(s1.coeff(1) == GaussRational(BigRational(0), make_rational(1, 6)));

    auto s2 = laurent_inverse_cosh_pow(2, 0, 0);
    CHECK(s2.coeff(-2) == GaussRational(BigRational(-1)));
    CHECK(s2.coeff(0) == GaussRational(make_rational(1, 3)));

    for (unsigned n = 1; n <= 6; ++n)
        for (long l = 0; l <= 1; ++l) {
            auto s = laurent_inverse_cosh_pow(n, l, -static_cast<int>(n));
            auto c = s.coeff(-static_cast<int>(n));
            CHECK(c.re * c.re + c.im * c.im == 1);  // modulus 1
        }
}

TEST_CASE("taylor_sinh_ratio constant term is 2/pi times unit factors") {
    auto t = taylor_sinh_ratio(0, 0, 2);
    PiLaurent c0 = t.coeff(0);
    CHECK(c0.terms.size() == 1);
    CHECK(c0.coeff(-1) == GaussRational(BigRational(2)));
    // k=1, l=0: sinh(3 z_0) = i (-1)^{1}, constant term = -i / z_0 = -2/pi
    auto t2 = taylor_sinh_ratio(1, 0, 0);
    CHECK(t2.coeff(0).coeff(-1) == GaussRational(BigRational(-2)));
}

TEST_CASE("taylor_sinh_ratio converges termwise to the function near the pole") {
    using oracles::Complex;
    long d = 35;
    mpfr_prec_t prec = prec_for_digits(d);
    for (unsigned k = 0; k <= 1; ++k)
        for (long l = 0; l <= 1; ++l) {
            int order = 8;
            auto series = taylor_sinh_ratio(k, l, order);
            Real w = Real::parse("1e-3", "", prec);
            // partial sum of the series at w
            Complex sum{Real(prec), Real(prec)};
            for (int o = 0; o <= order; ++o) {
                Complex c = oracles::pi_laurent_eval(series.coeff(o), d);
                Real wp = pow_si(w, o);
                sum.re = add(sum.re, mul(c.re, wp));
                sum.im = add(sum.im, mul(c.im, wp));
            }
            // direct evaluation of sinh((2k+1)(z_l+w))/(z_l+w)
            Real zl_im = mul_rational(Real::pi(prec), make_rational(2 * l + 1, 2));
            Complex z{w, zl_im};
            long c21 = 2 * static_cast<long>(k) + 1;
            Complex num = csinh(Complex{mul_long(z.re, c21), mul_long(z.im, c21)});
            Complex direct = num / z;
            // agreement limited by the truncation: |w|^{order+1} scale
            CHECK(agree_to_digits(sum.re, direct.re, 3 * (order + 1) - 2));
            CHECK(agree_to_digits(sum.im, direct.im, 3 * (order + 1) - 2));
        }
}

TEST_CASE("taylor_sinh_ratio w-coefficient matches a finite difference at the pole") {
    using oracles::Complex;
    long d = 35;
    mpfr_prec_t prec = prec_for_digits(d);
    auto series = taylor_sinh_ratio(0, 0, 2);
    Complex c1 = oracles::pi_laurent_eval(series.coeff(1), d);
    // central difference of g(w) = sinh(z_0+w)/(z_0+w) at w = 0, h = 1e-9
    Real h = Real::parse("1e-9", "", prec);
    Real zl_im = mul_2si(Real::pi(prec), -1);
    auto eval = [&](const Real& w) {
        Complex z{w, zl_im};
        return csinh(z) / z;
    };
    Complex fp = eval(h);
    Complex fm = eval(neg(h));
    Complex fd{div(sub(fp.re, fm.re), mul_2si(h, 1)), div(sub(fp.im, fm.im), mul_2si(h, 1))};
    CHECK(agree_to_digits(c1.re, fd.re, 15));
    CHECK(agree_to_digits(c1.im, fd.im, 15));
}

TEST_CASE("residue_at_pole closed forms for the simple cases") {
    // res_{z_0} sinh z/(z cosh z) = 1/z_0 = -2i/pi
    PiLaurent r1 = residue_at_pole(1, 0, 0);
    CHECK(r1.terms.size() == 1);
    CHECK(r1.coeff(-1) == GaussRational(BigRational(0), BigRational(-2)));
    // res_{z_0} sinh z/(z cosh^2 z) = -4i/pi^2
    PiLaurent r2 = residue_at_pole(2, 0, 0);
    CHECK(r2.terms.size() == 1);
    CHECK(r2.coeff(-2) == GaussRational(BigRational(0), BigRational(-4)));
}

TEST_CASE("residues are purely imaginary (even integrands on R)") {
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned k = 0; k <= 2; ++k)
            for (long l = 0; l <= 1; ++l) {
                PiLaurent r = residue_at_pole(n, k, l);
                for (const auto& [p, c] : r.terms) CHECK(c.re == 0);
            }
}

TEST_CASE("triangular_invert reproduces the inverse rows") {
    RationalMatrix m1(1, 1);
    m1.at(0, 0) = make_rational(-7, 1);
    auto row1 = triangular_invert(m1, 1);
    CHECK(row1[0] == make_rational(-1, 7));

    RationalMatrix m2(2, 2);
    m2.at(0, 0) = BigRational(-7);
    m2.at(1, 0) = make_rational(-14, 3);
    m2.at(1, 1) = BigRational(124);
    auto row2 = triangular_invert(m2, 2);
    CHECK(row2[0] == make_rational(-1, 186));
    CHECK(row2[1] == make_rational(1, 124));

    RationalMatrix m3(3, 3);
    m3.at(0, 0) = BigRational(-7);
    m3.at(1, 0) = make_rational(-14, 3);
    m3.at(1, 1) = BigRational(124);
    m3.at(2, 0) = make_rational(-161, 45);
    m3.at(2, 1) = make_rational(496, 3);
    m3.at(2, 2) = BigRational(-2032);
    auto row3 = triangular_invert(m3, 3);
    CHECK(row3[0] == make_rational(-17, 91440));
    CHECK(row3[1] == make_rational(1, 1524));
    CHECK(row3[2] == make_rational(-1, 2032));
}

TEST_CASE("triangular_invert then forward multiply gives the identity") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(-9, 9);
    for (int trial = 0; trial < 20; ++trial) {
        size_t n = 1 + static_cast<size_t>(trial % 5);
        RationalMatrix m(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j <= i; ++j) {
                long v = num(rng);
                if (i == j && v == 0) v = 3;
                m.at(i, j) = make_rational(v, 1 + static_cast<long>(j));
            }
        RationalMatrix inv(n, n);
        for (size_t r = 1; r <= n; ++r) {
            auto row = triangular_invert(m, r);
            for (size_t j = 0; j < n; ++j) inv.at(r - 1, j) = row[j];
        }
        auto prod = inv.mul(m);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                CHECK(prod.at(i, j) == (i == j ? BigRational(1) : BigRational(0)));
    }
}

TEST_CASE("triangular_invert rejects singular and non-triangular input") {
    RationalMatrix bad(2, 2);
    bad.at(0, 0) = 1;
    bad.at(1, 1) = 0;
    CHECK_THROWS_AS(triangular_invert(bad, 2), std::domain_error);
    RationalMatrix full(2, 2);
    full.at(0, 0) = 1;
    full.at(0, 1) = 2;
    full.at(1, 1) = 1;
    CHECK_THROWS_AS(triangular_invert(full, 1), std::invalid_argument);
}

TEST_CASE("rational polynomial basics") {
    RationalPolynomial p({make_rational(5, 96), BigRational(0), make_rational(-1, 16)});
    CHECK(p.degree() == 2);
    CHECK(p.eval(BigRational(2)) == make_rational(5, 96) - make_rational(4, 16));
    RationalPolynomial z({BigRational(0), BigRational(0)});
    CHECK(z.is_zero());
    CHECK(p.to_display_string() == "-1/16*x^2 + 5/96");
}

TEST_CASE("rational parsing round trips") {
    CHECK(parse_rational("-14/3") == make_rational(-14, 3));
    CHECK(parse_rational("25") == BigRational(25));
    CHECK(parse_rational("-0.25") == make_rational(-1, 4));
    CHECK(to_string(make_rational(-14, 3)) == "-14/3");
}
