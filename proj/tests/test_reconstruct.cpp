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

#include "malmsten/constants.hpp"
#include "malmsten/matrix.hpp"
#include "malmsten/quadrature.hpp"
#include "malmsten/reconstruct.hpp"
#include "test_oracles.hpp"

using namespace malmsten;

TEST_CASE("rational_reconstruct basics") {
    mpfr_prec_t prec = prec_for_digits(40);
    Real x = Real::parse("0.25", "1e-30", prec);
    auto q = rational_reconstruct(x, BigInt(1000000));
    REQUIRE(q.has_value());
    CHECK(*q == make_rational(1, 4));

    Real bad = Real::parse("0.3333", "1e-2", prec);
    CHECK_THROWS_AS(rational_reconstruct(bad, BigInt(1000000)), InsufficientPrecision);

    // quadrature(F3:1) divided by zeta(3)/pi^2 reconstructs to -7
    Real v = integrate(KernelSpec::parse("F3:1"), 35).value;
    Real ratio = div(v, zeta_ratio(1, 35));
    auto m = rational_reconstruct(ratio, BigInt(100000));
    REQUIRE(m.has_value());
    CHECK(*m == BigRational(-7));
}

TEST_CASE("rational_reconstruct walks convergents to the smallest denominator") {
    mpfr_prec_t prec = prec_for_digits(50);
    Real x = Real::from_rational(make_rational(355, 113), prec);
    x.add_error_pow10(-30);
    auto q = rational_reconstruct(x, BigInt(10000));
    REQUIRE(q.has_value());
    CHECK(*q == make_rational(355, 113));
    // pi itself has no small-denominator representation in a tight window
    Real p = Real::pi(prec);
    p.add_error_pow10(-40);
    CHECK_FALSE(rational_reconstruct(p, BigInt(100000)).has_value());
}

TEST_CASE("pslq finds the contract relations") {
    long d = 40;
    mpfr_prec_t prec = prec_for_digits(d);
    auto r1 = pslq({Real::pi(prec), beta_int(1, d)}, d - 5, 1000);
    REQUIRE(r1.status == RelationResult::Status::found);
    // normalize sign
    std::vector<long> c;
    for (auto& z : r1.coefficients) c.push_back(static_cast<long>(z.get_si()));
    if (c[0] < 0) for (auto& v : c) v = -v;
    CHECK(c == std::vector<long>{1, -4});

    Real f31 = integrate(KernelSpec::parse("F3:1"), d).value;
    auto r2 = pslq({f31, zeta_ratio(1, d)}, d - 5, 1000);
    REQUIRE(r2.status == RelationResult::Status::found);
    std::vector<long> c2;
    for (auto& z : r2.coefficients) c2.push_back(static_cast<long>(z.get_si()));
    if (c2[0] < 0) for (auto& v : c2) v = -v;
    CHECK(c2 == std::vector<long>{1, 7});
    CHECK(r2.residual.error_below_pow10((d - 5) / 2));
}

TEST_CASE("pslq input validation") {
    mpfr_prec_t prec = prec_for_digits(30);
    Real a = Real::pi(prec);
    CHECK_THROWS_AS(pslq({a}, 20, 100), std::invalid_argument);
    Real sloppy = Real::parse("1.5", "0.5", prec);
    CHECK_THROWS_AS(pslq({a, sloppy}, 20, 100), std::invalid_argument);
    // exact zero input gives the unit relation
    Real z(prec);
    auto r = pslq({a, z}, 25, 100);
    CHECK(r.status == RelationResult::Status::found);
    CHECK(r.coefficients[1] == 1);
    CHECK(r.coefficients[0] == 0);
}

TEST_CASE("planted relations are always recovered (100 seeded trials)") {
    std::mt19937 rng(20260808);
    std::uniform_int_distribution<long> coeff(-50, 50);
    std::uniform_int_distribution<long> numer(1000000, 9999999);
    long d = 40;
    mpfr_prec_t prec = prec_for_digits(d);
    for (int trial = 0; trial < 100; ++trial) {
        size_t n = 3 + static_cast<size_t>(trial % 3);
        std::vector<BigRational> vals;
        std::vector<long> planted(n);
        for (size_t i = 0; i + 1 < n; ++i)
            vals.push_back(make_rational(numer(rng), 1000000));
        long cn = 0;
        while (cn == 0) cn = coeff(rng);
        BigRational acc(0);
        for (size_t i = 0; i + 1 < n; ++i) {
            planted[i] = coeff(rng);
            acc += BigRational(planted[i]) * vals[i];
        }
        planted[n - 1] = cn;
        vals.push_back(-acc / BigRational(cn));

        std::vector<Real> reals;
        for (const auto& q : vals) reals.push_back(Real::from_rational(q, prec));
        auto r = pslq(reals, d - 5, 1000000);
        REQUIRE(r.status == RelationResult::Status::found);
        // verify it is a genuine relation of height within the plant's bound
        BigRational dotp(0);
        BigInt maxc(0);
        for (size_t i = 0; i < n; ++i) {
            dotp += BigRational(r.coefficients[i]) * vals[i];
            BigInt a = abs(r.coefficients[i]);
            if (a > maxc) maxc = a;
        }
        CHECK(dotp == 0);
        CHECK(maxc <= BigInt(1000000));
        CHECK(maxc > 0);
    }
}

TEST_CASE("pslq agrees with the exact LLL oracle on small planted instances") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> coeff(-9, 9);
    std::uniform_int_distribution<long> numer(100000, 999999);
    long d = 35;
    mpfr_prec_t prec = prec_for_digits(d);
    for (int trial = 0; trial < 10; ++trial) {
        size_t n = 3;
        std::vector<BigRational> vals = {make_rational(numer(rng), 100000),
                                         make_rational(numer(rng), 100000)};
        long c2 = 0;
        while (c2 == 0) c2 = coeff(rng);
        long c0 = coeff(rng), c1 = coeff(rng);
        vals.push_back(-(BigRational(c0) * vals[0] + BigRational(c1) * vals[1]) / BigRational(c2));
        std::vector<Real> reals;
        for (const auto& q : vals) reals.push_back(Real::from_rational(q, prec));

        auto r = pslq(reals, d - 5, 1000000);
        REQUIRE(r.status == RelationResult::Status::found);
        auto lll = oracles::lll_relation(reals, d - 5);
        REQUIRE(lll.size() == n);
        BigRational dot_lll(0), dot_pslq(0);
        for (size_t i = 0; i < n; ++i) {
            dot_lll += BigRational(lll[i]) * vals[i];
            dot_pslq += BigRational(r.coefficients[i]) * vals[i];
        }
        CHECK(dot_pslq == 0);
        CHECK(dot_lll == 0);  // both routes land on genuine relations
    }
}

TEST_CASE("none-up-to-bound carries an exhaustion certificate") {
    long d = 45;
    mpfr_prec_t prec = prec_for_digits(d);
    // pi, e-like irrationals: no small relation exists
    Real a = Real::pi(prec);
    Real b = exp(Real::from_long(1, prec));
    auto r = pslq({a, b}, d - 5, 1000);
    CHECK(r.status == RelationResult::Status::none_up_to_bound);
    CHECK(r.norm_bound > 1000);
    CHECK(r.height_bound == 1000);
    CHECK(r.digits_used == d - 5);
}

TEST_CASE("solve_coeffs reproduces the printed sin4nx rows exactly") {
    auto row1 = solve_coeffs(CoeffFamily::sin4nx, 1, 30);
    REQUIRE(row1.certified);
    CHECK(row1.coeffs == std::vector<BigRational>{BigRational(-7)});

    auto row2 = solve_coeffs(CoeffFamily::sin4nx, 2, 30);
    REQUIRE(row2.certified);
    CHECK(row2.coeffs == std::vector<BigRational>{make_rational(-14, 3), BigRational(124)});

    auto row3 = solve_coeffs(CoeffFamily::sin4nx, 3, 30);
    REQUIRE(row3.certified);
    CHECK(row3.coeffs == std::vector<BigRational>{make_rational(-161, 45),
                                                  make_rational(496, 3), BigRational(-2032)});
    // round-trip invariant: residual below 10^{-2 digits + guard}
    CHECK(row3.residual.error_below_pow10(2 * 30 - 12));
}

TEST_CASE("cos4n2x row 1 is an exact rational multiple of beta(2)/pi") {
    auto row = solve_coeffs(CoeffFamily::cos4n2x, 1, 30);
    REQUIRE(row.certified);
    CHECK(row.coeffs == std::vector<BigRational>{BigRational(-2)});
}

TEST_CASE("Prop 4.1: inverting the recovered F3 table gives eqs 1.2/1.3 exactly") {
    auto table = solve_coeff_table(CoeffFamily::sin4nx, 3, 30);
    RationalMatrix m(3, 3);
    for (size_t p = 0; p < 3; ++p) {
        REQUIRE(table.rows[p].certified);
        for (size_t q = 0; q <= p; ++q) m.at(p, q) = table.rows[p].coeffs[q];
    }
    auto row2 = triangular_invert(m, 2);
    CHECK(row2[0] == make_rational(-1, 186));
    CHECK(row2[1] == make_rational(1, 124));
    auto row3 = triangular_invert(m, 3);
    CHECK(row3[0] == make_rational(-17, 91440));
    CHECK(row3[1] == make_rational(1, 1524));
    CHECK(row3[2] == make_rational(-1, 2032));
}

TEST_CASE("poly_family matches the printed polynomials for small n") {
    auto lam1 = poly_family(PolyFamily::lambda, 1, 30);
    CHECK(lam1 == RationalPolynomial({make_rational(1, 7)}));
    auto lam3 = poly_family(PolyFamily::lambda, 3, 30);
    CHECK(lam3 == RationalPolynomial({make_rational(17, 5715), BigRational(0),
                                      make_rational(-4, 381), BigRational(0),
                                      make_rational(1, 127)}));
    auto xi1 = poly_family(PolyFamily::xi, 1, 30);
    CHECK(xi1 == RationalPolynomial({make_rational(1, 4)}));
    auto xi3 = poly_family(PolyFamily::xi, 3, 30);
    CHECK(xi3 == RationalPolynomial({make_rational(61, 7680), BigRational(0),
                                     make_rational(-3, 128), BigRational(0),
                                     make_rational(1, 64)}));
}

TEST_CASE("poly_family round trip: integrating the F15 kernel recovers the ratio") {
    for (long n = 1; n <= 3; ++n) {
        auto lam = poly_family(PolyFamily::lambda, n, 25);
        auto spec = KernelSpec::make(KernelFamily::F15, {0}, lam);
        Real got = integrate(spec, 25).value;
        CHECK(agree_to_digits(got, zeta_ratio(static_cast<unsigned>(n), 30), 22));

        auto xi = poly_family(PolyFamily::xi, n, 25);
        auto spec2 = KernelSpec::make(KernelFamily::F15, {1}, xi);
        Real got2 = integrate(spec2, 25).value;
        CHECK(agree_to_digits(got2, beta_ratio(static_cast<unsigned>(n), 30), 22));
    }
}

TEST_CASE("fourier partial sums approach pi/4 with shrinking deltas") {
    long d = 20;
    Real quarter_pi = mul_2si(Real::pi(prec_for_digits(d)), -2);
    Real prev_abs(prec_for_digits(d));
    bool have_prev = false;
    CHECK(fourier_partial_sum(0, d).is_exact());
    for (long K = 1; K <= 6; ++K) {
        Real s = fourier_partial_sum(K, d);
        Real delta = abs(sub(s, quarter_pi));
        if (have_prev) CHECK(mpfr_cmp(delta.value(), prev_abs.value()) < 0);
        prev_abs = delta;
        have_prev = true;
    }
}

TEST_CASE("kyrion residuals and prefactor signs") {
    for (long N = 1; N <= 2; ++N) {
        Real rb = verify_kyrion(false, N, 25);
        Real rz = verify_kyrion(true, N, 25);
        Real tol = Real::parse("1e-15", "", 64);
        CHECK(mpfr_cmp(rb.value(), tol.value()) < 0);
        CHECK(mpfr_cmp(rz.value(), tol.value()) < 0);
    }
    // the (-1)^N prefactor alternates: N=1 integrals are negative multiples,
    // N=2 positive, of the corresponding basis ratios
    Real i1 = integrate(KernelSpec::parse("F13:beta:1"), 20).value;
    Real i2 = integrate(KernelSpec::parse("F13:beta:2"), 20).value;
    CHECK(i1.definitely_negative());
    CHECK(i2.definitely_positive());
}
