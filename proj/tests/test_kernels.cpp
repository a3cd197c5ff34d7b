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
#include "malmsten/kernels.hpp"
#include "malmsten/residues.hpp"
#include "test_oracles.hpp"

using namespace malmsten;

namespace {

Real rational_point(long num, long den, long digits) {
    return Real::from_rational(make_rational(num, den), prec_for_digits(digits));
}

// Truncated defining series sum k^n z^k with a certified geometric tail.
Real polylog_series_oracle(unsigned n, const Real& z, long digits) {
    mpfr_prec_t prec = prec_for_digits(digits + 10);
    Real acc(prec);
    Real zpow = z;
    unsigned long k = 1;
    Real ratio_gap = sub(Real::from_long(1, prec), abs(z));
    if (!ratio_gap.definitely_positive())
        throw std::domain_error("series oracle needs |z| < 1");
    while (true) {
        Real term = mul_rational(zpow, BigRational(int_pow(BigInt(static_cast<long>(k)), n)));
        acc = add(acc, term);
        // tail <= |term| * rho / (1 - rho) with rho = |z| (1 + 1/k)^n once
        // (1+1/k)^n |z| < 1; stop when that tail clears the target
        if (k > 4 * n) {
            Real growth = pow_si(add(Real::from_long(1, prec),
                                     div(Real::from_long(1, prec),
                                         Real::from_long(static_cast<long>(k), prec))),
                                 static_cast<long>(n));
            Real rho = mul(abs(z), growth);
            Real gap = sub(Real::from_long(1, prec), rho);
            if (gap.definitely_positive()) {
                Real tail = div(mul(abs(term), rho), gap);
                Real bound(Real::kErrPrec);
                mpfr_set_ui(bound.raw_value(), 10, MPFR_RNDN);
                mpfr_pow_si(bound.raw_value(), bound.value(), -(digits + 6), MPFR_RNDD);
                if (mpfr_cmp(tail.value(), bound.value()) < 0) {
                    acc.add_error_value(tail);
                    return acc;
                }
            }
        }
        zpow = mul(zpow, z);
        ++k;
        if (k > 200000) throw std::runtime_error("series oracle did not converge");
    }
}

}  // namespace

TEST_CASE("polylog_neg closed-form points") {
    long d = 30;
    Real half = rational_point(1, 2, d);
    CHECK(agree_to_digits(polylog_neg(1, half), Real::from_long(2, prec_for_digits(d)), 28));
    CHECK(polylog_neg(1, rational_point(1, 2, d)).error_below_pow10(25));
    // Li_{-3}(-1/4) = z(1+4z+z^2)/(1-z)^4 at z = -1/4
    CHECK(polylog_neg(3, BigRational(make_rational(-1, 4))) == make_rational(-4, 625));
}

TEST_CASE("polylog_neg rational function vs defining series, both real and at ix") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> num(1, 99);
    for (unsigned n = 1; n <= 4; ++n) {
        unsigned m = 2 * n + 1;
        for (int trial = 0; trial < 20; ++trial) {
            long p = num(rng);
            Real x = rational_point(p, 100, 35);
            Real z = neg(sqr(x));
            Real rat = polylog_neg(m, z);
            Real ser = polylog_series_oracle(m, z, 32);
            CHECK(agree_to_digits(rat, ser, 30));
        }
    }
    // Im[Li_{-2n}(ix)]/x = P_{2n}(-x^2) for n <= 4 at sample points
    for (unsigned n = 1; n <= 4; ++n) {
        for (long p : {13L, 47L, 86L}) {
            mpfr_prec_t prec = prec_for_digits(35);
            Real x = rational_point(p, 100, 35);
            Complex ix{Real(prec), x};
            Complex li = polylog_neg(2 * n, ix);
            Real lhs = div(li.im, x);
            Real rhs = p_poly(2 * n, neg(sqr(x)));
            CHECK(agree_to_digits(lhs, rhs, 30));
        }
    }
}

TEST_CASE("p_poly basics and the Adamchik kernel shape") {
    long d = 30;
    mpfr_prec_t prec = prec_for_digits(d);
    CHECK(p_poly(0, BigRational(0)) == 1);
    // P_2(-x^2) = (1-6x^2+x^4)/(1+x^2)^3 at sample points
    for (long p : {7L, 31L, 64L, 93L}) {
        Real x = rational_point(p, 100, d);
        Real y = sqr(x);
        Real expect = div(add(sub(Real::from_long(1, prec), mul_long(y, 6)), sqr(y)),
                          pow_si(add(Real::from_long(1, prec), y), 3));
        CHECK(agree_to_digits(p_poly(2, neg(y)), expect, 27));
    }
    CHECK_THROWS_AS(p_poly(2, Real::from_long(1, prec)), std::domain_error);
    CHECK_THROWS_AS(polylog_neg(3, Real::from_long(1, prec)), std::domain_error);
}

TEST_CASE("Li_{-3}(-x^2)/x matches the Malmsten kernel algebraically") {
    // links F7 (n=1) to F1 (j=1) with the sign flip
    long d = 32;
    mpfr_prec_t prec = prec_for_digits(d);
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> num(1, 999);
    for (int trial = 0; trial < 20; ++trial) {
        Real x = rational_point(num(rng), 1000, d);
        Real li = div(polylog_neg(3, neg(sqr(x))), x);
        Real y = sqr(x);
        Real pol = add(sub(sqr(y), mul_long(y, 4)), Real::from_long(1, prec));
        Real expect = neg(div(mul(x, pol), pow_si(add(Real::from_long(1, prec), y), 4)));
        CHECK(agree_to_digits(li, expect, d - 4));
    }
}

TEST_CASE("eval_integrand spot values from the contract") {
    long d = 30;
    mpfr_prec_t prec = prec_for_digits(d);
    // F3 n=1 at pi/8: 1/ln(tan(pi/8))
    Real x = mul_2si(Real::pi(prec), -3);
    Real v = eval_integrand(KernelSpec::parse("F3:1"), x, d);
    Real t = div(sin(x), cos(x));
    CHECK(agree_to_digits(v, div(Real::from_long(1, prec), log(t)), d - 3));
    // F14 s=0 at 1/e: lnln(e) = 0
    Real inv_e = exp(Real::from_long(-1, prec));
    Real v2 = eval_integrand(KernelSpec::parse("F14:0"), inv_e, d);
    CHECK(v2.possibly_zero());
    // F5 m=2,k=0 at 1e-30: removable limit -> 1
    Real tiny = Real::parse("1e-30", "", prec);
    Real v3 = eval_integrand(KernelSpec::parse("F5:2:0"), tiny, d);
    CHECK(agree_to_digits(v3, Real::from_long(1, prec), 25));
}

TEST_CASE("eval_integrand rejects endpoints and out-of-range points") {
    mpfr_prec_t prec = prec_for_digits(20);
    CHECK_THROWS_AS(eval_integrand(KernelSpec::parse("F9:1"), Real(prec), 20),
                    std::domain_error);
    CHECK_THROWS_AS(eval_integrand(KernelSpec::parse("F9:1"), Real::from_long(1, prec), 20),
                    std::domain_error);
    CHECK_THROWS_AS(eval_integrand(KernelSpec::parse("F13:beta:1"), Real::from_long(1, prec), 20),
                    std::domain_error);
    CHECK_NOTHROW(eval_integrand(KernelSpec::parse("F13:beta:1"), Real::from_long(2, prec), 20));
}

TEST_CASE("declared singularities are exhaustive: probed at 10^-k offsets") {
    long d = 30;
    mpfr_prec_t prec = prec_for_digits(d + 30);
    for (const auto& spec : kernel_catalog()) {
        auto sings = spec.singularities();
        REQUIRE(sings.size() == 2);
        for (const auto& sing : sings) {
            auto counter_at = [&](int k) {
                Real eps = Real::parse("1e-" + std::to_string(k), "", prec);
                Real x(prec);
                bool upper_finite = spec.interval() == KernelInterval::zero_one ||
                                    spec.interval() == KernelInterval::zero_quarter_pi;
                if (!sing.at_upper) {
                    Real lo = spec.interval() == KernelInterval::one_inf
                                  ? Real::from_long(1, prec)
                                  : Real(prec);
                    x = add(lo, eps);
                } else if (upper_finite) {
                    Real hi = spec.interval() == KernelInterval::zero_one
                                  ? Real::from_long(1, prec)
                                  : mul_2si(Real::pi(prec), -2);
                    x = sub(hi, eps);
                } else {
                    x = div(Real::from_long(1, prec), eps);  // 10^k toward infinity
                }
                Real f = eval_integrand(spec, x, d);
                switch (sing.cls) {
                    case SingClass::log_log: {
                        // counter-transform: divide the lnln weight back out
                        Real inner = spec.interval() == KernelInterval::one_inf ? log(x)
                                                                                : neg(log(x));
                        return div(f, log(inner));
                    }
                    case SingClass::one_over_log: {
                        Real c = mul(f, log(eps));
                        if (sing.sqrt_factor) c = mul(c, sqrt(eps));
                        return c;
                    }
                    case SingClass::removable:
                    case SingClass::none:
                        return f;
                }
                return f;
            };
            // Boundedness relative to the counter's own moderate-offset size:
            // a mis-declared class would blow past this by many orders.
            Real ref = abs(counter_at(2));
            Real cap = mul_long(add(ref, Real::from_long(1, prec)), 1L << 12);
            for (int k = 5; k <= 25; k += 5) {
                Real probe = abs(counter_at(k));
                INFO(spec.id() << (sing.at_upper ? " upper" : " lower") << " k=" << k);
                CHECK(mpfr_cmp(probe.value(), cap.value()) < 0);
            }
        }
    }
}

TEST_CASE("F9/F10/F15 integrands stay positive on (0,1) for the Xi_1 shape") {
    long d = 20;
    RationalPolynomial xi1({make_rational(1, 4)});
    auto f15a = KernelSpec::make(KernelFamily::F15, {0}, xi1);
    auto f15b = KernelSpec::make(KernelFamily::F15, {1}, xi1);
    for (long p = 1; p <= 19; ++p) {
        Real x = rational_point(p, 20, d);
        CHECK(eval_integrand(KernelSpec::parse("F9:1"), x, d).definitely_positive());
        CHECK(eval_integrand(KernelSpec::parse("F10:1"), x, d).definitely_positive());
        CHECK(eval_integrand(f15a, x, d).definitely_positive());
        CHECK(eval_integrand(f15b, x, d).definitely_positive());
    }
}

TEST_CASE("kernel id round trips and validation") {
    for (const auto& spec : kernel_catalog()) {
        if (spec.family == KernelFamily::F15) continue;
        KernelSpec back = KernelSpec::parse(spec.id());
        CHECK(back.id() == spec.id());
        CHECK(back.family == spec.family);
        CHECK(back.params == spec.params);
    }
    CHECK(KernelSpec::parse("F13:beta:1").params == std::vector<long>{0, 1});
    CHECK_THROWS_AS(KernelSpec::parse("F5:2:1"), std::invalid_argument);  // 2k+1 < m fails
    CHECK_THROWS_AS(KernelSpec::parse("F6:3:0"), std::invalid_argument);
    CHECK_THROWS_AS(KernelSpec::parse("F1:9"), std::invalid_argument);
    CHECK_THROWS_AS(KernelSpec::parse("bogus"), std::invalid_argument);
    CHECK_THROWS_AS(KernelSpec::parse("F15:0"), std::invalid_argument);
}

TEST_CASE("residues match the contour-quadrature oracle to 25 digits") {
    for (unsigned n = 1; n <= 5; ++n)
        for (unsigned k = 0; k <= 2; ++k)
            for (long l = 0; l <= 1; ++l) {
                PiLaurent exact = residue_at_pole(n, k, l);
                Complex num = oracles::pi_laurent_eval(exact, 40);
                Complex ctr = oracles::contour_residue(n, k, l, 640, 40);
                CHECK(agree_to_digits(num.re, ctr.re, 25));
                CHECK(agree_to_digits(num.im, ctr.im, 25));
            }
}
