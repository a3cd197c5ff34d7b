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

#include <mpfr.h>

#include <string>

#include "malmsten/rational.hpp"

namespace malmsten {

// Arbitrary-precision real with a tracked absolute error bound:
// |true value - value()| <= error(). The bound is propagated worst-case
// through every operation, so certified digits stay certified.
//
// Values are immutable once built; all operations return fresh objects and
// are safe to run concurrently.
class Real {
public:
    static constexpr mpfr_prec_t kErrPrec = 32;

    explicit Real(mpfr_prec_t prec = 64);
    Real(const Real& o);
    Real(Real&& o) noexcept;
    Real& operator=(const Real& o);
    Real& operator=(Real&& o) noexcept;
    ~Real();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    bool is_exact() const { return mpfr_zero_p(e_); }

    mpfr_srcptr value() const { return v_; }
    mpfr_srcptr error() const { return e_; }
    mpfr_ptr raw_value() { return v_; }
    mpfr_ptr raw_error() { return e_; }

    // After in-place edits through raw_value(), call this to account for one
    // rounding step.
    void bump_error_ulp();
    void add_error(const Real& extra);          // error += extra.error()
    void add_error_value(const Real& bound);    // error += |bound.value()| + bound.error()
    void add_error_2exp(long e2);               // error += 2^e2
    void add_error_pow10(long e10);             // error += 10^e10
    void clear_error();

    static Real from_long(long v, mpfr_prec_t prec);
    static Real from_rational(const BigRational& q, mpfr_prec_t prec);
    static Real pi(mpfr_prec_t prec);
    static Real euler_gamma(mpfr_prec_t prec);
    static Real ln2(mpfr_prec_t prec);
    static Real catalan(mpfr_prec_t prec);

    // Parses decimal strings as emitted by to_decimal(); the error string may
    // be empty for an exact input.
    static Real parse(const std::string& value, const std::string& error_bound,
                      mpfr_prec_t prec);

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    std::string to_decimal(size_t significant_digits) const;
    std::string error_to_decimal() const;

    // true iff error() < 10^{-digits}
    bool error_below_pow10(long digits) const;
    // smallest d with error() < 10^{-d}; -1 if error >= 1
    long certified_decimal_digits() const;

    bool possibly_zero() const;       // |value| <= error
    bool definitely_positive() const;
    bool definitely_negative() const;

private:
    mpfr_t v_;
    mpfr_t e_;
};

// Working precision for a decimal-digit request, including the module-wide
// ten guard digits plus summation headroom.
mpfr_prec_t prec_for_digits(long digits);

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);
Real operator-(const Real& a);

Real add(const Real& a, const Real& b);
Real sub(const Real& a, const Real& b);
Real mul(const Real& a, const Real& b);
Real div(const Real& a, const Real& b);
Real neg(const Real& a);
Real abs(const Real& a);
Real sqr(const Real& a);
Real sqrt(const Real& a);
Real pow_si(const Real& a, long n);
Real mul_2si(const Real& a, long k);  // exact scaling by 2^k
Real mul_long(const Real& a, long k);
Real div_long(const Real& a, long k);
Real mul_rational(const Real& a, const BigRational& q);

Real exp(const Real& a);
Real expm1(const Real& a);
Real log(const Real& a);
Real log1p(const Real& a);
Real sin(const Real& a);
Real cos(const Real& a);
Real atan(const Real& a);
Real sinh(const Real& a);
Real cosh(const Real& a);
Real tanh(const Real& a);
Real atanh(const Real& a);

// Midpoint comparisons (ignore the error bounds).
int cmp_mid(const Real& a, const Real& b);
bool mid_less(const Real& a, const Real& b);

// |a - b| <= a.error + b.error + 10^{-digits}?
bool agree_to_digits(const Real& a, const Real& b, long digits);

}  // namespace malmsten
