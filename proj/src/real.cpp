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

#include "malmsten/real.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <stdexcept>

namespace malmsten {

namespace {

constexpr mpfr_prec_t kErr = Real::kErrPrec;

// RAII scratch for error-side bounds; all bound arithmetic rounds up.
class Bound {
public:
    Bound() { mpfr_init2(t_, kErr); mpfr_set_zero(t_, 1); }
    explicit Bound(mpfr_srcptr x) {
        mpfr_init2(t_, kErr);
        mpfr_abs(t_, x, MPFR_RNDU);
    }
    Bound(const Bound&) = delete;
    Bound& operator=(const Bound&) = delete;
    ~Bound() { mpfr_clear(t_); }
    mpfr_ptr get() { return t_; }
    operator mpfr_ptr() { return t_; }          // NOLINT(google-explicit-constructor)
    operator mpfr_srcptr() const { return t_; }  // NOLINT(google-explicit-constructor)

private:
    mpfr_t t_;
};

// One rounding step of the last value operation: a full ulp of v, which over-
// covers the true half-ulp bound of round-to-nearest.
void add_ulp(mpfr_ptr err, mpfr_srcptr v) {
    if (!mpfr_regular_p(v)) return;
    Bound u;
    mpfr_set_ui_2exp(u, 1, mpfr_get_exp(v) - mpfr_get_prec(v), MPFR_RNDU);
    mpfr_add(err, err, u, MPFR_RNDU);
}

void err_add(mpfr_ptr e, mpfr_srcptr a) { mpfr_add(e, e, a, MPFR_RNDU); }

// |v| rounded toward zero: a valid starting point for lower bounds.
void abs_lower(mpfr_ptr out, mpfr_srcptr v) { mpfr_abs(out, v, MPFR_RNDZ); }

void err_add_product(mpfr_ptr e, mpfr_srcptr factor_abs, mpfr_srcptr err) {
    if (mpfr_zero_p(err)) return;
    Bound p;
    mpfr_mul(p, factor_abs, err, MPFR_RNDU);
    mpfr_add(e, e, p, MPFR_RNDU);
}

void check_finite(mpfr_srcptr v, const char* where) {
    if (mpfr_nan_p(v) || mpfr_inf_p(v))
        throw std::domain_error(std::string(where) + ": non-finite result");
}

}  // namespace

Real::Real(mpfr_prec_t prec) {
    mpfr_init2(v_, std::max<mpfr_prec_t>(prec, MPFR_PREC_MIN));
    mpfr_init2(e_, kErr);
    mpfr_set_zero(v_, 1);
    mpfr_set_zero(e_, 1);
}

Real::Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_init2(e_, kErr);
    mpfr_set(v_, o.v_, MPFR_RNDN);
    mpfr_set(e_, o.e_, MPFR_RNDU);
}

Real::Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_init2(e_, kErr);
    mpfr_swap(v_, o.v_);
    mpfr_swap(e_, o.e_);
}

Real& Real::operator=(const Real& o) {
    if (this != &o) {
        mpfr_set_prec(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
        mpfr_set(e_, o.e_, MPFR_RNDU);
    }
    return *this;
}

Real& Real::operator=(Real&& o) noexcept {
    if (this != &o) {
        mpfr_swap(v_, o.v_);
        mpfr_swap(e_, o.e_);
    }
    return *this;
}

Real::~Real() {
    mpfr_clear(v_);
    mpfr_clear(e_);
}

void Real::bump_error_ulp() { add_ulp(e_, v_); }

void Real::add_error(const Real& extra) { err_add(e_, extra.e_); }

void Real::add_error_value(const Real& bound) {
    Bound b(bound.v_);
    err_add(e_, b);
    err_add(e_, bound.e_);
}

void Real::add_error_2exp(long e2) {
    Bound u;
    mpfr_set_ui_2exp(u, 1, e2, MPFR_RNDU);
    err_add(e_, u);
}

void Real::add_error_pow10(long e10) {
    Bound u;
    mpfr_set_ui(u, 10, MPFR_RNDU);
    mpfr_pow_si(u, u, e10, MPFR_RNDU);
    err_add(e_, u);
}

void Real::clear_error() { mpfr_set_zero(e_, 1); }

Real Real::from_long(long v, mpfr_prec_t prec) {
    Real r(prec);
    if (mpfr_set_si(r.v_, v, MPFR_RNDN) != 0) r.bump_error_ulp();
    return r;
}

Real Real::from_rational(const BigRational& q, mpfr_prec_t prec) {
    Real r(prec);
    int inexact = mpfr_set_q(r.v_, q.get_mpq_t(), MPFR_RNDN);
    if (inexact != 0) r.bump_error_ulp();
    return r;
}

Real Real::pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    r.bump_error_ulp();
    return r;
}

Real Real::euler_gamma(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_euler(r.v_, MPFR_RNDN);
    r.bump_error_ulp();
    return r;
}

Real Real::ln2(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_log2(r.v_, MPFR_RNDN);
    r.bump_error_ulp();
    return r;
}

Real Real::catalan(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_catalan(r.v_, MPFR_RNDN);
    r.bump_error_ulp();
    return r;
}

Real Real::parse(const std::string& value, const std::string& error_bound, mpfr_prec_t prec) {
    Real r(prec);
    if (mpfr_set_str(r.v_, value.c_str(), 10, MPFR_RNDN) != 0)
        throw std::invalid_argument("Real::parse: bad value '" + value + "'");
    r.bump_error_ulp();
    if (!error_bound.empty()) {
        Bound e;
        if (mpfr_set_str(e, error_bound.c_str(), 10, MPFR_RNDU) != 0)
            throw std::invalid_argument("Real::parse: bad error '" + error_bound + "'");
        err_add(r.e_, e);
    } else {
        r.clear_error();
    }
    return r;
}

std::string Real::to_decimal(size_t significant_digits) const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.*Re", static_cast<int>(significant_digits) - 1, v_) < 0)
        throw std::runtime_error("Real::to_decimal: formatting failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

std::string Real::error_to_decimal() const {
    char* s = nullptr;
    if (mpfr_asprintf(&s, "%.6Re", e_) < 0)
        throw std::runtime_error("Real::error_to_decimal: formatting failed");
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

bool Real::error_below_pow10(long digits) const {
    Bound t;
    mpfr_set_ui(t, 10, MPFR_RNDD);
    mpfr_pow_si(t, t, -digits, MPFR_RNDD);
    return mpfr_cmp(e_, t) < 0;
}

long Real::certified_decimal_digits() const {
    if (mpfr_zero_p(e_)) return 1000000000L;
    if (!error_below_pow10(0)) return -1;
    long lo = 0, hi = 1;
    while (error_below_pow10(hi)) {
        lo = hi;
        hi *= 2;
        if (hi > (1L << 40)) return lo;
    }
    while (lo + 1 < hi) {
        long m = lo + (hi - lo) / 2;
        (error_below_pow10(m) ? lo : hi) = m;
    }
    return lo;
}

bool Real::possibly_zero() const {
    Bound a(v_);
    return mpfr_cmp(a, e_) <= 0;
}

bool Real::definitely_positive() const {
    return mpfr_sgn(v_) > 0 && !possibly_zero();
}

bool Real::definitely_negative() const {
    return mpfr_sgn(v_) < 0 && !possibly_zero();
}

mpfr_prec_t prec_for_digits(long digits) {
    // ten guard digits plus headroom for long summations
    double bits = (static_cast<double>(digits) + 10.0) * 3.3219280948873626;
    return static_cast<mpfr_prec_t>(bits) + 32;
}

namespace {

mpfr_prec_t join_prec(const Real& a, const Real& b) {
    return std::max(a.precision(), b.precision());
}

}  // namespace

Real add(const Real& a, const Real& b) {
    Real r(join_prec(a, b));
    mpfr_add(r.raw_value(), a.value(), b.value(), MPFR_RNDN);
    mpfr_add(r.raw_error(), a.error(), b.error(), MPFR_RNDU);
    r.bump_error_ulp();
    return r;
}

Real sub(const Real& a, const Real& b) {
    Real r(join_prec(a, b));
    mpfr_sub(r.raw_value(), a.value(), b.value(), MPFR_RNDN);
    mpfr_add(r.raw_error(), a.error(), b.error(), MPFR_RNDU);
    r.bump_error_ulp();
    return r;
}

Real mul(const Real& a, const Real& b) {
    Real r(join_prec(a, b));
    mpfr_mul(r.raw_value(), a.value(), b.value(), MPFR_RNDN);
    check_finite(r.value(), "mul");
    Bound av(a.value()), bv(b.value()), ee;
    err_add_product(r.raw_error(), av, b.error());
    err_add_product(r.raw_error(), bv, a.error());
    mpfr_mul(ee, a.error(), b.error(), MPFR_RNDU);
    err_add(r.raw_error(), ee);
    r.bump_error_ulp();
    return r;
}

Real div(const Real& a, const Real& b) {
    Bound bl;
    abs_lower(bl, b.value());
    mpfr_sub(bl, bl, b.error(), MPFR_RNDD);  // lower bound on |b|
    if (mpfr_sgn(bl.get()) <= 0)
        throw std::domain_error("div: denominator not bounded away from zero");
    Real r(join_prec(a, b));
    mpfr_div(r.raw_value(), a.value(), b.value(), MPFR_RNDN);
    check_finite(r.value(), "div");
    // |a/b - ahat/bhat| <= (err_a + |q| err_b) / (|bhat| - err_b)
    Bound q(r.value()), num;
    mpfr_mul(num, q, b.error(), MPFR_RNDU);
    mpfr_add(num, num, a.error(), MPFR_RNDU);
    mpfr_div(num, num, bl, MPFR_RNDU);
    err_add(r.raw_error(), num);
    r.bump_error_ulp();
    return r;
}

Real neg(const Real& a) {
    Real r = a;
    mpfr_neg(r.raw_value(), r.value(), MPFR_RNDN);
    return r;
}

Real abs(const Real& a) {
    Real r = a;
    mpfr_abs(r.raw_value(), r.value(), MPFR_RNDN);
    return r;
}

Real sqr(const Real& a) { return mul(a, a); }

Real sqrt(const Real& a) {
    Bound lo;
    mpfr_sub(lo, a.value(), a.error(), MPFR_RNDD);  // signed lower bound
    if (mpfr_sgn(a.value()) < 0 && !a.possibly_zero())
        throw std::domain_error("sqrt: negative argument");
    Real r(a.precision());
    if (mpfr_sgn(a.value()) >= 0)
        mpfr_sqrt(r.raw_value(), a.value(), MPFR_RNDN);
    // r stays 0 for a midpoint below 0 within the error ball
    if (mpfr_sgn(lo.get()) > 0) {
        // |f'| <= 1/(2 sqrt(lo))
        Bound d;
        mpfr_sqrt(d, lo, MPFR_RNDD);
        mpfr_mul_2si(d, d, 1, MPFR_RNDD);
        Bound prop;
        mpfr_div(prop, a.error(), d, MPFR_RNDU);
        err_add(r.raw_error(), prop);
    } else {
        // ball touches zero: bound by sqrt of the upper end
        Bound hi(a.value());
        mpfr_add(hi, hi, a.error(), MPFR_RNDU);
        mpfr_sqrt(hi, hi, MPFR_RNDU);
        err_add(r.raw_error(), hi);
    }
    r.bump_error_ulp();
    return r;
}

Real pow_si(const Real& a, long n) {
    if (n == 0) return Real::from_long(1, a.precision());
    bool invert = n < 0;
    unsigned long e = invert ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    Real base = a;
    Real acc = Real::from_long(1, a.precision());
    bool first = true;
    while (e > 0) {
        if (e & 1ul) {
            acc = first ? base : mul(acc, base);
            first = false;
        }
        e >>= 1ul;
        if (e > 0) base = mul(base, base);
    }
    if (invert) return div(Real::from_long(1, a.precision()), acc);
    return acc;
}

Real mul_2si(const Real& a, long k) {
    Real r = a;
    mpfr_mul_2si(r.raw_value(), r.value(), k, MPFR_RNDN);
    mpfr_mul_2si(r.raw_error(), r.error(), k, MPFR_RNDU);
    return r;
}

Real mul_long(const Real& a, long k) {
    Real r(a.precision());
    mpfr_mul_si(r.raw_value(), a.value(), k, MPFR_RNDN);
    Bound ka;
    mpfr_set_si(ka, k, MPFR_RNDU);
    mpfr_abs(ka, ka, MPFR_RNDU);
    err_add_product(r.raw_error(), ka, a.error());
    r.bump_error_ulp();
    return r;
}

Real div_long(const Real& a, long k) {
    if (k == 0) throw std::domain_error("div_long: zero divisor");
    Real r(a.precision());
    mpfr_div_si(r.raw_value(), a.value(), k, MPFR_RNDN);
    Bound ka, prop;
    mpfr_set_si(ka, k, MPFR_RNDD);
    mpfr_abs(ka, ka, MPFR_RNDD);
    mpfr_div(prop, a.error(), ka, MPFR_RNDU);
    err_add(r.raw_error(), prop);
    r.bump_error_ulp();
    return r;
}

Real mul_rational(const Real& a, const BigRational& q) {
    return mul(a, Real::from_rational(q, a.precision()));
}

namespace {

// Shared shape for monotone-derivative propagation: err_out = D * err_in + ulp
// where D is an upper bound of |f'| over the input ball.
Real unary_op(const Real& a, int (*f)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t),
              void (*deriv_bound)(mpfr_ptr, const Real&), const char* name) {
    Real r(a.precision());
    f(r.raw_value(), a.value(), MPFR_RNDN);
    check_finite(r.value(), name);
    if (!mpfr_zero_p(a.error())) {
        Bound d;
        deriv_bound(d, a);
        err_add_product(r.raw_error(), d, a.error());
    }
    r.bump_error_ulp();
    return r;
}

void abs_hi(mpfr_ptr out, const Real& a) {  // |a| + err, rounded up
    mpfr_abs(out, a.value(), MPFR_RNDU);
    mpfr_add(out, out, a.error(), MPFR_RNDU);
}

}  // namespace

Real exp(const Real& a) {
    Real r(a.precision());
    mpfr_exp(r.raw_value(), a.value(), MPFR_RNDN);
    check_finite(r.value(), "exp");
    if (mpfr_zero_p(r.value())) {
        // Argument below the representable range. |true| <= exp(a + err),
        // which RNDU keeps nonzero even when it underflows at kErr bits.
        Bound d;
        mpfr_add(d, a.value(), a.error(), MPFR_RNDU);
        mpfr_exp(d, d, MPFR_RNDU);
        err_add(r.raw_error(), d);
        return r;
    }
    if (!mpfr_zero_p(a.error())) {
        Bound d;
        mpfr_add(d, a.value(), a.error(), MPFR_RNDU);
        mpfr_exp(d, d, MPFR_RNDU);  // |f'| <= exp(a + err)
        err_add_product(r.raw_error(), d, a.error());
    }
    r.bump_error_ulp();
    return r;
}

Real expm1(const Real& a) {
    Real r(a.precision());
    mpfr_expm1(r.raw_value(), a.value(), MPFR_RNDN);
    check_finite(r.value(), "expm1");
    if (!mpfr_zero_p(a.error())) {
        Bound d;
        mpfr_add(d, a.value(), a.error(), MPFR_RNDU);
        mpfr_exp(d, d, MPFR_RNDU);  // |f'| = exp(x)
        err_add_product(r.raw_error(), d, a.error());
    }
    r.bump_error_ulp();
    return r;
}

Real log(const Real& a) {
    Bound lo;
    mpfr_sub(lo, a.value(), a.error(), MPFR_RNDD);  // signed lower bound
    if (mpfr_sgn(lo.get()) <= 0) throw std::domain_error("log: argument may reach zero");
    Real r(a.precision());
    mpfr_log(r.raw_value(), a.value(), MPFR_RNDN);
    if (!mpfr_zero_p(a.error())) {
        Bound prop;
        mpfr_div(prop, a.error(), lo, MPFR_RNDU);
        err_add(r.raw_error(), prop);
    }
    r.bump_error_ulp();
    return r;
}

Real log1p(const Real& a) {
    Bound lo;
    mpfr_sub(lo, a.value(), a.error(), MPFR_RNDD);  // signed lower bound
    mpfr_add_ui(lo, lo, 1, MPFR_RNDD);
    if (mpfr_sgn(lo.get()) <= 0) throw std::domain_error("log1p: argument may reach -1");
    Real r(a.precision());
    mpfr_log1p(r.raw_value(), a.value(), MPFR_RNDN);
    if (!mpfr_zero_p(a.error())) {
        Bound prop;
        mpfr_div(prop, a.error(), lo, MPFR_RNDU);
        err_add(r.raw_error(), prop);
    }
    r.bump_error_ulp();
    return r;
}

namespace {

Real clamp_error(Real r, unsigned long range_diameter) {
    Bound cap;
    mpfr_set_ui(cap, range_diameter, MPFR_RNDN);
    if (mpfr_cmp(r.error(), cap.get()) > 0) mpfr_set(r.raw_error(), cap.get(), MPFR_RNDU);
    return r;
}

}  // namespace

Real sin(const Real& a) {
    return clamp_error(
        unary_op(a, mpfr_sin,
                 [](mpfr_ptr d, const Real&) { mpfr_set_ui(d, 1, MPFR_RNDU); }, "sin"),
        2);
}

Real cos(const Real& a) {
    return clamp_error(
        unary_op(a, mpfr_cos,
                 [](mpfr_ptr d, const Real&) { mpfr_set_ui(d, 1, MPFR_RNDU); }, "cos"),
        2);
}

Real atan(const Real& a) {
    return unary_op(a, mpfr_atan, [](mpfr_ptr d, const Real&) { mpfr_set_ui(d, 1, MPFR_RNDU); },
                    "atan");
}

Real tanh(const Real& a) {
    Real r = unary_op(
        a, mpfr_tanh,
        [](mpfr_ptr d, const Real& x) {
            // |f'| = sech^2 over the ball: evaluated at the modulus lower
            // end, where it is largest; saturates to ~0 for huge arguments
            Bound lo;
            mpfr_abs(lo, x.value(), MPFR_RNDZ);
            mpfr_sub(lo, lo, x.error(), MPFR_RNDD);
            if (mpfr_sgn(lo.get()) <= 0) {
                mpfr_set_ui(d, 1, MPFR_RNDU);
                return;
            }
            mpfr_cosh(d, lo, MPFR_RNDD);
            mpfr_sqr(d, d, MPFR_RNDD);
            mpfr_ui_div(d, 1, d, MPFR_RNDU);
        },
        "tanh");
    return clamp_error(std::move(r), 2);  // range confined to (-1, 1)
}

Real sinh(const Real& a) {
    return unary_op(
        a, mpfr_sinh,
        [](mpfr_ptr d, const Real& x) {
            abs_hi(d, x);
            mpfr_cosh(d, d, MPFR_RNDU);
        },
        "sinh");
}

Real cosh(const Real& a) {
    return unary_op(
        a, mpfr_cosh,
        [](mpfr_ptr d, const Real& x) {
            abs_hi(d, x);
            mpfr_cosh(d, d, MPFR_RNDU);  // |sinh| <= cosh
        },
        "cosh");
}

Real atanh(const Real& a) {
    Bound hi;
    abs_hi(hi, a);
    if (mpfr_cmp_ui(hi.get(), 1) >= 0)
        throw std::domain_error("atanh: argument may reach 1 in modulus");
    Real r(a.precision());
    mpfr_atanh(r.raw_value(), a.value(), MPFR_RNDN);
    if (!mpfr_zero_p(a.error())) {
        // |f'| = 1/(1-x^2) <= 1/(1-hi^2)
        Bound d;
        mpfr_sqr(d, hi, MPFR_RNDU);
        mpfr_ui_sub(d, 1, d, MPFR_RNDD);
        Bound prop;
        mpfr_div(prop, a.error(), d, MPFR_RNDU);
        err_add(r.raw_error(), prop);
    }
    r.bump_error_ulp();
    return r;
}

Real operator+(const Real& a, const Real& b) { return add(a, b); }
Real operator-(const Real& a, const Real& b) { return sub(a, b); }
Real operator*(const Real& a, const Real& b) { return mul(a, b); }
Real operator/(const Real& a, const Real& b) { return div(a, b); }
Real operator-(const Real& a) { return neg(a); }

int cmp_mid(const Real& a, const Real& b) { return mpfr_cmp(a.value(), b.value()); }
bool mid_less(const Real& a, const Real& b) { return cmp_mid(a, b) < 0; }

bool agree_to_digits(const Real& a, const Real& b, long digits) {
    // |mid(a) - mid(b)| - (err_a + err_b) <= 10^{-digits}
    Real d = sub(a, b);
    Bound gap(d.value());
    mpfr_sub(gap, gap, d.error(), MPFR_RNDD);
    Bound tol;
    mpfr_set_ui(tol, 10, MPFR_RNDD);
    mpfr_pow_si(tol, tol, -digits, MPFR_RNDD);
    return mpfr_cmp(gap.get(), tol.get()) <= 0;
}

}  // namespace malmsten
