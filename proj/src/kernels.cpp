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

#include "malmsten/kernels.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "malmsten/sequences.hpp"

namespace malmsten {

namespace {

long param_at(const KernelSpec& s, size_t i) { return s.params.at(i); }

// Horner evaluation of an integer-coefficient polynomial (index = degree).
Real poly_eval(const std::vector<BigInt>& c, const Real& y) {
    Real acc(y.precision());
    for (size_t i = c.size(); i-- > 0;) {
        acc = mul(acc, y);
        if (c[i] != 0) acc = add(acc, Real::from_rational(BigRational(c[i]), y.precision()));
    }
    return acc;
}

// The three fixed lnln polynomial kernels of the F1 family: x Q(x^2)/(1+x^2)^m.
struct F1Shape {
    std::vector<BigInt> q;
    long m;
};

const F1Shape& f1_shape(long j) {
    static const std::map<long, F1Shape> shapes = {
        {1, {{BigInt(1), BigInt(-4), BigInt(1)}, 4}},
        {2, {{BigInt(1), BigInt(-26), BigInt(66), BigInt(-26), BigInt(1)}, 6}},
        {3,
         {{BigInt(1), BigInt(-120), BigInt(1191), BigInt(-2416), BigInt(1191), BigInt(-120),
           BigInt(1)},
          8}},
    };
    return shapes.at(j);
}

// Numerator polynomial in y = x^2 of Li_{-m}(-x^2)/x up to the factor x:
// Li_{-m}(-y)/sqrt(y) = sqrt(y) * M(y) / (1+y)^{m+1}.
std::vector<BigInt> polylog_num_poly(unsigned m) {
    std::vector<BigInt> c(m);  // degrees 0..m-1
    for (long j = 0; j <= static_cast<long>(m) - 1; ++j) {
        long deg = static_cast<long>(m) - j - 1;  // y^{m-j} / y
        BigInt a = eulerian_A(m, j);
        if ((m - j) % 2 != 0) a = -a;  // (-1)^{m-j}
        c[static_cast<size_t>(deg)] = a;
    }
    return c;
}

// P_{2n}(-x^2) numerator in y = x^2: sum_k B(2n,k) (-y)^k.
std::vector<BigInt> p_poly_num_poly(unsigned two_n) {
    std::vector<BigInt> c(two_n + 1);
    for (long k = 0; k <= static_cast<long>(two_n); ++k) {
        BigInt b = eulerian_B(two_n, k);
        c[static_cast<size_t>(k)] = (k % 2 == 0) ? b : -b;
    }
    return c;
}

// Kyrion inner coefficients, exact integer sums evaluated before anything
// floating enters.
BigInt kyrion_coeff_beta(long N, long k) {
    BigInt c = 0;
    for (long j = 0; j <= k; ++j) {
        BigInt t = binomial(static_cast<unsigned long>(2 * k + 1),
                            static_cast<unsigned long>(k - j)) *
                   int_pow(BigInt(2 * j + 1), static_cast<unsigned long>(2 * N - 1));
        c += (j % 2 == 0) ? -t : t;  // (-1)^{j+1}
    }
    return c;
}

BigInt kyrion_coeff_zeta(long N, long k) {
    BigInt c = 0;
    for (long j = 1; j <= k; ++j) {
        BigInt t = binomial(static_cast<unsigned long>(2 * k),
                            static_cast<unsigned long>(k - j)) *
                   int_pow(BigInt(2 * j), static_cast<unsigned long>(2 * N));
        c += (j % 2 == 0) ? t : -t;
    }
    return c;
}

// atanh on (0,1): direct below 1/2, and as (ln(2-u) - ln u)/2 from the exact
// upper gap u = 1-x where the direct form loses the root structure.
Real atanh_on_unit(const Real& x, const Real& u) {
    if (mpfr_cmp_d(x.value(), 0.5) < 0) return atanh(x);
    Real two = Real::from_long(2, u.precision());
    return mul_2si(sub(log(sub(two, u)), log(u)), -1);
}

Real sqrt_one_minus_sq(const Real& u) {
    // sqrt(1-x^2) = sqrt(u (2-u)) for u = 1-x
    return sqrt(mul(u, sub(Real::from_long(2, u.precision()), u)));
}

Real tan_(const Real& x) { return div(sin(x), cos(x)); }

// ln(tan x) on (0, pi/4), stable against the root at pi/4: u is the exact
// distance pi/4 - x.
Real lntan(const Real& x, const Real& u) {
    if (mpfr_cmp_d(u.value(), 0.125) < 0) return mul_2si(neg(atanh(tan_(u))), 1);
    return log(tan_(x));
}

// sin(4nx) and cos((4n-2)x) rewritten around pi/4 where they vanish.
Real f3_numerator(long n, const Real& x, const Real& u) {
    if (mpfr_cmp_d(u.value(), 0.125) < 0) {
        Real s = sin(mul_long(u, 4 * n));
        return (n % 2 == 0) ? neg(s) : s;  // (-1)^{n+1} sin(4nu)
    }
    return sin(mul_long(x, 4 * n));
}

Real f4_numerator(long n, const Real& x, const Real& u) {
    if (mpfr_cmp_d(u.value(), 0.125) < 0) {
        Real s = sin(mul_long(u, 4 * n - 2));
        return (n % 2 == 0) ? neg(s) : s;  // (-1)^{n+1} sin((4n-2)u)
    }
    return cos(mul_long(x, 4 * n - 2));
}

// sinh(c x)/(x cosh^m x) through exponentials; stable for every x > 0 and
// free of cosh overflow at the deep exp-sinh nodes.
Real sinh_over_cosh(long c, long m, const Real& x) {
    mpfr_prec_t p = x.precision();
    Real em2x = exp(mul_long(x, -2));
    Real den = mul(x, pow_si(add(Real::from_long(1, p), em2x), m));
    Real num = mul(exp(mul_long(x, c - m)), neg(expm1(mul_long(x, -2 * c))));
    return mul_2si(div(num, den), static_cast<int>(m) - 1);
}

Real kyrion_sum(long t, long N, const Real& x) {
    mpfr_prec_t p = x.precision();
    Real x2 = sqr(x);
    Real x4 = sqr(x2);
    Real one = Real::from_long(1, p);
    Real acc(p);
    if (t == 0) {
        for (long k = 0; k <= N - 1; ++k) {
            Real quad = add(sub(mul_long(x4, 2 * k + 1), mul_long(x2, 2 * (2 * k + 3))),
                            Real::from_long(2 * k + 1, p));
            Real term = div(mul(quad, pow_si(x, 2 * k)), pow_si(add(x2, one), 2 * k + 3));
            acc = add(acc, mul_rational(term, BigRational(kyrion_coeff_beta(N, k))));
        }
    } else {
        for (long k = 1; k <= N; ++k) {
            Real quad = add(sub(mul_long(x4, 2 * k), mul_long(x2, 2 * (2 * k + 2))),
                            Real::from_long(2 * k, p));
            Real term = div(mul(quad, pow_si(x, 2 * k - 1)), pow_si(add(x2, one), 2 * k + 2));
            acc = add(acc, mul_rational(term, BigRational(kyrion_coeff_zeta(N, k))));
        }
    }
    return acc;
}

// Kyrion integrand times the x = e^t jacobian, written purely in decaying
// exponentials of t so deep exp-sinh nodes (t ~ 1e45) stay representable.
Real kyrion_pullback(long target, long N, const Real& t) {
    mpfr_prec_t p = t.precision();
    Real one = Real::from_long(1, p);
    Real em2t = exp(mul_long(t, -2));
    Real acc(p);
    auto exp_t = [&](long e) { return exp(mul_long(t, e)); };
    if (target == 0) {
        for (long k = 0; k <= N - 1; ++k) {
            // ((2k+1)x^4 - 2(2k+3)x^2 + (2k+1)) x^{2k+1} / (x^2+1)^{2k+3}, x = e^t
            Real num = add(sub(mul_long(exp_t(-2 * k - 1), 2 * k + 1),
                               mul_long(exp_t(-2 * k - 3), 2 * (2 * k + 3))),
                           mul_long(exp_t(-2 * k - 5), 2 * k + 1));
            Real term = div(num, pow_si(add(one, em2t), 2 * k + 3));
            acc = add(acc, mul_rational(term, BigRational(kyrion_coeff_beta(N, k))));
        }
    } else {
        for (long k = 1; k <= N; ++k) {
            Real num = add(sub(mul_long(exp_t(-2 * k), 2 * k),
                               mul_long(exp_t(-2 * k - 2), 2 * (2 * k + 2))),
                           mul_long(exp_t(-2 * k - 4), 2 * k));
            Real term = div(num, pow_si(add(one, em2t), 2 * k + 2));
            acc = add(acc, mul_rational(term, BigRational(kyrion_coeff_zeta(N, k))));
        }
    }
    return acc;
}

// Everything except the lnln weight, for the families that carry one; the
// full integrand otherwise. u_hi must be the exact distance to the upper
// endpoint when the interval is finite.
Real eval_core(const KernelSpec& spec, const Real& x, const Real& u_hi) {
    mpfr_prec_t p = x.precision();
    Real one = Real::from_long(1, p);
    switch (spec.family) {
        case KernelFamily::F1: {
            const auto& sh = f1_shape(param_at(spec, 0));
            Real y = sqr(x);
            return div(mul(x, poly_eval(sh.q, y)), pow_si(add(one, y), sh.m));
        }
        case KernelFamily::F2: {
            Real x2m1 = neg(mul(u_hi, sub(Real::from_long(2, p), u_hi)));  // x^2-1
            Real lnx = mpfr_cmp_d(x.value(), 0.5) > 0 ? log1p(neg(u_hi)) : log(x);
            return div(mul(x, x2m1), mul(pow_si(add(one, sqr(x)), 3), lnx));
        }
        case KernelFamily::F3:
            return div(f3_numerator(param_at(spec, 0), x, u_hi), lntan(x, u_hi));
        case KernelFamily::F4:
            return div(f4_numerator(param_at(spec, 0), x, u_hi), lntan(x, u_hi));
        case KernelFamily::F5:
            return sinh_over_cosh(2 * param_at(spec, 1) + 1, param_at(spec, 0), x);
        case KernelFamily::F6:
            return sinh_over_cosh(2 * param_at(spec, 1), param_at(spec, 0), x);
        case KernelFamily::F7: {
            unsigned m = 2 * static_cast<unsigned>(param_at(spec, 0)) + 1;
            Real y = sqr(x);
            return div(mul(x, poly_eval(polylog_num_poly(m), y)),
                       pow_si(add(one, y), static_cast<long>(m) + 1));
        }
        case KernelFamily::F8: {
            unsigned two_n = 2 * static_cast<unsigned>(param_at(spec, 0));
            Real y = sqr(x);
            return div(poly_eval(p_poly_num_poly(two_n), y),
                       pow_si(add(one, y), static_cast<long>(two_n) + 1));
        }
        case KernelFamily::F9:
            return div(pow_si(x, 2 * param_at(spec, 0) - 1), atanh_on_unit(x, u_hi));
        case KernelFamily::F10:
            return div(pow_si(x, 2 * param_at(spec, 0) - 1),
                       mul(sqrt_one_minus_sq(u_hi), atanh_on_unit(x, u_hi)));
        case KernelFamily::F11: {
            long n = param_at(spec, 0);
            long v = param_at(spec, 1);
            long tp = v == 0 ? 2 * n : n + 1;
            long xp = v == 0 ? 2 : n + 1;
            return div(pow_si(tanh(x), tp), pow_si(x, xp));
        }
        case KernelFamily::F12: {
            long n = param_at(spec, 0);
            return div(pow_si(x, n - 1), pow_si(add(one, sqr(x)), n));
        }
        case KernelFamily::F13:
            return kyrion_sum(param_at(spec, 0), param_at(spec, 1), x);
        case KernelFamily::F14:
            return pow_si(x, param_at(spec, 0));
        case KernelFamily::F15: {
            Real px(p);
            for (size_t i = spec.poly.coefficients().size(); i-- > 0;) {
                px = mul(px, x);
                const BigRational& c = spec.poly.coefficients()[i];
                if (c != 0) px = add(px, Real::from_rational(c, p));
            }
            Real base = div(mul(x, px), atanh_on_unit(x, u_hi));
            if (param_at(spec, 0) == 1) base = div(base, sqrt_one_minus_sq(u_hi));
            return base;
        }
    }
    throw std::logic_error("eval_core: unhandled family");
}

}  // namespace

KernelInterval KernelSpec::interval() const {
    switch (family) {
        case KernelFamily::F3:
        case KernelFamily::F4: return KernelInterval::zero_quarter_pi;
        case KernelFamily::F5:
        case KernelFamily::F6:
        case KernelFamily::F11: return KernelInterval::zero_inf;
        case KernelFamily::F13: return KernelInterval::one_inf;
        default: return KernelInterval::zero_one;
    }
}

bool KernelSpec::has_lnln_factor() const {
    switch (family) {
        case KernelFamily::F1:
        case KernelFamily::F7:
        case KernelFamily::F8:
        case KernelFamily::F12:
        case KernelFamily::F13:
        case KernelFamily::F14: return true;
        default: return false;
    }
}

std::vector<Singularity> KernelSpec::singularities() const {
    switch (family) {
        case KernelFamily::F1:
        case KernelFamily::F7:
        case KernelFamily::F8:
        case KernelFamily::F12:
        case KernelFamily::F14:
            return {{false, SingClass::log_log}, {true, SingClass::log_log}};
        case KernelFamily::F2:
            return {{false, SingClass::removable}, {true, SingClass::removable}};
        case KernelFamily::F3:
        case KernelFamily::F4:
            return {{false, SingClass::one_over_log}, {true, SingClass::removable}};
        case KernelFamily::F5:
        case KernelFamily::F6:
        case KernelFamily::F11:
            return {{false, SingClass::removable}, {true, SingClass::none}};
        case KernelFamily::F9:
            return {{false, SingClass::removable}, {true, SingClass::one_over_log}};
        case KernelFamily::F15:
            return {{false, SingClass::removable},
                    {true, SingClass::one_over_log, params.size() == 1 && params[0] == 1}};
        case KernelFamily::F10:
            return {{false, SingClass::removable}, {true, SingClass::one_over_log, true}};
        case KernelFamily::F13:
            return {{false, SingClass::log_log}, {true, SingClass::none}};
    }
    return {};
}

std::string KernelSpec::id() const {
    std::ostringstream os;
    os << "F" << static_cast<int>(family) + 1;
    if (family == KernelFamily::F13) {
        os << ":" << (params[0] == 0 ? "beta" : "zeta") << ":" << params[1];
        return os.str();
    }
    for (long p : params) os << ":" << p;
    return os.str();
}

KernelSpec KernelSpec::make(KernelFamily f, std::vector<long> params, RationalPolynomial poly) {
    KernelSpec s;
    s.family = f;
    s.params = std::move(params);
    s.poly = std::move(poly);
    auto need = [&](bool ok, const char* msg) {
        if (!ok) throw std::invalid_argument(std::string("KernelSpec ") + s.id() + ": " + msg);
    };
    auto nparams = [&](size_t n) { need(s.params.size() == n, "wrong parameter count"); };
    switch (f) {
        case KernelFamily::F1:
            nparams(1);
            need(s.params[0] >= 1 && s.params[0] <= 3, "j in 1..3");
            break;
        case KernelFamily::F2: nparams(0); break;
        case KernelFamily::F3:
        case KernelFamily::F4:
            nparams(1);
            need(s.params[0] >= 1 && s.params[0] <= 64, "n in 1..64");
            break;
        case KernelFamily::F5:
            nparams(2);
            need(s.params[0] >= 2, "m >= 2");
            need(s.params[1] >= 0 && 2 * s.params[1] + 1 < s.params[0], "2k+1 < m");
            break;
        case KernelFamily::F6:
            nparams(2);
            need(s.params[0] >= 3, "m >= 3");
            need(s.params[1] >= 1 && 2 * s.params[1] < s.params[0], "1 <= k, 2k < m");
            break;
        case KernelFamily::F7:
        case KernelFamily::F8:
            nparams(1);
            need(s.params[0] >= 1 && s.params[0] <= 16, "n in 1..16");
            break;
        case KernelFamily::F9:
        case KernelFamily::F10:
            nparams(1);
            need(s.params[0] >= 1 && s.params[0] <= 64, "n in 1..64");
            break;
        case KernelFamily::F11:
            nparams(2);
            need(s.params[0] >= 1 && s.params[0] <= 32, "n in 1..32");
            need(s.params[1] == 0 || s.params[1] == 1, "variant in {0,1}");
            break;
        case KernelFamily::F12:
            nparams(1);
            need(s.params[0] >= 1 && s.params[0] <= 32, "n in 1..32");
            break;
        case KernelFamily::F13:
            nparams(2);
            need(s.params[0] == 0 || s.params[0] == 1, "target in {beta, zeta}");
            need(s.params[1] >= 1 && s.params[1] <= 4, "N in 1..4");
            break;
        case KernelFamily::F14:
            nparams(1);
            need(s.params[0] >= 0 && s.params[0] <= 64, "s in 0..64");
            break;
        case KernelFamily::F15:
            nparams(1);
            need(s.params[0] == 0 || s.params[0] == 1, "variant in {0,1}");
            need(!s.poly.is_zero(), "nonzero polynomial required");
            break;
    }
    return s;
}

KernelSpec KernelSpec::parse(const std::string& id) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : id) {
        if (ch == ':') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    if (parts.empty() || parts[0].size() < 2 || parts[0][0] != 'F')
        throw std::invalid_argument("KernelSpec: bad id '" + id + "'");
    int fam = std::stoi(parts[0].substr(1));
    if (fam < 1 || fam > 15 || fam == 15)
        throw std::invalid_argument("KernelSpec: unknown or non-parsable family in '" + id + "'");
    std::vector<long> params;
    for (size_t i = 1; i < parts.size(); ++i) {
        if (fam == 13 && i == 1 && (parts[i] == "beta" || parts[i] == "zeta")) {
            params.push_back(parts[i] == "beta" ? 0 : 1);
            continue;
        }
        params.push_back(std::stol(parts[i]));
    }
    return make(static_cast<KernelFamily>(fam - 1), std::move(params));
}

std::vector<KernelSpec> kernel_catalog() {
    std::vector<KernelSpec> out;
    for (long j = 1; j <= 3; ++j) out.push_back(KernelSpec::make(KernelFamily::F1, {j}));
    out.push_back(KernelSpec::make(KernelFamily::F2, {}));
    for (long n = 1; n <= 6; ++n) out.push_back(KernelSpec::make(KernelFamily::F3, {n}));
    for (long n = 1; n <= 6; ++n) out.push_back(KernelSpec::make(KernelFamily::F4, {n}));
    for (long m = 2; m <= 6; ++m)
        for (long k = 0; 2 * k + 1 < m; ++k)
            out.push_back(KernelSpec::make(KernelFamily::F5, {m, k}));
    for (long m = 3; m <= 6; ++m)
        for (long k = 1; 2 * k < m; ++k)
            out.push_back(KernelSpec::make(KernelFamily::F6, {m, k}));
    for (long n = 1; n <= 6; ++n) out.push_back(KernelSpec::make(KernelFamily::F7, {n}));
    for (long n = 1; n <= 6; ++n) out.push_back(KernelSpec::make(KernelFamily::F8, {n}));
    for (long n = 1; n <= 5; ++n) out.push_back(KernelSpec::make(KernelFamily::F9, {n}));
    for (long n = 1; n <= 5; ++n) out.push_back(KernelSpec::make(KernelFamily::F10, {n}));
    for (long n = 1; n <= 3; ++n)
        for (long v = 0; v <= 1; ++v) out.push_back(KernelSpec::make(KernelFamily::F11, {n, v}));
    for (long n = 1; n <= 8; ++n) out.push_back(KernelSpec::make(KernelFamily::F12, {n}));
    for (long t = 0; t <= 1; ++t)
        for (long N = 1; N <= 2; ++N) out.push_back(KernelSpec::make(KernelFamily::F13, {t, N}));
    for (long s = 0; s <= 3; ++s) out.push_back(KernelSpec::make(KernelFamily::F14, {s}));
    RationalPolynomial quarter({make_rational(1, 4)});
    RationalPolynomial seventh({make_rational(1, 7)});
    out.push_back(KernelSpec::make(KernelFamily::F15, {0}, seventh));
    out.push_back(KernelSpec::make(KernelFamily::F15, {1}, quarter));
    return out;
}

BigRational polylog_neg(unsigned n, const BigRational& z) {
    if (z == 1) throw std::domain_error("polylog_neg: pole at z = 1");
    BigRational num(0);
    for (long j = 0; j <= static_cast<long>(n) - 1; ++j)
        num += BigRational(eulerian_A(n, j)) * rational_pow(z, static_cast<long>(n) - j);
    return num / rational_pow(BigRational(1) - z, static_cast<long>(n) + 1);
}

Real polylog_neg(unsigned n, const Real& z) {
    Real one_minus = sub(Real::from_long(1, z.precision()), z);
    if (one_minus.possibly_zero()) throw std::domain_error("polylog_neg: pole at z = 1");
    Real num(z.precision());
    for (long j = 0; j <= static_cast<long>(n) - 1; ++j) {
        Real t = mul_rational(pow_si(z, static_cast<long>(n) - j), BigRational(eulerian_A(n, j)));
        num = add(num, t);
    }
    return div(num, pow_si(one_minus, static_cast<long>(n) + 1));
}

Complex polylog_neg(unsigned n, const Complex& z) {
    mpfr_prec_t p = z.re.precision();
    Complex one{Real::from_long(1, p), Real(p)};
    Complex one_minus = one - z;
    Complex num{Real(p), Real(p)};
    for (long j = 0; j <= static_cast<long>(n) - 1; ++j) {
        Complex t = cpow_ui(z, static_cast<unsigned long>(static_cast<long>(n) - j));
        BigRational a(eulerian_A(n, j));
        num = num + Complex{mul_rational(t.re, a), mul_rational(t.im, a)};
    }
    return num / cpow_ui(one_minus, n + 1);
}

BigRational p_poly(unsigned n, const BigRational& x) {
    if (x == 1) throw std::domain_error("p_poly: pole at x = 1");
    BigRational num(0);
    for (long k = 0; k <= static_cast<long>(n); ++k)
        num += BigRational(eulerian_B(n, k)) * rational_pow(x, k);
    return num / rational_pow(BigRational(1) - x, static_cast<long>(n) + 1);
}

Real p_poly(unsigned n, const Real& x) {
    Real one_minus = sub(Real::from_long(1, x.precision()), x);
    if (one_minus.possibly_zero()) throw std::domain_error("p_poly: pole at x = 1");
    Real num(x.precision());
    for (long k = 0; k <= static_cast<long>(n); ++k)
        num = add(num, mul_rational(pow_si(x, k), BigRational(eulerian_B(n, k))));
    return div(num, pow_si(one_minus, static_cast<long>(n) + 1));
}

Real eval_integrand(const KernelSpec& spec, const Real& x, long digits) {
    mpfr_prec_t prec = std::max<mpfr_prec_t>(prec_for_digits(digits), x.precision());
    Real xw(prec);
    mpfr_set(xw.raw_value(), x.value(), MPFR_RNDN);
    xw.add_error(x);

    Real lo_gap = xw;  // distance to lower endpoint
    Real hi_gap(prec);
    bool finite_hi = true;
    switch (spec.interval()) {
        case KernelInterval::zero_one:
            hi_gap = sub(Real::from_long(1, prec), xw);
            break;
        case KernelInterval::zero_quarter_pi:
            hi_gap = sub(mul_2si(Real::pi(prec), -2), xw);
            break;
        case KernelInterval::zero_inf:
            finite_hi = false;
            break;
        case KernelInterval::one_inf:
            lo_gap = sub(xw, Real::from_long(1, prec));
            finite_hi = false;
            break;
    }
    if (!lo_gap.definitely_positive() || (finite_hi && !hi_gap.definitely_positive()))
        throw std::domain_error("eval_integrand: point not strictly inside the interval");

    Real core = eval_core(spec, xw, hi_gap);
    if (!spec.has_lnln_factor()) return core;
    // lnln weight: ln(ln(1/x)) on (0,1), ln(ln x) on (1,inf)
    Real inner = spec.interval() == KernelInterval::one_inf
                     ? log(xw)
                     : (mpfr_cmp_d(xw.value(), 0.5) > 0 ? neg(log1p(neg(hi_gap))) : neg(log(xw)));
    return mul(core, log(inner));
}

std::string to_string(Transform t) {
    switch (t) {
        case Transform::tanh_sinh: return "tanh-sinh";
        case Transform::exp_sinh: return "exp-sinh";
        case Transform::log_pullback: return "log-pullback";
        case Transform::identity: return "identity";
    }
    return "?";
}

IntegrandPlan plan_for(const KernelSpec& spec, mpfr_prec_t prec) {
    IntegrandPlan plan;
    KernelSpec s = spec;
    if (s.has_lnln_factor()) {
        plan.transform = Transform::log_pullback;
        if (s.family == KernelFamily::F13) {
            long target = s.params[0];
            long N = s.params[1];
            plan.eval = [target, N](const QuadPoint& q) {
                return mul(kyrion_pullback(target, N, q.x), log(q.x));
            };
            return plan;
        }
        plan.eval = [s](const QuadPoint& q) {
            Real x = exp(neg(q.x));
            Real u_hi = neg(expm1(neg(q.x)));  // 1 - e^{-t}, exact from t
            Real core = eval_core(s, x, u_hi);
            return mul(mul(core, log(q.x)), x);  // ln t times the jacobian
        };
        return plan;
    }
    switch (s.interval()) {
        case KernelInterval::zero_one:
        case KernelInterval::zero_quarter_pi: {
            plan.transform = Transform::tanh_sinh;
            plan.lower = Real(prec);
            plan.upper = s.interval() == KernelInterval::zero_one
                             ? Real::from_long(1, prec)
                             : mul_2si(Real::pi(prec), -2);
            plan.eval = [s](const QuadPoint& q) { return eval_core(s, q.x, q.dist_hi); };
            return plan;
        }
        case KernelInterval::zero_inf: {
            plan.transform = Transform::exp_sinh;
            plan.eval = [s](const QuadPoint& q) {
                return eval_core(s, q.x, Real(q.x.precision()));
            };
            return plan;
        }
        case KernelInterval::one_inf:
            throw std::logic_error("plan_for: (1,inf) kernels integrate via the log pullback");
    }
    throw std::logic_error("plan_for: unhandled interval");
}

}  // namespace malmsten
