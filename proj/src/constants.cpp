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

#include "malmsten/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "malmsten/sequences.hpp"

namespace malmsten {

std::string ConstantId::name() const {
    switch (tag) {
        case Tag::pi: return "pi";
        case Tag::gamma: return "gamma";
        case Tag::ln2: return "ln2";
        case Tag::lnpi: return "lnpi";
        case Tag::zeta: return "zeta(" + std::to_string(param) + ")";
        case Tag::beta: return "beta(" + std::to_string(param) + ")";
        case Tag::zeta_prime_neg: return "zeta'(" + std::to_string(-2 * param) + ")";
        case Tag::beta_prime_neg: return "beta'(" + std::to_string(1 - 2 * param) + ")";
        case Tag::eta_prime_neg: return "eta'(" + std::to_string(-2 * param) + ")";
    }
    return "?";
}

ConstantId ConstantId::parse(const std::string& text) {
    auto arg_of = [&](size_t prefix_len) {
        if (text.back() != ')') throw std::invalid_argument("constant: bad id '" + text + "'");
        return std::stol(text.substr(prefix_len, text.size() - prefix_len - 1));
    };
    if (text == "pi") return {Tag::pi, 0};
    if (text == "gamma") return {Tag::gamma, 0};
    if (text == "ln2") return {Tag::ln2, 0};
    if (text == "lnpi") return {Tag::lnpi, 0};
    if (text == "catalan") return {Tag::beta, 2};
    if (text.rfind("zeta'(", 0) == 0 || text.rfind("zeta_prime(", 0) == 0) {
        long a = arg_of(text.find('(') + 1);
        if (a >= 0 || a % 2 != 0)
            throw std::invalid_argument("constant: zeta' supported on negative even arguments");
        return {Tag::zeta_prime_neg, -a / 2};
    }
    if (text.rfind("beta'(", 0) == 0 || text.rfind("beta_prime(", 0) == 0) {
        long a = arg_of(text.find('(') + 1);
        if (a >= 0 || (1 - a) % 2 != 0)
            throw std::invalid_argument("constant: beta' supported on negative odd arguments");
        return {Tag::beta_prime_neg, (1 - a) / 2};
    }
    if (text.rfind("eta'(", 0) == 0 || text.rfind("eta_prime(", 0) == 0) {
        long a = arg_of(text.find('(') + 1);
        if (a >= 0 || a % 2 != 0)
            throw std::invalid_argument("constant: eta' supported on negative even arguments");
        return {Tag::eta_prime_neg, -a / 2};
    }
    if (text.rfind("zeta(", 0) == 0) {
        long s = arg_of(5);
        if (s < 2) throw std::invalid_argument("constant: zeta(s) needs s >= 2");
        return {Tag::zeta, s};
    }
    if (text.rfind("beta(", 0) == 0) {
        long s = arg_of(5);
        if (s < 1) throw std::invalid_argument("constant: beta(s) needs s >= 1");
        return {Tag::beta, s};
    }
    throw std::invalid_argument("constant: unknown id '" + text + "'");
}

unsigned long alternating_terms_for_digits(long digits) {
    // d_n grows like (3+sqrt 8)^n ~ 10^{0.7655 n}
    return static_cast<unsigned long>(static_cast<double>(digits + 6) / 0.7655) + 12;
}

namespace {

Real cvz_core(const std::function<Real(unsigned long)>& term, unsigned long n,
              mpfr_prec_t prec, bool certify_tail) {
    Real three = Real::from_long(3, prec);
    Real eight = Real::from_long(8, prec);
    Real d = pow_si(add(three, sqrt(eight)), static_cast<long>(n));
    d = mul_2si(add(d, div(Real::from_long(1, prec), d)), -1);

    Real b = Real::from_long(-1, prec);
    Real c = neg(d);
    Real s(prec);
    Real a0(prec);
    for (unsigned long k = 0; k < n; ++k) {
        c = sub(b, c);
        Real ak = term(k);
        if (k == 0) a0 = ak;
        s = add(s, mul(c, ak));
        long kk = static_cast<long>(k);
        long nn = static_cast<long>(n);
        b = mul_long(b, 2 * (kk + nn) * (kk - nn));
        b = div_long(b, (2 * kk + 1) * (kk + 1));
    }
    Real r = div(s, d);
    if (certify_tail) {
        // |S - s/d| <= a(0)/d for moments of a positive measure; folded in
        // with a factor-4 cushion.
        r.add_error_value(mul_2si(div(abs(a0), d), 2));
    }
    return r;
}

}  // namespace

Real alternating_sum(const std::function<BigRational(unsigned long)>& terms,
                     unsigned long n_terms, mpfr_prec_t prec) {
    return cvz_core(
        [&](unsigned long k) { return Real::from_rational(terms(k), prec); },
        n_terms, prec, true);
}

Real alternating_sum_real(const std::function<Real(unsigned long)>& terms,
                          unsigned long n_terms, mpfr_prec_t prec) {
    return cvz_core(terms, n_terms, prec, false);
}

Real zeta_int(long s, long digits) {
    if (s < 2) throw std::domain_error("zeta_int: s >= 2 required");
    mpfr_prec_t prec = prec_for_digits(digits);
    unsigned long n = alternating_terms_for_digits(digits);
    // eta(s) = sum (-1)^k / (k+1)^s ; zeta = eta * 2^{s-1} / (2^{s-1} - 1)
    Real eta = alternating_sum(
        [&](unsigned long k) {
            return make_rational(BigInt(1), int_pow(BigInt(static_cast<long>(k) + 1),
                                                    static_cast<unsigned long>(s)));
        },
        n, prec);
    BigInt p2 = int_pow(BigInt(2), static_cast<unsigned long>(s - 1));
    return mul_rational(eta, make_rational(p2, p2 - 1));
}

Real beta_int(long s, long digits) {
    if (s < 1) throw std::domain_error("beta_int: s >= 1 required");
    mpfr_prec_t prec = prec_for_digits(digits);
    unsigned long n = alternating_terms_for_digits(digits);
    return alternating_sum(
        [&](unsigned long k) {
            return make_rational(BigInt(1), int_pow(BigInt(2 * static_cast<long>(k) + 1),
                                                    static_cast<unsigned long>(s)));
        },
        n, prec);
}

Real zeta_odd(unsigned n, long digits) {
    if (n < 1) throw std::domain_error("zeta_odd: n >= 1 required");
    return zeta_int(2 * static_cast<long>(n) + 1, digits);
}

Real beta_even(unsigned n, long digits) {
    if (n < 1) throw std::domain_error("beta_even: n >= 1 required");
    return beta_int(2 * static_cast<long>(n), digits);
}

std::pair<BigRational, int> zeta_even_exact(unsigned n) {
    if (n < 1) throw std::domain_error("zeta_even_exact: n >= 1 required");
    // zeta(2n) = (-1)^{n+1} B_{2n} (2 pi)^{2n} / (2 (2n)!)
    BigRational r = bernoulli(2 * n) * BigRational(int_pow(BigInt(2), 2 * n)) /
                    (BigRational(2) * BigRational(factorial(2 * n)));
    if (n % 2 == 0) r = -r;
    return {r, static_cast<int>(2 * n)};
}

std::pair<BigRational, int> beta_odd_exact(unsigned n) {
    // beta(2n+1) = (-1)^n E_{2n} pi^{2n+1} / (2^{2n+2} (2n)!)
    BigRational s = BigRational(euler_number(2 * n)) /
                    (BigRational(int_pow(BigInt(2), 2 * n + 2)) * BigRational(factorial(2 * n)));
    if (n % 2 != 0) s = -s;
    return {s, static_cast<int>(2 * n + 1)};
}

Real zeta_prime_neg_even(unsigned n, long digits) {
    if (n < 1) throw std::domain_error("zeta_prime_neg_even: n >= 1 required");
    long inner = digits + 8;
    mpfr_prec_t prec = prec_for_digits(inner);
    // zeta'(-2n) = (-1)^n (2n)! / (2 (2 pi)^{2n}) * zeta(2n+1)
    Real z = zeta_odd(n, inner);
    Real two_pi = mul_2si(Real::pi(prec), 1);
    Real r = div(mul_rational(z, BigRational(factorial(2 * n)) / 2), pow_si(two_pi, 2 * n));
    return (n % 2 != 0) ? neg(r) : r;
}

Real beta_prime_neg_odd(unsigned n, long digits) {
    if (n < 1) throw std::domain_error("beta_prime_neg_odd: n >= 1 required");
    long inner = digits + 8;
    mpfr_prec_t prec = prec_for_digits(inner);
    // beta'(1-2n) = (-1)^{n+1} 2^{2n-1} (2n-1)! / pi^{2n-1} * beta(2n)
    Real b = beta_even(n, inner);
    BigRational f = BigRational(int_pow(BigInt(2), 2 * n - 1)) * BigRational(factorial(2 * n - 1));
    Real r = div(mul_rational(b, f), pow_si(Real::pi(prec), 2 * static_cast<long>(n) - 1));
    return (n % 2 == 0) ? neg(r) : r;
}

Real eta_prime_neg_even(unsigned n, long digits) {
    if (n < 1) throw std::domain_error("eta_prime_neg_even: n >= 1 required");
    // eta'(s) = (1 - 2^{1-s}) zeta'(s) + 2^{1-s} ln2 zeta(s); zeta(-2n) = 0, so
    // eta'(-2n) = (1 - 2^{1+2n}) zeta'(-2n)
    BigRational f = BigRational(1) - BigRational(int_pow(BigInt(2), 1 + 2 * n));
    return mul_rational(zeta_prime_neg_even(n, digits + 2), f);
}

Real zeta_ratio(unsigned p, long digits) {
    long inner = digits + 8;
    return div(zeta_odd(p, inner), pow_si(Real::pi(prec_for_digits(inner)), 2 * static_cast<long>(p)));
}

Real beta_ratio(unsigned p, long digits) {
    long inner = digits + 8;
    return div(beta_even(p, inner),
               pow_si(Real::pi(prec_for_digits(inner)), 2 * static_cast<long>(p) - 1));
}

Real constant(const ConstantId& id, long digits) {
    if (digits < 10) throw std::domain_error("constant: digits >= 10 required");
    for (long attempt = 0, extra = 0; attempt < 4; ++attempt, extra = (extra + 8) * 2) {
        long d = digits + extra;
        mpfr_prec_t prec = prec_for_digits(d);
        Real r(prec);
        switch (id.tag) {
            case ConstantId::Tag::pi: r = Real::pi(prec); break;
            case ConstantId::Tag::gamma: r = Real::euler_gamma(prec); break;
            case ConstantId::Tag::ln2: r = Real::ln2(prec); break;
            case ConstantId::Tag::lnpi: r = log(Real::pi(prec)); break;
            case ConstantId::Tag::zeta: r = zeta_int(id.param, d); break;
            case ConstantId::Tag::beta: r = beta_int(id.param, d); break;
            case ConstantId::Tag::zeta_prime_neg:
                r = zeta_prime_neg_even(static_cast<unsigned>(id.param), d);
                break;
            case ConstantId::Tag::beta_prime_neg:
                r = beta_prime_neg_odd(static_cast<unsigned>(id.param), d);
                break;
            case ConstantId::Tag::eta_prime_neg:
                r = eta_prime_neg_even(static_cast<unsigned>(id.param), d);
                break;
        }
        if (r.error_below_pow10(digits)) return r;
    }
    throw std::runtime_error("constant: failed to certify " + id.name());
}

}  // namespace malmsten
