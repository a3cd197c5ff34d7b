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

#include "malmsten/sequences.hpp"

#include <stdexcept>
#include <vector>

#include "malmsten/series.hpp"

namespace malmsten {

BigRational bernoulli(unsigned n) {
    if (n == 1) return make_rational(-1, 2);
    // Akiyama-Tanigawa: row-reduce the harmonic row; A[0] ends as B_n (with
    // the B_1 = +1/2 convention, which only differs at n = 1).
    std::vector<BigRational> a(n + 1);
    for (unsigned m = 0; m <= n; ++m) {
        a[m] = make_rational(1, static_cast<long>(m) + 1);
        for (unsigned j = m; j >= 1; --j)
            a[j - 1] = BigRational(static_cast<long>(j)) * (a[j - 1] - a[j]);
    }
    return a[0];
}

BigInt euler_number(unsigned n) {
    if (n % 2 != 0) throw std::domain_error("euler_number: odd index");
    // sech = 1 / cosh as a power series; E_n = n! * [x^n] sech x.
    auto sech = series_invert(cosh_series(1, static_cast<int>(n)));
    BigRational e = sech.coeff(static_cast<int>(n)) * BigRational(factorial(n));
    if (e.get_den() != 1) throw std::logic_error("euler_number: non-integral result");
    return e.get_num();
}

BigInt eulerian_A(unsigned n, long k) {
    if (n < 1 || k < 0 || k > static_cast<long>(n) - 1)
        throw std::domain_error("eulerian_A: k out of range");
    BigInt sum = 0;
    for (long j = 0; j <= k; ++j) {
        BigInt term = binomial(n + 1, static_cast<unsigned long>(j)) *
                      int_pow(BigInt(k + 1 - j), n);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

BigInt eulerian_B(unsigned n, long k) {
    if (k < 0 || k > static_cast<long>(n))
        throw std::domain_error("eulerian_B: k out of range");
    BigInt sum = 0;
    for (long j = 0; j <= k; ++j) {
        BigInt term = binomial(n + 1, static_cast<unsigned long>(j)) *
                      int_pow(BigInt(2 * (k - j) + 1), n);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

TruncatedSeries<BigRational> sinh_series(long a, int trunc) {
    TruncatedSeries<BigRational> s(1, std::max(1, trunc));
    BigRational num(a);
    BigInt apow = a;
    for (int o = 1; o <= s.truncation_order; o += 2) {
        s.at(o) = BigRational(apow) / BigRational(factorial(static_cast<unsigned>(o)));
        apow *= BigInt(a) * a;
    }
    return s;
}

TruncatedSeries<BigRational> cosh_series(long a, int trunc) {
    TruncatedSeries<BigRational> s(0, std::max(0, trunc));
    BigInt apow = 1;
    for (int o = 0; o <= s.truncation_order; o += 2) {
        s.at(o) = BigRational(apow) / BigRational(factorial(static_cast<unsigned>(o)));
        apow *= BigInt(a) * a;
    }
    return s;
}

BigRational parse_rational(const std::string& text) {
    auto dec = [](const std::string& s) {  // always base 10, never auto-detect
        BigInt z;
        if (mpz_set_str(z.get_mpz_t(), s.c_str(), 10) != 0)
            throw std::invalid_argument("parse_rational: bad input '" + s + "'");
        return z;
    };
    auto slash = text.find('/');
    if (slash != std::string::npos)
        return make_rational(dec(text.substr(0, slash)), dec(text.substr(slash + 1)));
    auto dot = text.find('.');
    if (dot == std::string::npos) return BigRational(dec(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    BigInt den = 1;
    for (size_t i = 0; i < frac_len; ++i) den *= 10;
    return make_rational(dec(digits), den);
}

}  // namespace malmsten
