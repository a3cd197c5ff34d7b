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

#include "malmsten/identities.hpp"

#include "malmsten/constants.hpp"
#include "malmsten/sequences.hpp"

namespace malmsten {

namespace {

using Kind = BasisTerm::Kind;

BasisTerm zr(unsigned p, BigRational c) { return {Kind::zeta_ratio, p, std::move(c)}; }
BasisTerm br(unsigned p, BigRational c) { return {Kind::beta_ratio, p, std::move(c)}; }
BasisTerm gm(BigRational c) { return {Kind::gamma, 0, std::move(c)}; }
BasisTerm l2(BigRational c) { return {Kind::ln2, 0, std::move(c)}; }
BasisTerm lp(BigRational c) { return {Kind::lnpi, 0, std::move(c)}; }

std::pair<BigRational, KernelSpec> k1(KernelSpec spec) {
    return {BigRational(1), std::move(spec)};
}

std::vector<IdentitySpec> build_registry() {
    std::vector<IdentitySpec> reg;
    auto F = [](KernelFamily f, std::vector<long> p) { return KernelSpec::make(f, std::move(p)); };

    // sin(4nx)/ln(tan x) rows
    reg.push_back({"eq-1.1", {k1(F(KernelFamily::F3, {1}))}, {zr(1, BigRational(-7))}});
    reg.push_back({"sin8x",
                   {k1(F(KernelFamily::F3, {2}))},
                   {zr(1, make_rational(-14, 3)), zr(2, BigRational(124))}});
    reg.push_back({"sin12x",
                   {k1(F(KernelFamily::F3, {3}))},
                   {zr(1, make_rational(-161, 45)), zr(2, make_rational(496, 3)),
                    zr(3, BigRational(-2032))}});
    reg.push_back({"sin16x",
                   {k1(F(KernelFamily::F3, {4}))},
                   {zr(1, make_rational(-44, 15)), zr(2, make_rational(2728, 15)),
                    zr(3, BigRational(-4064)), zr(4, BigRational(32704))}});
    reg.push_back({"sin20x",
                   {k1(F(KernelFamily::F3, {5}))},
                   {zr(1, make_rational(-563, 225)), zr(2, make_rational(178064, 945)),
                    zr(3, make_rational(-87376, 15)), zr(4, make_rational(261632, 3)),
                    zr(5, BigRational(-524032))}});

    // inverted rows expressing zeta ratios through the sine integrals
    reg.push_back({"eq-1.2",
                   {{make_rational(-1, 186), F(KernelFamily::F3, {1})},
                    {make_rational(1, 124), F(KernelFamily::F3, {2})}},
                   {zr(2, BigRational(1))}});
    reg.push_back({"eq-1.3",
                   {{make_rational(-17, 91440), F(KernelFamily::F3, {1})},
                    {make_rational(1, 1524), F(KernelFamily::F3, {2})},
                    {make_rational(-1, 2032), F(KernelFamily::F3, {3})}},
                   {zr(3, BigRational(1))}});

    // the lnln polynomial kernels and the log-ratio chain
    reg.push_back({"malmsten-zeta3", {k1(F(KernelFamily::F1, {1}))}, {zr(1, make_rational(7, 8))}});
    reg.push_back({"chain-F2", {k1(F(KernelFamily::F2, {}))}, {zr(1, make_rational(7, 4))}});
    reg.push_back({"lnln-zeta5", {k1(F(KernelFamily::F1, {2}))}, {zr(2, make_rational(-93, 8))}});
    reg.push_back(
        {"lnln-zeta7", {k1(F(KernelFamily::F1, {3}))}, {zr(3, make_rational(5715, 16))}});

    // Blagouchine closed forms for I_n
    reg.push_back({"blagouchine-I2",
                   {k1(F(KernelFamily::F12, {2}))},
                   {l2(make_rational(-1, 2)), lp(make_rational(1, 4)), gm(make_rational(-1, 4))}});
    reg.push_back({"blagouchine-I6",
                   {k1(F(KernelFamily::F12, {6}))},
                   {l2(make_rational(-1, 60)), lp(make_rational(1, 120)),
                    gm(make_rational(-1, 120)), zr(1, make_rational(-7, 192)),
                    zr(2, make_rational(-31, 320))}});

    // Adamchik's integral, half of the F8:1 kernel
    reg.push_back(
        {"adamchik-beta2", {{make_rational(1, 2), F(KernelFamily::F8, {1})}}, {br(1, BigRational(1))}});

    // polylog kernels, closed forms for n = 1..6
    for (unsigned n = 1; n <= 6; ++n) {
        BigRational c26 = (BigRational(1) -
                           make_rational(BigInt(1), int_pow(BigInt(2), 2 * n + 1))) *
                          BigRational(factorial(2 * n)) / 2;
        if (n % 2 != 0) c26 = -c26;
        reg.push_back({"prop-2.6-n" + std::to_string(n),
                       {k1(F(KernelFamily::F7, {static_cast<long>(n)}))},
                       {zr(n, c26)}});
        BigRational c27 = BigRational(int_pow(BigInt(2), 2 * n - 1)) *
                          BigRational(factorial(2 * n - 1));
        if (n % 2 == 0) c27 = -c27;
        reg.push_back({"prop-2.7-n" + std::to_string(n),
                       {k1(F(KernelFamily::F8, {static_cast<long>(n)}))},
                       {br(n, c27)}});
    }

    // Kyrion's (1,inf) representations, N = 1..2
    for (long N = 1; N <= 2; ++N) {
        unsigned un = static_cast<unsigned>(N);
        BigRational cb = BigRational(int_pow(BigInt(2), 2 * un - 1)) *
                         BigRational(factorial(2 * un - 1));
        if (N % 2 != 0) cb = -cb;
        reg.push_back({"kyrion-beta-" + std::to_string(N),
                       {k1(F(KernelFamily::F13, {0, N}))},
                       {br(un, cb)}});
        BigRational cz = (BigRational(int_pow(BigInt(2), 2 * un + 1)) - 1) *
                         BigRational(factorial(2 * un)) / 2;
        if (N % 2 != 0) cz = -cz;
        reg.push_back({"kyrion-zeta-" + std::to_string(N),
                       {k1(F(KernelFamily::F13, {1, N}))},
                       {zr(un, cz)}});
    }

    // moment integrals of lnln(1/x)
    reg.push_back({"lnln-moment-0", {k1(F(KernelFamily::F14, {0}))}, {gm(BigRational(-1))}});
    reg.push_back({"lnln-moment-1",
                   {k1(F(KernelFamily::F14, {1}))},
                   {gm(make_rational(-1, 2)), l2(make_rational(-1, 2))}});

    return reg;
}

}  // namespace

std::string BasisTerm::basis_name() const {
    switch (kind) {
        case Kind::zeta_ratio:
            return "zeta(" + std::to_string(2 * p + 1) + ")/pi^" + std::to_string(2 * p);
        case Kind::beta_ratio:
            return "beta(" + std::to_string(2 * p) + ")/pi^" + std::to_string(2 * p - 1);
        case Kind::gamma: return "gamma";
        case Kind::ln2: return "ln2";
        case Kind::lnpi: return "lnpi";
        case Kind::pi: return "pi";
    }
    return "?";
}

const std::vector<IdentitySpec>& identity_registry() {
    static const std::vector<IdentitySpec> reg = build_registry();
    return reg;
}

const IdentitySpec* find_identity(const std::string& id) {
    for (const auto& spec : identity_registry())
        if (spec.id == id) return &spec;
    return nullptr;
}

Real basis_term_value(const BasisTerm& term, long digits) {
    mpfr_prec_t prec = prec_for_digits(digits);
    switch (term.kind) {
        case Kind::zeta_ratio: return zeta_ratio(term.p, digits);
        case Kind::beta_ratio: return beta_ratio(term.p, digits);
        case Kind::gamma: return Real::euler_gamma(prec);
        case Kind::ln2: return Real::ln2(prec);
        case Kind::lnpi: return log(Real::pi(prec));
        case Kind::pi: return Real::pi(prec);
    }
    throw std::logic_error("basis_term_value: unhandled kind");
}

Real identity_rhs_value(const IdentitySpec& spec, long digits) {
    Real acc(prec_for_digits(digits));
    for (const auto& term : spec.rhs)
        acc = add(acc, mul_rational(basis_term_value(term, digits), term.coeff));
    return acc;
}

}  // namespace malmsten
