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

#include <functional>
#include <string>
#include <utility>

#include "malmsten/rational.hpp"
#include "malmsten/real.hpp"

namespace malmsten {

// Identifier of a supported constant. Parameter meaning by tag:
//   zeta(s): s >= 2; beta(s): s >= 1; zeta_prime_neg(n): zeta'(-2n), n >= 1;
//   beta_prime_neg(n): beta'(1-2n), n >= 1; eta_prime_neg(n): eta'(-2n).
struct ConstantId {
    enum class Tag { pi, gamma, ln2, lnpi, zeta, beta, zeta_prime_neg, beta_prime_neg, eta_prime_neg };
    Tag tag = Tag::pi;
    long param = 0;

    std::string name() const;
    static ConstantId parse(const std::string& text);  // throws std::invalid_argument
};

// Evaluates any supported constant with a certified error bound below
// 10^{-digits}. digits >= 10.
Real constant(const ConstantId& id, long digits);

// zeta(2n) = r * pi^{2n}; returns (r, 2n).
std::pair<BigRational, int> zeta_even_exact(unsigned n);

// beta(2n+1) = s * pi^{2n+1}; returns (s, 2n+1).
std::pair<BigRational, int> beta_odd_exact(unsigned n);

Real zeta_int(long s, long digits);   // s >= 2, via eta acceleration
Real beta_int(long s, long digits);   // s >= 1, direct alternating acceleration
Real zeta_odd(unsigned n, long digits) ;  // zeta(2n+1)
Real beta_even(unsigned n, long digits);  // beta(2n)

Real zeta_prime_neg_even(unsigned n, long digits);  // zeta'(-2n)
Real beta_prime_neg_odd(unsigned n, long digits);   // beta'(1-2n)
Real eta_prime_neg_even(unsigned n, long digits);   // eta'(-2n)

// Basis ratios of the identity registry.
Real zeta_ratio(unsigned p, long digits);  // zeta(2p+1)/pi^{2p}
Real beta_ratio(unsigned p, long digits);  // beta(2p)/pi^{2p-1}

// Sums sum_{k>=0} (-1)^k a(k) for totally monotone a(k) with the
// Chebyshev-polynomial acceleration; certified tail bound a(0)/d_n folded
// into the returned error. terms() must be exact rationals.
Real alternating_sum(const std::function<BigRational(unsigned long)>& terms,
                     unsigned long n_terms, mpfr_prec_t prec);

// Same acceleration with Real-valued terms and no certified tail (used for
// analytic-continuation probes in tests).
Real alternating_sum_real(const std::function<Real(unsigned long)>& terms,
                          unsigned long n_terms, mpfr_prec_t prec);

unsigned long alternating_terms_for_digits(long digits);

}  // namespace malmsten
