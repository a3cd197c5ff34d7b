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
#include <vector>

#include "malmsten/complexball.hpp"
#include "malmsten/polynomial.hpp"
#include "malmsten/rational.hpp"
#include "malmsten/real.hpp"

namespace malmsten {

// Integrand families of the catalog. Parameter conventions (also the string
// ids, e.g. "F5:3:0"):
//   F1:j   j in 1..3 -- the lnln polynomial kernels x Q_j(x^2) lnln(1/x)/(1+x^2)^m
//          (j=1: Malmsten/zeta(3), j=2: zeta(5), j=3: zeta(7))
//   F2     x(x^2-1)/((1+x^2)^3 ln x) on (0,1)
//   F3:n   sin(4nx)/ln(tan x) on (0,pi/4)
//   F4:n   cos((4n-2)x)/ln(tan x) on (0,pi/4)
//   F5:m:k sinh((2k+1)x)/(x cosh^m x) on (0,inf), 2k+1 < m
//   F6:m:k sinh(2kx)/(x cosh^m x) on (0,inf), k >= 1, 2k < m
//   F7:n   Li_{-2n-1}(-x^2) lnln(1/x)/x on (0,1)
//   F8:n   Im[Li_{-2n}(ix)] lnln(1/x)/x on (0,1)
//   F9:n   x^{2n-1}/arctanh x on (0,1)
//   F10:n  x^{2n-1}/(sqrt(1-x^2) arctanh x) on (0,1)
//   F11:n:v  v=0: tanh^{2n}x/x^2 ; v=1: tanh^{n+1}x/x^{n+1} on (0,inf)
//   F12:n  x^{n-1} lnln(1/x)/(1+x^2)^n on (0,1)
//   F13:t:N  t=0: Kyrion beta(2N) integrand; t=1: Kyrion zeta(2N+1), on (1,inf)
//   F14:s  x^s lnln(1/x) on (0,1), integer s >= 0
//   F15:b  x P(x)/arctanh x (b=0) or x P(x)/(sqrt(1-x^2) arctanh x) (b=1),
//          P attached as a RationalPolynomial
enum class KernelFamily { F1, F2, F3, F4, F5, F6, F7, F8, F9, F10, F11, F12, F13, F14, F15 };

enum class KernelInterval { zero_one, zero_quarter_pi, zero_inf, one_inf };

enum class SingClass { log_log, one_over_log, removable, none };

struct Singularity {
    bool at_upper = false;
    SingClass cls = SingClass::none;
    // set when the endpoint additionally carries a 1/sqrt(dist) weight
    // (tanh-sinh absorbs it natively; the verification counter needs it)
    bool sqrt_factor = false;
};

struct KernelSpec {
    KernelFamily family = KernelFamily::F2;
    std::vector<long> params;
    RationalPolynomial poly;  // F15 only

    KernelInterval interval() const;
    std::vector<Singularity> singularities() const;
    bool has_lnln_factor() const;  // integrates via the t = -ln x (or ln x) pullback
    std::string id() const;

    static KernelSpec make(KernelFamily f, std::vector<long> params,
                           RationalPolynomial poly = {});
    static KernelSpec parse(const std::string& id);
};

// Built-in instances with small parameters, used by sweeps and smoke tests.
std::vector<KernelSpec> kernel_catalog();

// Exact rational evaluation of Li_{-n}(z) as the Eulerian rational function;
// z must stay away from 1.
Real polylog_neg(unsigned n, const Real& z);
Complex polylog_neg(unsigned n, const Complex& z);
BigRational polylog_neg(unsigned n, const BigRational& z);

// P_n(x) = sum_k (2k+1)^n x^k as the type-B Eulerian rational function.
Real p_poly(unsigned n, const Real& x);
BigRational p_poly(unsigned n, const BigRational& x);

// Point evaluation with a certified bound; x must be strictly inside the
// interval (endpoints are a domain error).
Real eval_integrand(const KernelSpec& spec, const Real& x, long digits);

// --- quadrature-facing plan -------------------------------------------------

enum class Transform { tanh_sinh, exp_sinh, log_pullback, identity };

std::string to_string(Transform t);

struct QuadPoint {
    Real x;        // point in the coordinate the plan integrates over
    Real dist_lo;  // exact distance to the lower endpoint
    Real dist_hi;  // exact distance to the upper endpoint (finite intervals)
    bool has_hi = false;
};

// A ready-to-integrate description: finite tanh-sinh target or a
// semi-infinite integrand (exp-sinh), with any log pullback already folded
// into eval (jacobian included).
struct IntegrandPlan {
    Transform transform = Transform::tanh_sinh;
    Real lower;  // finite case only
    Real upper;
    std::function<Real(const QuadPoint&)> eval;
};

IntegrandPlan plan_for(const KernelSpec& spec, mpfr_prec_t prec);

}  // namespace malmsten
