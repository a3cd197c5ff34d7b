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

#include "malmsten/rational.hpp"

namespace malmsten {

// Bernoulli number B_n under the B_1 = -1/2 convention, so that
// zeta(2n) = (-1)^{n+1} B_{2n} (2 pi)^{2n} / (2 (2n)!) holds verbatim.
// Computed by the Akiyama-Tanigawa scheme; the classical recurrence
// sum_k C(n+1,k) B_k = 0 serves as the independent oracle in tests.
BigRational bernoulli(unsigned n);

// Euler number E_n in the secant convention sech x = sum E_n x^n / n!.
// Odd n is rejected. Computed by exact series inversion of cosh.
BigInt euler_number(unsigned n);

// Eulerian number <n over k> of type A, the coefficient of z^{n-k} in
// Li_{-n}(z) (1-z)^{n+1}. Valid for n >= 1, 0 <= k <= n-1.
BigInt eulerian_A(unsigned n, long k);

// Type-B Eulerian number, the coefficient of x^k in P_n(x) (1-x)^{n+1}
// where P_n(x) = sum_{k>=0} (2k+1)^n x^k. Valid for 0 <= k <= n.
BigInt eulerian_B(unsigned n, long k);

}  // namespace malmsten
