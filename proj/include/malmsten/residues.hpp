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

#include "malmsten/gaussian.hpp"
#include "malmsten/series.hpp"

namespace malmsten {

// The hyperbolic kernels sinh((2k+1)z)/(z cosh^n z) have poles of order n at
// z_l = (2l+1) i pi / 2. Around such a pole, cosh^n(z_l + w) equals
// sinh^n(z_l) sinh^n(w) with sinh(z_l) = (-1)^l i, so every expansion below
// is exact over Q(i) (respectively over Q(i)[pi,1/pi] once the 1/z factor
// enters).

// Laurent series of 1/cosh^n(z_l + w) in w, carried through w^order.
// leading_order is -n and the w^{-n} coefficient has modulus 1.
TruncatedSeries<GaussRational> laurent_inverse_cosh_pow(unsigned n, long l, int order);

// Taylor series in w of sinh((2k+1)(z_l + w)) / (z_l + w), carried through
// w^order. Coefficients are Gaussian rationals graded by powers of pi coming
// from 1/z_l^{m+1}.
TruncatedSeries<PiLaurent> taylor_sinh_ratio(unsigned k, long l, int order);

// Residue of sinh((2k+1)z)/(z cosh^n z) at z_l: the w^{-1} coefficient of the
// product of the two expansions above, as an exact (coefficient, pi-power)
// combination.
PiLaurent residue_at_pole(unsigned n, unsigned k, long l);

}  // namespace malmsten
