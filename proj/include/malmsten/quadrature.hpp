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

#include <stdexcept>
#include <vector>

#include "malmsten/kernels.hpp"
#include "malmsten/real.hpp"

namespace malmsten {

struct QuadratureResult {
    Real value;
    long nodes_used = 0;
    int levels = 0;
    Transform transform = Transform::tanh_sinh;
};

// Raised when level doubling exhausts the budget without certifying the
// requested digits; carries the best estimate with its honest bound.
class PrecisionFailure : public std::runtime_error {
public:
    PrecisionFailure(std::string msg, Real best)
        : std::runtime_error(std::move(msg)), best_estimate(std::move(best)) {}
    Real best_estimate;
};

// Raised when the wall-strip contribution refuses to decay level after
// level, the operational signature of a divergent integrand.
class DivergenceError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Integrates a catalog kernel over its interval to the requested digits.
// The transform is chosen from the singularity metadata: tanh-sinh on finite
// intervals, exp-sinh on (0,inf), the t = -ln x (resp. ln x) pullback for
// lnln kernels.
QuadratureResult integrate(const KernelSpec& spec, long digits);

// Core engine on an explicit plan; exposed so tests can drive custom
// integrands (polynomial exactness, divergence probes).
QuadratureResult integrate_plan(const IntegrandPlan& plan, long digits);

// Rational-weighted sum of catalog integrals with a combined bound.
Real integrate_combination(const std::vector<std::pair<BigRational, KernelSpec>>& terms,
                           long digits);

// |quadrature(lhs) - constants(rhs)| for a registry identity, with a
// certified bound. Success criterion: residual below 10^{-digits+guard}.
Real verify_identity(const std::string& id, long digits);

}  // namespace malmsten
