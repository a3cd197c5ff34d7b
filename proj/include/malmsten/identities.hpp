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

#include <string>
#include <vector>

#include "malmsten/kernels.hpp"
#include "malmsten/rational.hpp"
#include "malmsten/real.hpp"

namespace malmsten {

// One term of an identity's exact right-hand side.
struct BasisTerm {
    enum class Kind { zeta_ratio, beta_ratio, gamma, ln2, lnpi, pi };
    Kind kind = Kind::gamma;
    unsigned p = 0;  // zeta_ratio: zeta(2p+1)/pi^{2p}; beta_ratio: beta(2p)/pi^{2p-1}
    BigRational coeff;

    std::string basis_name() const;
};

// A kernel combination equated to an exact combination of basis constants.
struct IdentitySpec {
    std::string id;
    std::vector<std::pair<BigRational, KernelSpec>> lhs;
    std::vector<BasisTerm> rhs;
};

// Stable, machine-readable list of the catalog identities. Ids are part of
// the CLI surface and documented in the README.
const std::vector<IdentitySpec>& identity_registry();

const IdentitySpec* find_identity(const std::string& id);

Real basis_term_value(const BasisTerm& term, long digits);
Real identity_rhs_value(const IdentitySpec& spec, long digits);

}  // namespace malmsten
