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

#include <optional>
#include <string>
#include <vector>

#include "malmsten/polynomial.hpp"
#include "malmsten/rational.hpp"
#include "malmsten/real.hpp"

namespace malmsten {

// The unique p/q with q <= max_denominator inside the certified window of x,
// via continued fractions; requires error_bound < 1/(2 max_denominator^2) so
// the answer is unique. Smallest denominator wins.
std::optional<BigRational> rational_reconstruct(const Real& x, const BigInt& max_denominator);

class InsufficientPrecision : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RelationResult {
    enum class Status { found, none_up_to_bound };
    Status status = Status::none_up_to_bound;
    std::vector<BigInt> coefficients;  // when found
    long height_bound = 0;             // the request this run certifies against
    long digits_used = 0;
    Real residual;           // certified |sum c_i v_i| when found
    BigRational norm_bound;  // when none: every relation has euclidean norm >= this
    long iterations = 0;
};

// Integer-relation detection (PSLQ). values must carry error bounds at or
// below 10^{-digits}. Returns a verified relation with |c_i| <= max_height,
// or a none-up-to-bound certificate. Throws InsufficientPrecision when the
// working precision cannot support the requested height.
RelationResult pslq(const std::vector<Real>& values, long digits, long max_height);

// Coefficient-table recovery for the k-indexed integral families.
enum class CoeffFamily { sin4nx, cos4n2x, arctanh, arctanh_sqrt };

struct CoeffRow {
    long n = 0;
    std::vector<BigRational> coeffs;  // C_{1,n} .. C_{n,n}
    bool certified = false;
    Real residual;  // recomputed against doubled-precision values
    long digits_used = 0;
};

struct CoeffTable {
    CoeffFamily family = CoeffFamily::sin4nx;
    bool zeta_basis = true;  // else beta basis
    std::vector<CoeffRow> rows;
};

CoeffFamily parse_coeff_family(const std::string& name);
std::string coeff_family_name(CoeffFamily f);

// Recovers row n of the family's table: integral(n) = sum_p C_{p,n} basis_p.
// The relation comes from the lattice (PSLQ) over the integral and the basis
// values; each entry is then certified by recomputing the residual at twice
// the digits. Uncertified rows are returned with certified = false.
CoeffRow solve_coeffs(CoeffFamily family, long n, long digits);

CoeffTable solve_coeff_table(CoeffFamily family, long n_max, long digits);

// Xi_n (beta basis, F10 monomials) and Lambda_n (zeta basis, F9 monomials):
// the polynomial P with integral(x P(x) / weight) = basis ratio, built by
// inverting the triangular coefficient table of the monomial family.
enum class PolyFamily { xi, lambda };

RationalPolynomial poly_family(PolyFamily family, long n, long digits);

// -2 sum_{k=0}^{K-1} (2k+1)^{-1} integral of cos((4k+2)x)/ln tan x.
Real fourier_partial_sum(long K, long digits);

// Certified residual of the Kyrion representation against beta(2N) or
// zeta(2N+1).
Real verify_kyrion(bool zeta_target, long N, long digits);

}  // namespace malmsten
