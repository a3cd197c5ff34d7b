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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "malmsten/constants.hpp"
#include "malmsten/io.hpp"
#include "malmsten/quadrature.hpp"
#include "malmsten/reconstruct.hpp"

using namespace malmsten;

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

// Runs the CLI binary named by MALMSTEN_BIN with the given arguments.
RunResult run_cli(const std::string& args) {
    const char* bin = std::getenv("MALMSTEN_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

}  // namespace

TEST_CASE("real JSON round trip is exact") {
    for (long digits : {20L, 45L}) {
        mpfr_prec_t prec = prec_for_digits(digits);
        Real x = zeta_int(3, digits);
        Real back = io::real_from_json(io::real_to_json(x));
        CHECK(mpfr_equal_p(x.value(), back.value()));
        // parsed error bound still covers the original
        CHECK(mpfr_cmp(back.error(), x.error()) >= 0);
        Real exact = Real::from_long(-7, prec);
        Real back2 = io::real_from_json(io::real_to_json(exact));
        CHECK(mpfr_equal_p(exact.value(), back2.value()));
        CHECK(back2.is_exact());
    }
}

TEST_CASE("relation and coefficient-row JSON round trips") {
    mpfr_prec_t prec = prec_for_digits(40);
    auto rel = pslq({Real::pi(prec), beta_int(1, 40)}, 35, 1000);
    io::Json j = io::relation_to_json(rel);
    RelationResult back = io::relation_from_json(j);
    CHECK(back.status == rel.status);
    CHECK(back.coefficients == rel.coefficients);
    CHECK(back.digits_used == rel.digits_used);
    CHECK(mpfr_equal_p(back.residual.value(), rel.residual.value()));

    auto none = pslq({Real::pi(prec), exp(Real::from_long(1, prec))}, 35, 100);
    RelationResult back2 = io::relation_from_json(io::relation_to_json(none));
    CHECK(back2.status == RelationResult::Status::none_up_to_bound);
    CHECK(back2.norm_bound == none.norm_bound);

    CoeffRow row = solve_coeffs(CoeffFamily::sin4nx, 2, 30);
    CoeffRow rback = io::coeff_row_from_json(io::coeff_row_to_json(row));
    CHECK(rback.coeffs == row.coeffs);
    CHECK(rback.certified == row.certified);
    CHECK(mpfr_equal_p(rback.residual.value(), row.residual.value()));

    RationalPolynomial p({make_rational(5, 96), BigRational(0), make_rational(-1, 16)});
    CHECK(io::polynomial_from_json(io::polynomial_to_json(p)) == p);
}

TEST_CASE("csv quoting follows the doubled-quote convention") {
    CHECK(io::csv_field("plain") == "plain");
    CHECK(io::csv_field("a,b") == "\"a,b\"");
    CHECK(io::csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CHECK(io::csv_line({"a", "b,c"}) == "a,\"b,c\"\n");
}

TEST_CASE("cli: verify exit codes") {
    CHECK(run_cli("verify eq-1.1 --digits 20").exit_code == 0);
    CHECK(run_cli("verify bogus-id").exit_code == 2);
    CHECK(run_cli("nonsense-subcommand").exit_code == 2);
    CHECK(run_cli("verify --list").output.find("sin20x") != std::string::npos);
}

TEST_CASE("cli: pslq over specs and usage validation") {
    auto r = run_cli("pslq pi 'beta(1)' --digits 25");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("relation found") != std::string::npos);
    CHECK(run_cli("pslq pi").exit_code == 2);            // needs two specs
    CHECK(run_cli("pslq pi 'zeta(1)'").exit_code == 2);  // invalid constant id
}

TEST_CASE("cli: json output parses and carries the documented schema") {
    auto r = run_cli("fourier --terms 2 --digits 15 --format json");
    CHECK(r.exit_code == 0);
    io::Json doc = io::Json::parse(r.output);
    CHECK(doc.at("command") == "fourier");
    REQUIRE(doc.at("rows").size() == 2);
    for (const auto& row : doc.at("rows")) {
        CHECK(row.contains("k"));
        CHECK(row.contains("partial_sum"));
        CHECK(row.contains("delta"));
        CHECK(row.contains("error_bound"));
    }
    auto r2 = run_cli("integrate F3:1 --digits 18 --format json");
    io::Json doc2 = io::Json::parse(r2.output);
    CHECK(doc2.at("results").at(0).at("transform") == "tanh-sinh");
}

TEST_CASE("cli: verify all is deterministic for fixed digits") {
    auto a = run_cli("verify all --digits 14 --seed 7");
    auto b = run_cli("verify all --digits 14 --seed 7");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.find("FAIL") == std::string::npos);
}

TEST_CASE("cli: MALMSTEN_DIGITS overrides the default precision") {
    const char* bin = std::getenv("MALMSTEN_BIN");
    REQUIRE(bin != nullptr);
    std::string cmd = std::string("MALMSTEN_DIGITS=12 ") + bin + " constants pi 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    pclose(pipe);
    CHECK(out.find("3.14159265359") != std::string::npos);  // 12 significant digits
}

TEST_CASE("cli: coeffs and poly emit the recovered tables") {
    auto r = run_cli("coeffs --family sin4nx --n 1 --digits 25");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("-7") != std::string::npos);
    auto p = run_cli("poly --family lambda --n 2 --digits 25");
    CHECK(p.exit_code == 0);
    CHECK(p.output.find("2/93") != std::string::npos);
}
