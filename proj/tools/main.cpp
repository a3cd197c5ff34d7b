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

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <thread>

#include "malmsten/constants.hpp"
#include "malmsten/identities.hpp"
#include "malmsten/io.hpp"
#include "malmsten/quadrature.hpp"
#include "malmsten/reconstruct.hpp"

namespace {

using namespace malmsten;
using malmsten::io::Json;

constexpr int kExitOk = 0;
constexpr int kExitNumeric = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    long digits = 30;
    long max_height = 1000000;
    long seed = 0;  // reserved for randomized property sweeps
    std::string format = "text";
};

long env_default_digits() {
    const char* env = std::getenv("MALMSTEN_DIGITS");
    if (env == nullptr) return 30;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    return (end != nullptr && *end == '\0' && v >= 10) ? v : 30;
}

// Threshold for a PASS at d requested digits: residual below 10^{-(d-5)}.
bool residual_passes(const Real& residual, long digits) {
    Real upper(Real::kErrPrec);
    mpfr_abs(upper.raw_value(), residual.value(), MPFR_RNDU);
    mpfr_add(upper.raw_value(), upper.value(), residual.error(), MPFR_RNDU);
    Real tol(Real::kErrPrec);
    mpfr_set_ui(tol.raw_value(), 10, MPFR_RNDN);
    mpfr_pow_si(tol.raw_value(), tol.value(), -(digits - 5), MPFR_RNDD);
    return mpfr_cmp(upper.value(), tol.value()) < 0;
}

// Translates the "zetaN-over-piM" / "betaN-over-piM" shorthand.
std::string expand_ratio_alias(const std::string& spec) {
    auto over = spec.find("-over-pi");
    if (over == std::string::npos) return spec;
    std::string head = spec.substr(0, over);
    std::string tail = spec.substr(over + 8);
    std::string fn = head.substr(0, 4);
    if ((fn != "zeta" && fn != "beta") || head.size() <= 4) return spec;
    return fn + "(" + head.substr(4) + ")/pi^" + (tail.empty() ? "1" : tail);
}

// A pslq/constants value spec: kernel id (F3:1), constant id (zeta(3)),
// or constant over a pi power (zeta(3)/pi^2, also zeta3-over-pi2).
Real value_for_spec(const std::string& raw, long digits) {
    std::string spec = expand_ratio_alias(raw);
    if (!spec.empty() && spec[0] == 'F') return integrate(KernelSpec::parse(spec), digits).value;
    auto slash = spec.find("/pi");
    if (slash != std::string::npos) {
        std::string base = spec.substr(0, slash);
        std::string powpart = spec.substr(slash + 3);
        long k = 1;
        if (!powpart.empty()) {
            if (powpart[0] != '^')
                throw std::invalid_argument("bad pi power in value spec '" + raw + "'");
            k = std::stol(powpart.substr(1));
        }
        Real num = constant(ConstantId::parse(base), digits + 4);
        return div(num, pow_si(Real::pi(prec_for_digits(digits + 4)), k));
    }
    return constant(ConstantId::parse(spec), digits);
}

void emit(const RunConfig& cfg, const Json& doc, const std::string& text,
          const std::string& csv) {
    if (cfg.format == "json")
        std::cout << doc.dump(2) << "\n";
    else if (cfg.format == "csv")
        std::cout << csv;
    else
        std::cout << text;
}

int cmd_verify(const std::vector<std::string>& raw_ids, bool list_only, const RunConfig& cfg) {
    const auto& reg = identity_registry();
    if (list_only) {
        for (const auto& spec : reg) std::cout << spec.id << "\n";
        return kExitOk;
    }
    std::vector<std::string> ids;
    if (raw_ids.empty() || (raw_ids.size() == 1 && raw_ids[0] == "all")) {
        for (const auto& spec : reg) ids.push_back(spec.id);
    } else {
        for (const auto& id : raw_ids) {
            if (find_identity(id) == nullptr) {
                std::cerr << "verify: unknown identity id '" << id << "'\n";
                return kExitUsage;
            }
            ids.push_back(id);
        }
    }

    // fan out across a small pool; results assembled in registry order
    std::vector<std::optional<Real>> residuals(ids.size());
    std::vector<std::string> failures(ids.size());
    std::atomic<size_t> cursor{0};
    size_t pool = std::max<size_t>(1, std::min<size_t>(std::thread::hardware_concurrency(),
                                                       std::min<size_t>(ids.size(), 8)));
    std::vector<std::thread> workers;
    for (size_t t = 0; t < pool; ++t) {
        workers.emplace_back([&]() {
            for (;;) {
                size_t i = cursor.fetch_add(1);
                if (i >= ids.size()) return;
                try {
                    residuals[i] = verify_identity(ids[i], cfg.digits);
                } catch (const std::exception& e) {
                    failures[i] = e.what();
                }
            }
        });
    }
    for (auto& w : workers) w.join();

    Json results = Json::array();
    std::string text;
    std::string csv = io::csv_line({"id", "status", "residual", "error_bound", "threshold"});
    bool all_pass = true;
    std::string threshold = "1e-" + std::to_string(cfg.digits - 5);
    for (size_t i = 0; i < ids.size(); ++i) {
        Json row;
        row["id"] = ids[i];
        std::string status;
        std::string resid_str = "-";
        std::string err_str = "-";
        if (!residuals[i].has_value()) {
            status = "ERROR";
            row["error"] = failures[i];
            all_pass = false;
        } else {
            const Real& r = *residuals[i];
            bool ok = residual_passes(r, cfg.digits);
            status = ok ? "PASS" : "FAIL";
            all_pass = all_pass && ok;
            resid_str = r.to_decimal(6);
            err_str = r.error_to_decimal();
            row["residual"] = io::real_to_json(r);
        }
        row["status"] = status;
        row["threshold"] = threshold;
        results.push_back(row);
        text += status + "  " + ids[i] + "  residual " + resid_str + " (+/- " + err_str +
                "), threshold " + threshold + "\n";
        csv += io::csv_line({ids[i], status, resid_str, err_str, threshold});
    }
    Json doc;
    doc["command"] = "verify";
    doc["digits"] = cfg.digits;
    doc["results"] = results;
    emit(cfg, doc, text, csv);
    return all_pass ? kExitOk : kExitNumeric;
}

int cmd_coeffs(const std::string& family, long n_max, const RunConfig& cfg) {
    Json doc;
    doc["command"] = "coeffs";
    doc["digits"] = cfg.digits;
    std::string text;
    std::string csv;
    bool all_certified = true;
    if (family == "xi" || family == "lambda") {
        PolyFamily pf = family == "xi" ? PolyFamily::xi : PolyFamily::lambda;
        Json rows = Json::array();
        csv = io::csv_line({"n", "coefficients_descending"});
        for (long n = 1; n <= n_max; ++n) {
            RationalPolynomial p = poly_family(pf, n, cfg.digits);
            Json jr = io::polynomial_to_json(p);
            jr["n"] = n;
            rows.push_back(jr);
            std::string coeffs;
            for (size_t i = p.coefficients().size(); i-- > 0;) {
                if (!coeffs.empty()) coeffs += ", ";
                coeffs += to_string(p.coefficients()[i]);
            }
            text += family + "_" + std::to_string(n) + ": " + p.to_display_string() + "\n";
            csv += io::csv_line({std::to_string(n), coeffs});
        }
        doc["family"] = family;
        doc["rows"] = rows;
    } else {
        CoeffTable table = solve_coeff_table(parse_coeff_family(family), n_max, cfg.digits);
        doc["table"] = io::coeff_table_to_json(table);
        csv = io::csv_line({"n", "certified", "coefficients"});
        for (const auto& row : table.rows) {
            all_certified = all_certified && row.certified;
            std::string coeffs;
            for (const auto& c : row.coeffs) {
                if (!coeffs.empty()) coeffs += ", ";
                coeffs += to_string(c);
            }
            text += "n=" + std::to_string(row.n) + (row.certified ? "  " : " [uncertified] ") +
                    "(" + coeffs + ")\n";
            csv += io::csv_line({std::to_string(row.n), row.certified ? "yes" : "no", coeffs});
        }
    }
    emit(cfg, doc, text, csv);
    return all_certified ? kExitOk : kExitNumeric;
}

int cmd_poly(const std::string& family, long n, const RunConfig& cfg) {
    PolyFamily pf = family == "xi" ? PolyFamily::xi : PolyFamily::lambda;
    RationalPolynomial p = poly_family(pf, n, cfg.digits);
    Json doc;
    doc["command"] = "poly";
    doc["family"] = family;
    doc["n"] = n;
    doc["polynomial"] = io::polynomial_to_json(p);
    std::string text = family + "_" + std::to_string(n) + "(x) = " + p.to_display_string() + "\n";
    std::string csv = io::csv_line({"family", "n", "display"}) +
                      io::csv_line({family, std::to_string(n), p.to_display_string()});
    emit(cfg, doc, text, csv);
    return kExitOk;
}

int cmd_pslq(const std::vector<std::string>& specs, const RunConfig& cfg) {
    std::vector<Real> values;
    for (const auto& s : specs) values.push_back(value_for_spec(s, cfg.digits + 5));
    RelationResult rel = pslq(values, cfg.digits, cfg.max_height);
    Json doc;
    doc["command"] = "pslq";
    doc["inputs"] = specs;
    doc["digits"] = cfg.digits;
    doc["result"] = io::relation_to_json(rel);
    std::string text;
    std::string csv;
    if (rel.status == RelationResult::Status::found) {
        text = "relation found:";
        std::string coeffs;
        for (size_t i = 0; i < specs.size(); ++i) {
            text += " " + rel.coefficients[i].get_str() + "*[" + specs[i] + "]";
            if (i + 1 < specs.size()) text += " +";
            if (!coeffs.empty()) coeffs += " ";
            coeffs += rel.coefficients[i].get_str();
        }
        text += " = 0\nresidual " + rel.residual.to_decimal(6) + " (+/- " +
                rel.residual.error_to_decimal() + ")\n";
        csv = io::csv_line({"status", "coefficients", "residual"}) +
              io::csv_line({"found", coeffs, rel.residual.to_decimal(6)});
    } else {
        text = "none-up-to-bound: every integer relation has euclidean norm > " +
               to_string(rel.norm_bound) + " (requested height bound " +
               std::to_string(cfg.max_height) + ", " + std::to_string(cfg.digits) +
               " digits, " + std::to_string(rel.iterations) + " iterations)\n";
        csv = io::csv_line({"status", "norm_lower_bound", "height_bound", "digits"}) +
              io::csv_line({"none-up-to-bound", to_string(rel.norm_bound),
                            std::to_string(cfg.max_height), std::to_string(cfg.digits)});
    }
    emit(cfg, doc, text, csv);
    return kExitOk;
}

int cmd_fourier(long terms, const RunConfig& cfg) {
    Json rows = Json::array();
    std::string text;
    std::string csv = io::csv_line({"k", "partial_sum", "delta", "error_bound"});
    Real target = mul_2si(Real::pi(prec_for_digits(cfg.digits + 4)), -2);
    for (long k = 1; k <= terms; ++k) {
        Real s = fourier_partial_sum(k, cfg.digits);
        Real delta = sub(s, target);
        Json row;
        row["k"] = k;
        row["partial_sum"] = io::real_to_json(s);
        row["delta"] = io::real_to_json(delta);
        row["error_bound"] = s.error_to_decimal();
        rows.push_back(row);
        text += "K=" + std::to_string(k) + "  S=" + s.to_decimal(cfg.digits > 20 ? 20 : cfg.digits) +
                "  delta=" + delta.to_decimal(6) + "\n";
        csv += io::csv_line({std::to_string(k), s.to_decimal(24), delta.to_decimal(6),
                             s.error_to_decimal()});
    }
    Json doc;
    doc["command"] = "fourier";
    doc["target"] = "pi/4";
    doc["rows"] = rows;
    emit(cfg, doc, text, csv);
    return kExitOk;
}

int cmd_constants(const std::vector<std::string>& ids, const RunConfig& cfg) {
    Json rows = Json::array();
    std::string text;
    std::string csv = io::csv_line({"id", "value", "error_bound"});
    for (const auto& id : ids) {
        Real v = value_for_spec(id, cfg.digits);
        Json row;
        row["id"] = id;
        row["value"] = io::real_to_json(v);
        rows.push_back(row);
        text += id + " = " + v.to_decimal(static_cast<size_t>(cfg.digits)) + " (+/- " +
                v.error_to_decimal() + ")\n";
        csv += io::csv_line({id, v.to_decimal(static_cast<size_t>(cfg.digits)),
                             v.error_to_decimal()});
    }
    Json doc;
    doc["command"] = "constants";
    doc["digits"] = cfg.digits;
    doc["results"] = rows;
    emit(cfg, doc, text, csv);
    return kExitOk;
}

int cmd_integrate(const std::vector<std::string>& ids, const RunConfig& cfg) {
    Json rows = Json::array();
    std::string text;
    std::string csv = io::csv_line({"kernel", "value", "error_bound", "nodes", "levels",
                                    "transform"});
    for (const auto& id : ids) {
        QuadratureResult r = integrate(KernelSpec::parse(id), cfg.digits);
        rows.push_back(io::quadrature_to_json(id, r));
        text += id + " = " + r.value.to_decimal(static_cast<size_t>(cfg.digits)) + " (+/- " +
                r.value.error_to_decimal() + ", " + std::to_string(r.nodes_used) + " nodes, " +
                to_string(r.transform) + ")\n";
        csv += io::csv_line({id, r.value.to_decimal(static_cast<size_t>(cfg.digits)),
                             r.value.error_to_decimal(), std::to_string(r.nodes_used),
                             std::to_string(r.levels), to_string(r.transform)});
    }
    Json doc;
    doc["command"] = "integrate";
    doc["digits"] = cfg.digits;
    doc["results"] = rows;
    emit(cfg, doc, text, csv);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"malmsten: high-precision verification of lnln/hyperbolic integral identities"};
    app.require_subcommand(1);

    RunConfig cfg;
    cfg.digits = env_default_digits();
    app.add_option("--digits", cfg.digits, "requested decimal digits (>= 10)")
        ->check(CLI::Range(10L, 2000L));
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--max-height", cfg.max_height, "integer-relation height bound");
    app.add_option("--seed", cfg.seed, "seed for randomized property sweeps");

    auto* verify = app.add_subcommand("verify", "check registry identities by quadrature");
    verify->fallthrough();
    std::vector<std::string> verify_ids;
    bool list_only = false;
    verify->add_option("ids", verify_ids, "identity ids, or 'all'");
    verify->add_flag("--list", list_only, "list known identity ids and exit");

    auto* coeffs = app.add_subcommand("coeffs", "recover exact coefficient tables");
    coeffs->fallthrough();
    std::string coeff_family;
    long coeff_n = 1;
    coeffs->add_option("--family", coeff_family,
                       "sin4nx | cos4n2x | arctanh | arctanh-sqrt | xi | lambda")
        ->required();
    coeffs->add_option("--n", coeff_n, "compute rows 1..n")->required()->check(CLI::Range(1L, 8L));

    auto* poly = app.add_subcommand("poly", "emit one recovered polynomial");
    poly->fallthrough();
    std::string poly_fam;
    long poly_n = 1;
    poly->add_option("--family", poly_fam, "xi | lambda")
        ->required()
        ->check(CLI::IsMember({"xi", "lambda"}));
    poly->add_option("--n", poly_n, "index n")->required()->check(CLI::Range(1L, 8L));

    auto* pslq_cmd = app.add_subcommand("pslq", "integer-relation detection over value specs");
    pslq_cmd->fallthrough();
    std::vector<std::string> pslq_specs;
    pslq_cmd->add_option("values", pslq_specs, "two or more value specs")->expected(-2);

    auto* fourier = app.add_subcommand("fourier", "partial sums of the pi/4 cosine series");
    fourier->fallthrough();
    long fourier_k = 5;
    fourier->add_option("--terms,--K", fourier_k, "number of partial sums")
        ->required()
        ->check(CLI::Range(1L, 64L));

    auto* consts = app.add_subcommand("constants", "evaluate constants to the requested digits");
    consts->fallthrough();
    std::vector<std::string> const_ids;
    consts->add_option("ids", const_ids, "constant ids")->expected(-1);

    auto* integ = app.add_subcommand("integrate", "integrate catalog kernels");
    integ->fallthrough();
    std::vector<std::string> integ_ids;
    integ->add_option("kernels", integ_ids, "kernel ids like F3:1")->expected(-1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(verify_ids, list_only, cfg);
        if (coeffs->parsed()) return cmd_coeffs(coeff_family, coeff_n, cfg);
        if (poly->parsed()) return cmd_poly(poly_fam, poly_n, cfg);
        if (pslq_cmd->parsed()) return cmd_pslq(pslq_specs, cfg);
        if (fourier->parsed()) return cmd_fourier(fourier_k, cfg);
        if (consts->parsed()) return cmd_constants(const_ids, cfg);
        if (integ->parsed()) return cmd_integrate(integ_ids, cfg);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InsufficientPrecision& e) {
        std::cerr << "precision failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const PrecisionFailure& e) {
        std::cerr << "precision failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const DivergenceError& e) {
        std::cerr << "divergent integral: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
    return kExitUsage;
}
