/*
   Copyright 2026 The bdrop authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bdrop/bijection.hpp"
#include "bdrop/render.hpp"
#include "bdrop/typea.hpp"
#include "bdrop/typeb.hpp"
#include "bdrop/verify.hpp"

namespace {

using bdrop::CoeffArray;
using bdrop::IntLaurentPoly;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct PolyRequest {
    std::string kind;
    int n = -1;
    int k = -1;
};

IntLaurentPoly compute_poly(const PolyRequest& req) {
    const auto need_n = [&] {
        if (req.n < 0) throw CLI::ValidationError("poly", req.kind + " requires --n");
    };
    const auto need_k = [&] {
        if (req.k < 0) throw CLI::ValidationError("poly", req.kind + " requires --k");
    };
    if (req.kind == "An") { need_n(); return bdrop::typea::eulerian_poly(req.n); }
    if (req.kind == "Bn") { need_n(); return bdrop::typeb::eulerian_poly(req.n); }
    if (req.kind == "Ank") { need_n(); need_k(); return bdrop::typea::restricted_descent_poly(req.n, req.k); }
    if (req.kind == "Bnk") { need_n(); need_k(); return bdrop::typeb::restricted_descent_poly(req.n, req.k); }
    if (req.kind == "Pk") { need_k(); return bdrop::typea::p_poly(req.k); }
    if (req.kind == "Qk") { need_k(); return bdrop::typea::q_poly(req.k); }
    if (req.kind == "Rnk") { need_n(); need_k(); return bdrop::typea::r_poly(req.n, req.k); }
    if (req.kind == "Tk") { need_k(); return bdrop::typeb::t_poly(req.k); }
    if (req.kind == "Ttildek") { need_k(); return bdrop::typeb::t_tilde_poly(req.k); }
    if (req.kind == "Hk") { need_k(); return bdrop::typeb::h_poly(req.k); }
    if (req.kind == "Gk") { need_k(); return bdrop::typeb::g_poly(req.k); }
    if (req.kind == "Fk") { need_k(); return bdrop::typeb::f_poly(req.k); }
    throw CLI::ValidationError("poly", "unknown polynomial kind: " + req.kind);
}

CoeffArray compute_array(const std::string& kind, int k) {
    if (kind == "t") return bdrop::typeb::array_t(k);
    if (kind == "h") return bdrop::typeb::array_h(k);
    if (kind == "f") return bdrop::typeb::array_f(k);
    if (kind == "g") return bdrop::typeb::array_g(k);
    if (kind == "hprime") return bdrop::typeb::array_h_prime(k);
    if (kind == "hdprime") return bdrop::typeb::array_h_dprime(k);
    throw CLI::ValidationError("array", "unknown array kind: " + kind);
}

void print_poly(const IntLaurentPoly& p, const std::string& name, const std::string& format) {
    if (format == "text") {
        std::cout << bdrop::poly_to_text(p) << "\n";
    } else if (format == "csv") {
        std::cout << bdrop::poly_to_csv(p);
    } else {
        nlohmann::json doc{{"kind", "polynomial"}, {"name", name},
                           {"coefficients", bdrop::poly_to_json(p)}};
        std::cout << doc.dump() << "\n";
    }
}

int default_jobs() {
    if (const char* env = std::getenv("BDROP_JOBS")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computation and verification of descent polynomials of "
                 "permutations and signed permutations with bounded maximum drop"};
    app.require_subcommand(1);
    std::string format = "text";

    PolyRequest poly_req;
    auto* poly_cmd = app.add_subcommand("poly", "Print a polynomial");
    poly_cmd->add_option("kind", poly_req.kind,
                         "One of An, Bn, Ank, Bnk, Pk, Qk, Rnk, Tk, Ttildek, Hk, Gk, Fk")
        ->required();
    poly_cmd->add_option("--n", poly_req.n, "Size parameter n");
    poly_cmd->add_option("--k", poly_req.k, "Maximum drop bound k");
    poly_cmd->add_option("--format", format, "text | json | csv");

    std::string array_kind;
    int array_k = 0;
    auto* array_cmd = app.add_subcommand("array", "Print a coefficient array");
    array_cmd->add_option("kind", array_kind, "One of t, h, f, g, hprime, hdprime")->required();
    array_cmd->add_option("--k", array_k, "Maximum drop bound k")->required();
    array_cmd->add_option("--format", format, "text | json | csv");

    std::string phi_perm;
    int phi_k = 0;
    bool phi_show_trace = false;
    auto* phi_cmd = app.add_subcommand("phi", "Apply the drop-preserving involution");
    phi_cmd->add_option("permutation", phi_perm, "One-line notation, e.g. \"1 2 3 5 4\"")
        ->required();
    phi_cmd->add_option("--k", phi_k, "Maximum drop bound k")->required();
    phi_cmd->add_flag("--trace", phi_show_trace, "Show the recursion chain");
    phi_cmd->add_option("--format", format, "text | json");

    std::string suite = "all";
    bdrop::verify::Bounds bounds;
    int jobs = default_jobs();
    auto* verify_cmd = app.add_subcommand("verify", "Run a verification suite");
    verify_cmd->add_option("suite", suite, "typea | typeb | bijection | arrays | all");
    verify_cmd->add_option("--max-n", bounds.max_n, "Enumeration bound (default 7)");
    verify_cmd->add_option("--max-k", bounds.max_k, "Polynomial-check bound (default 10)");
    verify_cmd->add_option("--jobs", jobs, "Worker threads (default $BDROP_JOBS or 1)");
    verify_cmd->add_option("--format", format, "text | json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        if (*poly_cmd) {
            print_poly(compute_poly(poly_req), poly_req.kind, format);
            return kExitPass;
        }
        if (*array_cmd) {
            const CoeffArray a = compute_array(array_kind, array_k);
            if (format == "text")
                std::cout << bdrop::array_to_text(a);
            else if (format == "csv")
                std::cout << bdrop::array_to_csv(a);
            else
                std::cout << nlohmann::json{{"kind", "array"},
                                            {"name", array_kind},
                                            {"payload", bdrop::array_to_json(a)}}
                                 .dump()
                          << "\n";
            return kExitPass;
        }
        if (*phi_cmd) {
            const bdrop::Permutation pi = bdrop::Permutation::parse(phi_perm);
            const auto trace = bdrop::bijection::phi_trace(pi, phi_k);
            if (format == "json") {
                nlohmann::json steps = nlohmann::json::array();
                for (const auto& step : trace)
                    steps.push_back({{"prefix", step.prefix.str()},
                                     {"i", step.i},
                                     {"j", step.j},
                                     {"i_prime", step.i_prime},
                                     {"j_prime", step.j_prime},
                                     {"inserted", step.inserted},
                                     {"image", step.image.str()}});
                nlohmann::json doc{{"kind", "phi"}, {"image", trace.back().image.str()}};
                if (phi_show_trace) doc["trace"] = std::move(steps);
                std::cout << doc.dump() << "\n";
            } else {
                if (phi_show_trace)
                    for (const auto& step : trace)
                        std::cout << step.prefix.str() << "  ->  " << step.image.str() << "\n";
                else
                    std::cout << trace.back().image.str() << "\n";
            }
            return kExitPass;
        }
        if (*verify_cmd) {
            std::vector<bdrop::verify::Check> checks;
            if (suite == "typea")
                checks = bdrop::verify::typea_suite(bounds);
            else if (suite == "typeb")
                checks = bdrop::verify::typeb_suite(bounds);
            else if (suite == "bijection")
                checks = bdrop::verify::bijection_suite(bounds);
            else if (suite == "arrays")
                checks = bdrop::verify::arrays_suite(bounds);
            else if (suite == "all")
                checks = bdrop::verify::all_suites(bounds);
            else
                throw CLI::ValidationError("verify", "unknown suite: " + suite);
            const auto results = bdrop::verify::run_checks(checks, jobs);
            bool all_pass = true;
            if (format == "json") {
                nlohmann::json lines = nlohmann::json::array();
                for (const auto& r : results) {
                    all_pass = all_pass && r.pass;
                    nlohmann::json line{{"check", r.name}, {"pass", r.pass}, {"ms", r.millis}};
                    if (!r.witness.empty()) line["witness"] = r.witness;
                    lines.push_back(std::move(line));
                }
                std::cout << nlohmann::json{{"kind", "verification-report"},
                                            {"suite", suite},
                                            {"pass", all_pass},
                                            {"checks", std::move(lines)}}
                                 .dump()
                          << "\n";
            } else {
                for (const auto& r : results) {
                    all_pass = all_pass && r.pass;
                    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << r.name;
                    if (!r.witness.empty()) std::cout << "  [" << r.witness << "]";
                    std::cout << "  (" << r.millis << " ms)\n";
                }
                std::cout << (all_pass ? "all checks passed" : "FAILURES present") << "\n";
            }
            return all_pass ? kExitPass : kExitCheckFailed;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    }
    return kExitUsage;
}
