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

// Acceptance suite: ten end-to-end criteria, one PASS/FAIL line each.
// All comparisons are exact; exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <string>
#include <vector>

#include "bdrop/bijection.hpp"
#include "bdrop/enumerate.hpp"
#include "bdrop/typea.hpp"
#include "bdrop/typeb.hpp"

using bdrop::CoeffArray;
using bdrop::Int;
using bdrop::IntLaurentPoly;
using bdrop::Permutation;

namespace {

bool grid_equals(const CoeffArray& a, const std::vector<std::vector<int>>& expected) {
    if (a.rows != static_cast<int>(expected.size())) return false;
    for (int i = 0; i < a.rows; ++i) {
        if (a.cols != static_cast<int>(expected[static_cast<std::size_t>(i)].size()))
            return false;
        for (int j = 0; j < a.cols; ++j)
            if (a.at(i, j) != expected[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
                return false;
    }
    return true;
}

bool criterion_1() {
    return bdrop::typeb::t_tilde_poly(0) == IntLaurentPoly::constant(1) &&
           bdrop::typeb::t_tilde_poly(1) == IntLaurentPoly(1, {1, 2, 1}) &&
           bdrop::typeb::t_tilde_poly(2) == IntLaurentPoly(2, {1, 4, 6, 6, 4, 2, 1}) &&
           bdrop::typeb::t_tilde_poly(3) ==
               IntLaurentPoly(3, {1, 8, 12, 18, 23, 32, 32, 28, 23, 8, 4, 2, 1});
}

bool criterion_2() {
    return grid_equals(bdrop::typeb::array_t(2),
                       {{0, 0, 1}, {4, 6, 6}, {4, 2, 1}, {0, 0, 0}}) &&
           grid_equals(bdrop::typeb::array_h(2), {{0, 0, 0, 0, 0, 1},
                                                  {1, 2, 4, 4, 6, 6},
                                                  {6, 6, 4, 4, 2, 1},
                                                  {1, 0, 0, 0, 0, 0}}) &&
           grid_equals(bdrop::typeb::array_h_prime(2), {{0, 0, 0, 0, 0, 1},
                                                        {0, 0, 0, 4, 6, 6},
                                                        {0, 0, 0, 4, 2, 1},
                                                        {0, 0, 0, 0, 0, 0}}) &&
           grid_equals(bdrop::typeb::array_h_dprime(2), {{0, 0, 0, 0, 0, 0},
                                                         {1, 2, 4, 0, 0, 0},
                                                         {6, 6, 4, 0, 0, 0},
                                                         {1, 0, 0, 0, 0, 0}}) &&
           grid_equals(bdrop::typeb::array_g(2), {{0, 0, 0, 0, 0, 0, 1, 0},
                                                  {1, 2, 4, 0, 4, 6, 6, 0},
                                                  {6, 6, 4, 0, 4, 2, 1, 0},
                                                  {1, 0, 0, 0, 0, 0, 0, 0}});
}

bool criterion_3() {
    const Permutation pi = Permutation::parse("1 2 3 5 4");
    if (bdrop::bijection::phi(pi, 2) != Permutation::parse("3 2 1 4 5")) return false;
    const std::vector<bdrop::bijection::PhiStep> trace = bdrop::bijection::phi_trace(pi, 2);
    const std::vector<std::string> images = {"1", "2 1", "3 2 1", "3 2 1 4", "3 2 1 4 5"};
    if (trace.size() != images.size()) return false;
    for (std::size_t m = 0; m < trace.size(); ++m)
        if (trace[m].image.str() != images[m]) return false;
    return Permutation::parse("3 4 2 1").insert_end(3) == Permutation::parse("4 5 2 1 3");
}

bool criterion_4() {
    for (int n = 1; n <= 9; ++n)
        for (int k = 0; k < n; ++k) {
            const bdrop::DescentTable oracle = bdrop::descent_table_a(n, k);
            const bdrop::DescentTable rec = bdrop::typea::descent_counts_from_poly(
                bdrop::typea::restricted_descent_poly(n, k), 1);
            const bdrop::DescentTable closed = bdrop::typea::ek_counts_via_pk(n, k);
            if (rec != oracle || closed != oracle) return false;
        }
    return true;
}

bool criterion_5() {
    for (int n = 0; n <= 7; ++n)
        if (!bdrop::typea::check_q_identity(n)) return false;
    for (int n = 0; n <= 7; ++n)
        for (int k = 0; k <= n; ++k)
            if (!bdrop::typea::check_r_identity(n, k) ||
                !bdrop::typea::check_r_symmetry(n, k))
                return false;
    return true;
}

bool criterion_6() {
    for (int n = 1; n <= 8; ++n)
        for (int k = 0; k < n; ++k)
            if (!bdrop::bijection::verify_involution(n, k) ||
                !bdrop::bijection::verify_gamma_mapping(n, k))
                return false;
    return true;
}

bool criterion_7() {
    for (int n = 0; n <= 7; ++n)
        for (int k = 0; k <= n; ++k) {
            const bdrop::DescentTable oracle = bdrop::descent_table_b(n, k);
            const bdrop::DescentTable rec = bdrop::typea::descent_counts_from_poly(
                bdrop::typeb::restricted_descent_poly(n, k), 1);
            const bdrop::DescentTable closed = bdrop::typeb::ekb_counts_via_tk(n, k);
            if (rec != oracle || closed != oracle) return false;
        }
    return true;
}

bool criterion_8() {
    // bounded check: the unimodality theorems are verified for k <= 10 only
    for (int k = 0; k <= 10; ++k) {
        const std::int64_t kk = k;
        if (!bdrop::is_unimodal(bdrop::typea::q_poly(k), {0, kk * (kk + 2)})) return false;
        if (!bdrop::is_unimodal(bdrop::typeb::t_tilde_poly(k),
                                {kk, (kk + 1) * (kk + 1) - 1}))
            return false;
        if (!bdrop::is_unimodal(bdrop::typeb::h_poly(k), {0, 2 * kk * kk + 6 * kk + 3}))
            return false;
    }
    return true;
}

bool criterion_9() {
    for (int k = 0; k <= 10; ++k)
        if (!bdrop::typeb::check_construction_lemma(k) ||
            !bdrop::typeb::check_insert_lemma(k) ||
            !bdrop::typeb::check_g_construction(k) ||
            !bdrop::typeb::check_h_symmetry(k) || !bdrop::typeb::check_h_recurrence(k) ||
            !bdrop::typeb::check_entry_recurrences(k))
            return false;
    return true;
}

bool criterion_10() {
    for (int n = 0; n <= 10; ++n)
        if (!bdrop::typeb::check_b_symmetry(n) || !bdrop::typeb::check_bsum_identity(n) ||
            !bdrop::typeb::check_egf_identity(n))
            return false;
    IntLaurentPoly from_enum;
    for (int n = 0; n <= 7; ++n) {
        from_enum = IntLaurentPoly();
        for (const auto& [d, c] : bdrop::descent_table_b_full(n).counts)
            from_enum = from_enum + IntLaurentPoly::monomial(c, d);
        if (bdrop::typeb::eulerian_poly(n) != from_enum) return false;
    }
    return true;
}

struct Criterion {
    const char* label;
    std::function<bool()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"table-1 fixtures (x^k T_k, k = 0..3)", criterion_1},
        {"array fixtures (t/h/h'/h''/g at k = 2)", criterion_2},
        {"worked bijection example and trace", criterion_3},
        {"type A triple agreement, 0 <= k < n <= 9", criterion_4},
        {"refined Q/R identities and symmetry, n <= 7", criterion_5},
        {"involution and class mapping, n <= 8", criterion_6},
        {"type B triple agreement, 0 <= k <= n <= 7", criterion_7},
        {"unimodality of Q_k, x^k T_k, H_k for k <= 10", criterion_8},
        {"structural array lemmas, k <= 10", criterion_9},
        {"type B polynomial identities, n <= 10", criterion_10},
    };

    int failures = 0;
    for (std::size_t idx = 0; idx < criteria.size(); ++idx) {
        const auto start = std::chrono::steady_clock::now();
        bool ok = false;
        std::string note;
        try {
            ok = criteria[idx].run();
        } catch (const std::exception& e) {
            note = std::string(" [exception: ") + e.what() + "]";
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %2zu: %s  (%.2fs)  %s%s\n", idx + 1, ok ? "PASS" : "FAIL",
                    secs, criteria[idx].label, note.c_str());
        if (!ok) ++failures;
    }
    if (failures > 0) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all 10 criteria passed\n");
    return 0;
}
