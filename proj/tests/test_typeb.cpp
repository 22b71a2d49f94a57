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

#include <doctest.h>

#include "bdrop/enumerate.hpp"
#include "bdrop/typea.hpp"
#include "bdrop/typeb.hpp"

using bdrop::CoeffArray;
using bdrop::Int;
using bdrop::IntLaurentPoly;
using namespace bdrop::typeb;

namespace {

IntLaurentPoly descent_poly_from_table(const bdrop::DescentTable& t) {
    IntLaurentPoly out;
    for (const auto& [d, c] : t.counts) out = out + IntLaurentPoly::monomial(c, d);
    return out;
}

std::vector<std::vector<Int>> grid(const CoeffArray& a) {
    std::vector<std::vector<Int>> g(static_cast<std::size_t>(a.rows));
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) g[static_cast<std::size_t>(i)].push_back(a.at(i, j));
    return g;
}

}  // namespace

TEST_CASE("type B eulerian_poly small cases") {
    CHECK(eulerian_poly(0) == IntLaurentPoly::constant(1));
    CHECK(eulerian_poly(1) == IntLaurentPoly(0, {1, 1}));          // 1 + t
    CHECK(eulerian_poly(2) == IntLaurentPoly(0, {1, 6, 1}));       // 1 + 6t + t^2
    CHECK(eulerian_poly(3) == IntLaurentPoly(0, {1, 23, 23, 1}));  // 1 + 23t + 23t^2 + t^3
    for (int n = 0; n <= 6; ++n)
        CHECK(eulerian_poly(n) == descent_poly_from_table(bdrop::descent_table_b_full(n)));
}

TEST_CASE("type B eulerian_poly at t=1 is 2^n n!") {
    Int expected = 1;
    for (int n = 0; n <= 12; ++n) {
        if (n > 0) expected *= 2 * n;
        CHECK(eulerian_poly(n).coeff_sum() == expected);
    }
}

TEST_CASE("type B restricted_descent_poly") {
    for (int n = 0; n <= 6; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(restricted_descent_poly(n, k) ==
                  descent_poly_from_table(bdrop::descent_table_b(n, k)));
    for (int n = 0; n <= 8; ++n)
        for (int k = n; k <= n + 2; ++k)
            CHECK(restricted_descent_poly(n, k) == eulerian_poly(n));
}

TEST_CASE("x^k T_k table") {
    CHECK(t_tilde_poly(0) == IntLaurentPoly::constant(1));
    CHECK(t_tilde_poly(1) == IntLaurentPoly(1, {1, 2, 1}));  // x + 2x^2 + x^3
    CHECK(t_tilde_poly(2) == IntLaurentPoly(2, {1, 4, 6, 6, 4, 2, 1}));
    CHECK(t_tilde_poly(3) ==
          IntLaurentPoly(3, {1, 8, 12, 18, 23, 32, 32, 28, 23, 8, 4, 2, 1}));
}

TEST_CASE("coefficient array fixtures, k = 2") {
    CHECK(grid(array_t(2)) == std::vector<std::vector<Int>>{
                                  {0, 0, 1}, {4, 6, 6}, {4, 2, 1}, {0, 0, 0}});
    CHECK(grid(array_h(2)) == std::vector<std::vector<Int>>{{0, 0, 0, 0, 0, 1},
                                                            {1, 2, 4, 4, 6, 6},
                                                            {6, 6, 4, 4, 2, 1},
                                                            {1, 0, 0, 0, 0, 0}});
    CHECK(grid(array_h_prime(2)) == std::vector<std::vector<Int>>{{0, 0, 0, 0, 0, 1},
                                                                  {0, 0, 0, 4, 6, 6},
                                                                  {0, 0, 0, 4, 2, 1},
                                                                  {0, 0, 0, 0, 0, 0}});
    CHECK(grid(array_h_dprime(2)) == std::vector<std::vector<Int>>{{0, 0, 0, 0, 0, 0},
                                                                   {1, 2, 4, 0, 0, 0},
                                                                   {6, 6, 4, 0, 0, 0},
                                                                   {1, 0, 0, 0, 0, 0}});
    CHECK(grid(array_g(2)) == std::vector<std::vector<Int>>{{0, 0, 0, 0, 0, 0, 1, 0},
                                                            {1, 2, 4, 0, 4, 6, 6, 0},
                                                            {6, 6, 4, 0, 4, 2, 1, 0},
                                                            {1, 0, 0, 0, 0, 0, 0, 0}});
}

TEST_CASE("h = h' + h'' and h'' is h' rotated") {
    for (int k = 0; k <= 6; ++k) {
        CHECK(h_poly(k) == h_prime_poly(k) + h_dprime_poly(k));
        CHECK(array_h_dprime(k) == array_h_prime(k).rotated180());
        for (int i = 0; i < array_h(k).rows; ++i)
            for (int j = 0; j < array_h(k).cols; ++j)
                CHECK(array_h(k).at(i, j) ==
                      array_h_prime(k).at(i, j) + array_h_dprime(k).at(i, j));
    }
}

TEST_CASE("ekb_counts_via_tk agrees with the oracle") {
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= n; ++k)
            CHECK(ekb_counts_via_tk(n, k) == bdrop::descent_table_b(n, k));
}

TEST_CASE("closed form / recurrence / oracle triple agreement") {
    using bdrop::typea::descent_counts_from_poly;
    for (int n = 0; n <= 5; ++n)
        for (int k = 0; k <= n; ++k) {
            const bdrop::DescentTable oracle = bdrop::descent_table_b(n, k);
            CHECK(descent_counts_from_poly(restricted_descent_poly(n, k), 1) == oracle);
            CHECK(ekb_counts_via_tk(n, k) == oracle);
        }
}

TEST_CASE("structural checks over a k range") {
    for (int k = 0; k <= 8; ++k) {
        CHECK(check_construction_lemma(k));
        CHECK(check_insert_lemma(k));
        CHECK(check_g_construction(k));
        CHECK(check_h_symmetry(k));
        CHECK(check_h_recurrence(k));
        CHECK(check_entry_recurrences(k));
    }
}

TEST_CASE("unimodality of x^k T_k and H_k") {
    for (int k = 0; k <= 8; ++k) {
        CHECK(bdrop::is_unimodal(t_tilde_poly(k),
                                 {k, static_cast<std::int64_t>(k + 1) * (k + 1) - 1}));
        CHECK(bdrop::is_unimodal(
            h_poly(k), {0, 2 * static_cast<std::int64_t>(k) * k + 6 * k + 3}));
    }
}

TEST_CASE("eulerian identities") {
    for (int n = 0; n <= 8; ++n) {
        CHECK(check_b_symmetry(n));
        CHECK(check_bsum_identity(n));
        CHECK(check_egf_identity(n));
    }
}
