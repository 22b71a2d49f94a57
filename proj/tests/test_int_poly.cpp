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

#include <random>

#include <doctest.h>

#include "bdrop/int_poly.hpp"

using bdrop::Int;
using bdrop::IntLaurentPoly;
using bdrop::Window;

namespace {

IntLaurentPoly x_to(std::int64_t e) { return IntLaurentPoly::monomial(1, e); }

IntLaurentPoly random_poly(std::mt19937& rng) {
    std::uniform_int_distribution<int> coeff(-50, 50);
    std::uniform_int_distribution<int> deg(0, 8);
    std::uniform_int_distribution<int> lo(-4, 4);
    const int terms = deg(rng) + 1;
    std::vector<Int> cs(static_cast<std::size_t>(terms));
    for (auto& c : cs) c = coeff(rng);
    return IntLaurentPoly(lo(rng), std::move(cs));
}

}  // namespace

TEST_CASE("canonical form") {
    IntLaurentPoly p(2, {0, 0, 1, 0, 2, 0});
    CHECK(p.min_degree() == 4);
    CHECK(p.max_degree() == 6);
    CHECK(p.coeffs().size() == 3);
    CHECK(IntLaurentPoly(5, {0, 0}) == IntLaurentPoly());
    CHECK(IntLaurentPoly().is_zero());
    CHECK(IntLaurentPoly().min_degree() == 0);
}

TEST_CASE("add") {
    const IntLaurentPoly x_plus_x2 = x_to(1) + x_to(2);
    CHECK(x_plus_x2 + IntLaurentPoly() == x_plus_x2);
    CHECK((x_to(2) - IntLaurentPoly::constant(1)) + (IntLaurentPoly::constant(1) - x_to(2)) ==
          IntLaurentPoly());
    // the l=0 plus l=1 terms of the k=1 kernel: (1 + x^-1) + (x - x^-1) = 1 + x
    CHECK((IntLaurentPoly::constant(1) + x_to(-1)) + (x_to(1) - x_to(-1)) ==
          IntLaurentPoly::constant(1) + x_to(1));
}

TEST_CASE("mul") {
    const IntLaurentPoly p = x_to(1) + x_to(2);
    CHECK(p * (IntLaurentPoly::constant(1) + x_to(1)) ==
          IntLaurentPoly(1, {1, 2, 1}));  // x + 2x^2 + x^3
    CHECK(p * IntLaurentPoly::constant(1) == p);
    CHECK(x_to(-1) * x_to(1) == IntLaurentPoly::constant(1));
}

TEST_CASE("pow") {
    CHECK(bdrop::pow(IntLaurentPoly::constant(1) + x_to(1), 2) == IntLaurentPoly(0, {1, 2, 1}));
    CHECK(bdrop::pow(x_to(1) - IntLaurentPoly::constant(1), 0) == IntLaurentPoly::constant(1));
    CHECK(bdrop::pow(bdrop::geometric_sum(2), 2) == IntLaurentPoly(0, {1, 2, 3, 2, 1}));
    CHECK_THROWS(bdrop::pow(x_to(1), -1));
}

TEST_CASE("substitute_power") {
    const IntLaurentPoly one_plus_y = IntLaurentPoly::constant(1) + x_to(1);
    CHECK(bdrop::substitute_power(one_plus_y, 3) == IntLaurentPoly::constant(1) + x_to(3));
    CHECK(bdrop::substitute_power(one_plus_y, -2) == IntLaurentPoly::constant(1) + x_to(-2));
    CHECK(bdrop::substitute_power(IntLaurentPoly(0, {1, 4, 1}), 4) ==
          IntLaurentPoly::constant(1) + IntLaurentPoly::monomial(4, 4) + x_to(8));
    CHECK_THROWS(bdrop::substitute_power(one_plus_y, 0));
}

TEST_CASE("geometric_sum") {
    CHECK(bdrop::geometric_sum(0) == IntLaurentPoly::constant(1));
    CHECK(bdrop::geometric_sum(2) == IntLaurentPoly(0, {1, 1, 1}));
    CHECK(bdrop::geometric_sum(4) == IntLaurentPoly(0, {1, 1, 1, 1, 1}));
}

TEST_CASE("coefficient") {
    const IntLaurentPoly p(1, {1, 2, 1});  // x + 2x^2 + x^3
    CHECK(p.coefficient(2) == 2);
    CHECK(p.coefficient(5) == 0);
    CHECK(p.coefficient(-1) == 0);
}

TEST_CASE("is_unimodal") {
    CHECK(bdrop::is_unimodal(IntLaurentPoly(0, {1, 2, 1}), {0, 2}));
    CHECK_FALSE(bdrop::is_unimodal(IntLaurentPoly(0, {1, 0, 1}), {0, 2}));
    CHECK(bdrop::is_unimodal(IntLaurentPoly(0, {1, 1}), {0, 5}));  // flat then zeros
    CHECK_THROWS(bdrop::is_unimodal(IntLaurentPoly(0, {1, 1, 1}), {0, 1}));
}

TEST_CASE("is_window_symmetric") {
    const IntLaurentPoly p = x_to(1) + x_to(2);
    CHECK(bdrop::is_window_symmetric(p, {0, 3}));
    CHECK_FALSE(bdrop::is_window_symmetric(p, {0, 2}));
    CHECK(bdrop::is_window_symmetric(IntLaurentPoly::constant(1), {0, 0}));
}

TEST_CASE("binomial") {
    CHECK(bdrop::binomial(0, 0) == 1);
    CHECK(bdrop::binomial(10, 3) == 120);
    CHECK(bdrop::binomial(3, 5) == 0);
    CHECK(bdrop::binomial(5, -1) == 0);
    CHECK(bdrop::binomial(60, 30) == Int("118264581564861424"));
}

TEST_CASE("ring axioms on random inputs") {
    std::mt19937 rng(20260823);
    for (int trial = 0; trial < 200; ++trial) {
        const IntLaurentPoly p = random_poly(rng);
        const IntLaurentPoly q = random_poly(rng);
        const IntLaurentPoly r = random_poly(rng);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("substitute_power composes multiplicatively") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const IntLaurentPoly p = random_poly(rng);
        for (int m : {-3, -2, -1, 1, 2, 3})
            for (int mp : {-3, -2, -1, 1, 2, 3})
                CHECK(bdrop::substitute_power(bdrop::substitute_power(p, m), mp) ==
                      bdrop::substitute_power(p, static_cast<std::int64_t>(m) * mp));
    }
}

TEST_CASE("geometric_sum times 1-x telescopes") {
    const IntLaurentPoly one_minus_x = IntLaurentPoly::constant(1) - x_to(1);
    for (int k = 0; k <= 50; ++k)
        CHECK(bdrop::geometric_sum(k) * one_minus_x ==
              IntLaurentPoly::constant(1) - x_to(k + 1));
}

TEST_CASE("window symmetry is self-dual under coefficient reversal") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
        const IntLaurentPoly p = random_poly(rng);
        if (p.is_zero()) continue;
        const Window w{p.min_degree() - 1, p.max_degree() + 2};
        // mirror p's coefficients in w
        IntLaurentPoly reversed;
        for (std::int64_t e = w.lo; e <= w.hi; ++e)
            reversed = reversed + IntLaurentPoly::monomial(p.coefficient(e), w.lo + w.hi - e);
        CHECK(bdrop::is_window_symmetric(p, w) == bdrop::is_window_symmetric(reversed, w));
        if (bdrop::is_window_symmetric(p, w)) CHECK(p == reversed);
    }
}
