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

#include "bdrop/typeb.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "bdrop/typea.hpp"
#include "descent_kernel.hpp"

namespace bdrop::typeb {

namespace {

std::mutex cache_mu;
std::map<int, IntLaurentPoly> b_cache;
std::map<std::pair<int, int>, IntLaurentPoly> bnk_cache;

IntLaurentPoly one_minus_t() {
    return IntLaurentPoly::constant(1) - IntLaurentPoly::monomial(1, 1);
}

IntLaurentPoly eulerian_poly_unlocked(int n) {
    if (n < 0) throw std::invalid_argument("eulerian_poly: n < 0");
    auto it = b_cache.find(n);
    if (it != b_cache.end()) return it->second;
    const IntLaurentPoly omt = one_minus_t();
    const IntLaurentPoly t = IntLaurentPoly::monomial(1, 1);
    for (int m = static_cast<int>(b_cache.size()); m <= n; ++m) {
        if (m == 0) {
            b_cache[0] = IntLaurentPoly::constant(1);
            continue;
        }
        IntLaurentPoly acc = pow(omt, m);
        Int two_j = 1;
        IntLaurentPoly omt_pow = IntLaurentPoly::constant(1);  // (1-t)^{j-1}
        for (int j = 1; j <= m; ++j) {
            two_j *= 2;
            acc = acc + t * IntLaurentPoly::constant(binomial(m, j) * two_j) * omt_pow *
                            b_cache[m - j];
            omt_pow = omt_pow * omt;
        }
        b_cache[m] = acc;
    }
    return b_cache[n];
}

}  // namespace

IntLaurentPoly eulerian_poly(int n) {
    std::lock_guard<std::mutex> lock(cache_mu);
    return eulerian_poly_unlocked(n);
}

IntLaurentPoly restricted_descent_poly(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("restricted_descent_poly: negative index");
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = bnk_cache.find({n, k});
    if (it != bnk_cache.end()) return it->second;
    IntLaurentPoly result = detail::restricted_descent_recurrence(
        n, k, [](int m) { return eulerian_poly_unlocked(m); });
    bnk_cache[{n, k}] = result;
    return result;
}

namespace {

std::function<IntLaurentPoly(int)> eulerian_b() {
    return [](int m) { return eulerian_poly(m); };
}

}  // namespace

IntLaurentPoly t_poly(int k) {
    return detail::descent_kernel_sum(k, eulerian_b(), k + 1, 0, -1);
}

IntLaurentPoly t_tilde_poly(int k) {
    IntLaurentPoly tt = shift(t_poly(k), k);
    if (tt.is_zero() || tt.min_degree() < k ||
        tt.max_degree() > static_cast<std::int64_t>(k + 1) * (k + 1) - 1)
        throw std::logic_error("t_tilde_poly: support outside [k, (k+1)^2-1]");
    return tt;
}

IntLaurentPoly h_prime_poly(int k) {
    return detail::descent_kernel_sum(k, eulerian_b(), 2 * k + 2, 2 * k + 1, -1);
}

IntLaurentPoly h_dprime_poly(int k) {
    return detail::descent_kernel_sum(k, eulerian_b(), -(2 * k + 2),
                                      2 * static_cast<std::int64_t>(k + 1) * (k + 1), +1);
}

IntLaurentPoly h_poly(int k) {
    IntLaurentPoly h = h_prime_poly(k) + h_dprime_poly(k);
    if (h.is_zero() || h.min_degree() < 0 ||
        h.max_degree() > 2 * static_cast<std::int64_t>(k) * k + 6 * k + 3)
        throw std::logic_error("h_poly: support outside [0, 2k^2+6k+3]");
    return h;
}

IntLaurentPoly g_poly(int k) {
    // leading 1/x on the first block folds into the offset: 2k+3-s-1 = 2k+2-s
    IntLaurentPoly g = detail::descent_kernel_sum(k, eulerian_b(), 2 * k + 4, 2 * k + 2, -1) +
                       detail::descent_kernel_sum(
                           k, eulerian_b(), -(2 * k + 4),
                           2 * static_cast<std::int64_t>(k + 1) * (k + 2), +1);
    if (!g.is_zero() && g.min_degree() < 0)
        throw std::logic_error("g_poly: negative support");
    return g;
}

IntLaurentPoly f_poly(int k) {
    IntLaurentPoly f = detail::descent_kernel_sum(k, eulerian_b(), k + 2, k + 1, -1);
    if (!f.is_zero() && f.min_degree() < 0)
        throw std::logic_error("f_poly: negative support");
    return f;
}

DescentTable ekb_counts_via_tk(int n, int k) {
    if (n < k) throw std::invalid_argument("ekb_counts_via_tk: n < k");
    return typea::descent_counts_from_poly(t_poly(k) * pow(geometric_sum(k), n - k), k + 1);
}

CoeffArray array_t(int k) {
    return CoeffArray::from_poly(t_tilde_poly(k), k + 2, k + 1, 0, k + 1);
}

CoeffArray array_h(int k) {
    return CoeffArray::from_poly(h_poly(k), k + 2, 2 * (k + 1), 0, 2 * (k + 1));
}

CoeffArray array_f(int k) {
    return CoeffArray::from_poly(f_poly(k), k + 2, k + 2, 0, k + 2);
}

CoeffArray array_g(int k) {
    return CoeffArray::from_poly(g_poly(k), k + 2, 2 * k + 4, 0, 2 * (k + 2));
}

CoeffArray array_h_prime(int k) {
    return CoeffArray::from_poly(h_prime_poly(k), k + 2, 2 * (k + 1), 0, 2 * (k + 1));
}

CoeffArray array_h_dprime(int k) {
    return CoeffArray::from_poly(h_dprime_poly(k), k + 2, 2 * (k + 1), 0, 2 * (k + 1));
}

bool check_construction_lemma(int k) {
    const CoeffArray t = array_t(k);
    const CoeffArray rotated = t.rotated180();
    const CoeffArray h = array_h(k);
    for (int i = 0; i < h.rows; ++i)
        for (int j = 0; j < h.cols; ++j) {
            const Int& expected = j <= k ? rotated.at(i, j) : t.at(i, j - (k + 1));
            if (h.at(i, j) != expected) return false;
        }
    return true;
}

bool check_insert_lemma(int k) {
    const CoeffArray t = array_t(k);
    const CoeffArray f = array_f(k);
    for (int i = 0; i < f.rows; ++i) {
        if (f.at(i, 0) != 0) return false;
        for (int j = 0; j <= k; ++j)
            if (f.at(i, j + 1) != t.at(i, j)) return false;
    }
    return true;
}

bool check_g_construction(int k) {
    const CoeffArray h = array_h(k);
    const CoeffArray g = array_g(k);
    // zero columns after column k+1 and after column 2(k+1) of h (1-indexed)
    for (int i = 0; i < g.rows; ++i)
        for (int j = 0; j < g.cols; ++j) {
            Int expected;
            if (j == k + 1 || j == 2 * k + 3)
                expected = 0;
            else if (j <= k)
                expected = h.at(i, j);
            else
                expected = h.at(i, j - 1);
            if (g.at(i, j) != expected) return false;
        }
    return true;
}

bool check_h_symmetry(int k) {
    const CoeffArray h = array_h(k);
    for (int i = 0; i < h.rows; ++i)
        for (int j = 0; j < h.cols; ++j)
            if (h.at(i, j) != h.at(k + 1 - i, 2 * k + 1 - j)) return false;
    return is_window_symmetric(h_poly(k),
                               {0, 2 * static_cast<std::int64_t>(k) * k + 6 * k + 3});
}

bool check_h_recurrence(int k) {
    return h_poly(k + 1) == g_poly(k) * shift(geometric_sum(2 * k + 3), 1);
}

bool check_entry_recurrences(int k) {
    if (k < 0) throw std::invalid_argument("check_entry_recurrences: k < 0");
    const CoeffArray h = array_h(k);
    if (k >= 1) {
        const CoeffArray prev = array_h(k - 1);
        // low columns 0..k
        for (int i = 0; i <= k + 1; ++i)
            for (int j = 0; j <= k; ++j) {
                Int sum = 0;
                for (int m = 0; m <= j - 1; ++m) sum += prev.at_or_zero(i, m);
                for (int m = j; m <= 2 * k - 1; ++m) sum += prev.at_or_zero(i - 1, m);
                if (h.at(i, j) != sum) return false;
            }
        // high columns k+1..2k+1
        for (int i = 0; i <= k + 1; ++i)
            for (int j = k + 1; j <= 2 * k + 1; ++j) {
                Int sum = 0;
                for (int m = 0; m <= j - 2; ++m) sum += prev.at_or_zero(i, m);
                for (int m = j - 1; m <= 2 * k - 1; ++m) sum += prev.at_or_zero(i - 1, m);
                if (h.at(i, j) != sum) return false;
            }
        // plateau at the block center; a consequence of the recurrences, so
        // it only exists for k >= 1 (H_0 = x + x^2 has no plateau)
        for (int i = 0; i <= k + 1; ++i)
            if (h.at(i, k) != h.at(i, k + 1)) return false;
    }
    // row wrap-around, valid from k = 0 on
    for (int i = 0; i <= k + 1; ++i)
        if (h.at(i, 0) != h.at_or_zero(i - 1, 2 * k + 1)) return false;
    return true;
}

bool check_b_symmetry(int n) {
    const IntLaurentPoly b = eulerian_poly(n);
    return b == substitute_power(b, -1) * IntLaurentPoly::monomial(1, n);
}

bool check_bsum_identity(int n) {
    // The identity arises from the substitution n = k+1 with k >= 0, so it is
    // only claimed for n >= 1; at n = 0 the two sides are 1 and t.
    if (n == 0) return true;
    const IntLaurentPoly t_minus_1 = IntLaurentPoly::monomial(1, 1) + IntLaurentPoly::constant(-1);
    const IntLaurentPoly tinv_minus_1 =
        IntLaurentPoly::monomial(1, -1) + IntLaurentPoly::constant(-1);
    IntLaurentPoly lhs, rhs;
    for (int l = 0; l <= n; ++l) {
        const IntLaurentPoly c = IntLaurentPoly::constant(binomial(n, l));
        const IntLaurentPoly b = eulerian_poly(n - l);
        lhs = lhs + c * b * pow(t_minus_1, l);
        rhs = rhs + c * substitute_power(b, -1) * pow(tinv_minus_1, l);
    }
    return lhs == rhs * IntLaurentPoly::monomial(1, n + 1);
}

bool check_egf_identity(int n) {
    const IntLaurentPoly omt = one_minus_t();
    IntLaurentPoly rhs = pow(omt, n + 1);
    Int two_j = 1;
    for (int j = 1; j <= n; ++j) {
        two_j *= 2;
        rhs = rhs + IntLaurentPoly::monomial(binomial(n, j) * two_j, 1) * pow(omt, j) *
                        eulerian_poly(n - j);
    }
    return omt * eulerian_poly(n) == rhs;
}

}  // namespace bdrop::typeb
