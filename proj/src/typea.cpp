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

#include "bdrop/typea.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "bdrop/bijection.hpp"
#include "descent_kernel.hpp"

namespace bdrop::typea {

namespace {

std::mutex cache_mu;
std::map<int, IntLaurentPoly> a_cache;
std::map<std::pair<int, int>, IntLaurentPoly> ank_cache;

// A_n = sum_{i=1}^{n} C(n,i) (y-1)^{i-1} A_{n-i}; this is the restricted
// recurrence at its base row, where A_{n,n-1} = A_n.
IntLaurentPoly eulerian_poly_unlocked(int n) {
    if (n < 0) throw std::invalid_argument("eulerian_poly: n < 0");
    auto it = a_cache.find(n);
    if (it != a_cache.end()) return it->second;
    const IntLaurentPoly y_minus_1 =
        IntLaurentPoly::monomial(1, 1) + IntLaurentPoly::constant(-1);
    for (int m = static_cast<int>(a_cache.size()); m <= n; ++m) {
        if (m == 0) {
            a_cache[0] = IntLaurentPoly::constant(1);
            continue;
        }
        IntLaurentPoly acc;
        IntLaurentPoly ym_pow = IntLaurentPoly::constant(1);
        for (int i = 1; i <= m; ++i) {
            acc = acc + IntLaurentPoly::constant(binomial(m, i)) * ym_pow * a_cache[m - i];
            ym_pow = ym_pow * y_minus_1;
        }
        a_cache[m] = acc;
    }
    return a_cache[n];
}

}  // namespace

IntLaurentPoly eulerian_poly(int n) {
    std::lock_guard<std::mutex> lock(cache_mu);
    return eulerian_poly_unlocked(n);
}

IntLaurentPoly restricted_descent_poly(int n, int k) {
    if (n < 0 || k < 0) throw std::invalid_argument("restricted_descent_poly: negative index");
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = ank_cache.find({n, k});
    if (it != ank_cache.end()) return it->second;
    IntLaurentPoly result = detail::restricted_descent_recurrence(
        n, k, [](int m) { return eulerian_poly_unlocked(m); });
    ank_cache[{n, k}] = result;
    return result;
}

IntLaurentPoly p_poly(int k) {
    return detail::descent_kernel_sum(k, [](int m) { return eulerian_poly(m); }, k + 1, 0, -1);
}

IntLaurentPoly q_poly(int k) {
    IntLaurentPoly q = shift(p_poly(k), k);
    if (!q.is_zero() && q.min_degree() < 0)
        throw std::logic_error("q_poly: x^k P_k(x) has negative support");
    return q;
}

IntLaurentPoly r_poly(int n, int k) {
    if (n < k) throw std::invalid_argument("r_poly: n < k");
    return q_poly(k) * pow(geometric_sum(k), n - k);
}

DescentTable descent_counts_from_poly(const IntLaurentPoly& p, std::int64_t step) {
    DescentTable out;
    if (p.is_zero()) return out;
    for (std::int64_t d = 0; step * d <= p.max_degree(); ++d) {
        Int c = p.coefficient(step * d);
        if (c != 0) out.counts[static_cast<int>(d)] = std::move(c);
    }
    return out;
}

DescentTable ek_counts_via_pk(int n, int k) {
    if (n < k) throw std::invalid_argument("ek_counts_via_pk: n < k");
    return descent_counts_from_poly(p_poly(k) * pow(geometric_sum(k), n - k), k + 1);
}

Int refined_count_e(int n, int i, int j) {
    if (j < 1 || j > n) throw std::invalid_argument("refined_count_e: j out of [1, n]");
    RefinedTable table = refined_table_s(n);
    auto it = table.counts.find({i, j});
    return it == table.counts.end() ? Int(0) : it->second;
}

Int refined_count_ek(int n, int k, int i, int j) {
    if (j < 1 || j > n) throw std::invalid_argument("refined_count_ek: j out of [1, n]");
    RefinedTable table = refined_table_a(n, k);
    auto it = table.counts.find({i, j});
    return it == table.counts.end() ? Int(0) : it->second;
}

bool check_q_identity(int n) {
    IntLaurentPoly oracle_sum;
    for (const auto& [key, count] : refined_table_s(n + 1).counts) {
        const auto [i, last] = key;
        oracle_sum = oracle_sum +
                     IntLaurentPoly::monomial(count, static_cast<std::int64_t>(n + 1) * i + (last - 1));
    }
    return q_poly(n) == oracle_sum;
}

bool check_r_identity(int n, int k) {
    if (n < k) throw std::invalid_argument("check_r_identity: n < k");
    IntLaurentPoly oracle_sum;
    for (const auto& [key, count] : refined_table_a(n + 1, k).counts) {
        const auto [i, last] = key;
        const int j = last - (n + 1 - k);  // members of A_{n+1,k} have last >= n+1-k
        oracle_sum =
            oracle_sum + IntLaurentPoly::monomial(count, static_cast<std::int64_t>(k + 1) * i + j);
    }
    return r_poly(n, k) == oracle_sum;
}

bool check_r_symmetry(int n, int k) {
    if (n < k) throw std::invalid_argument("check_r_symmetry: n < k");
    const Window w{0, static_cast<std::int64_t>(n + 2) * k};
    if (!is_window_symmetric(r_poly(n, k), w)) return false;
    // count-level statement at index n+1: E^k(n+1,i;n+1-k+j) = E^k(n+1,i';n+1-k+j')
    RefinedTable table = refined_table_a(n + 1, k);
    auto count_at = [&](int i, int last) {
        auto it = table.counts.find({i, last});
        return it == table.counts.end() ? Int(0) : it->second;
    };
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= k; ++j) {
            const auto [ip, jp] = bijection::target_indices(n + 1, k, i, j);
            if (count_at(i, n + 1 - k + j) !=
                count_at(static_cast<int>(ip), n + 1 - k + static_cast<int>(jp)))
                return false;
        }
    return true;
}

}  // namespace bdrop::typea
