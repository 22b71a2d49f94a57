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

#ifndef BDROP_ENUMERATE_HPP
#define BDROP_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <utility>
#include <vector>

#include "bdrop/int_poly.hpp"
#include "bdrop/permutation.hpp"

// Exhaustive brute-force oracle. Everything here works straight from the
// definitions; the closed forms and recurrences elsewhere are validated
// against these generators, never the other way around.
//
// Desk-scale bounds: type A n <= 10 (<= 3.6M items), type B n <= 7
// (<= 645k items); type B n = 8 (10.3M) is possible but callers should
// opt in explicitly.

namespace bdrop {

/// Counts by number of descents. Values sum to the cardinality of the
/// enumerated set.
struct DescentTable {
    std::map<int, Int> counts;
    bool operator==(const DescentTable&) const = default;
    Int total() const {
        Int s = 0;
        for (const auto& [d, c] : counts) s += c;
        return s;
    }
};

/// Counts by (descents, last entry value).
struct RefinedTable {
    std::map<std::pair<int, int>, Int> counts;
    bool operator==(const RefinedTable&) const = default;
    Int total() const {
        Int s = 0;
        for (const auto& [key, c] : counts) s += c;
        return s;
    }
};

/// All of S_n in lexicographic order.
template <class F>
void for_each_perm(int n, F&& f) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        f(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

/// A_{n,k} by filtering S_n on maxdrop <= k; lexicographic order.
template <class F>
void for_each_bounded_perm(int n, int k, F&& f) {
    for_each_perm(n, [&](const Permutation& p) {
        if (n == 0 || p.maxdrop() <= k) f(p);
    });
}

namespace detail {

template <class F>
void bounded_perm_rec(int n, int k, std::vector<int>& prefix, std::vector<bool>& used, F&& f) {
    const int i = static_cast<int>(prefix.size()) + 1;
    if (i > n) {
        f(Permutation(prefix));
        return;
    }
    // maxdrop <= k forces pi_i >= i - k
    for (int v = std::max(1, i - k); v <= n; ++v) {
        if (used[static_cast<std::size_t>(v - 1)]) continue;
        used[static_cast<std::size_t>(v - 1)] = true;
        prefix.push_back(v);
        bounded_perm_rec(n, k, prefix, used, f);
        prefix.pop_back();
        used[static_cast<std::size_t>(v - 1)] = false;
    }
}

}  // namespace detail

/// A_{n,k} by pruned backtracking (choose pi_i >= i-k); lexicographic order.
/// Must agree with the filtering generator -- the naive one is its oracle.
template <class F>
void for_each_bounded_perm_pruned(int n, int k, F&& f) {
    std::vector<int> prefix;
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    detail::bounded_perm_rec(n, k, prefix, used, std::forward<F>(f));
}

/// All of B_n: absolute permutations in lexicographic order, sign masks
/// ascending within each (bit b set = minus sign at position b+1).
template <class F>
void for_each_signed_perm(int n, F&& f) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<int> signedv(static_cast<std::size_t>(n));
    do {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            for (int t = 0; t < n; ++t)
                signedv[static_cast<std::size_t>(t)] =
                    (mask >> t) & 1 ? -v[static_cast<std::size_t>(t)] : v[static_cast<std::size_t>(t)];
            f(SignedPermutation(signedv));
        }
    } while (std::next_permutation(v.begin(), v.end()));
}

/// B_{n,k}: filters B_n on maxdrop_B <= k, same order as for_each_signed_perm.
/// A negative entry at position i contributes drop i, so masks with a sign bit
/// past position k are skipped before construction.
template <class F>
void for_each_bounded_signed_perm(int n, int k, F&& f) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    std::vector<int> signedv(static_cast<std::size_t>(n));
    do {
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (k < 32 && (mask >> k) != 0) continue;
            for (int t = 0; t < n; ++t)
                signedv[static_cast<std::size_t>(t)] =
                    (mask >> t) & 1 ? -v[static_cast<std::size_t>(t)] : v[static_cast<std::size_t>(t)];
            SignedPermutation p(signedv);
            if (n == 0 || p.maxdrop_b() <= k) f(p);
        }
    } while (std::next_permutation(v.begin(), v.end()));
}

DescentTable descent_table_s(int n);
DescentTable descent_table_a(int n, int k);
DescentTable descent_table_b_full(int n);
DescentTable descent_table_b(int n, int k);
RefinedTable refined_table_s(int n);
RefinedTable refined_table_a(int n, int k);

}  // namespace bdrop

#endif
