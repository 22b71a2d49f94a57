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

#ifndef BDROP_TYPEB_HPP
#define BDROP_TYPEB_HPP

#include "bdrop/coeff_array.hpp"
#include "bdrop/enumerate.hpp"
#include "bdrop/int_poly.hpp"

// Type B machinery: the Eulerian polynomials B_n(y), restricted B_{n,k}(y),
// the kernels T_k / H_k / G_k / F_k, their coefficient arrays, and the
// structural lemma checks behind the unimodality theorem.

namespace bdrop::typeb {

/// B_n(y); memoized. Computed division-free from the rearranged exponential
/// generating function: B_n = (1-t)^n + t sum_{j=1}^{n} C(n,j) 2^j (1-t)^{j-1} B_{n-j}.
IntLaurentPoly eulerian_poly(int n);

/// B_{n,k}(y) via the restricted recurrence; memoized. B_{n,k} = B_n for k >= n.
IntLaurentPoly restricted_descent_poly(int n, int k);

/// T_k(x); Laurent, support may start below 0 before cancellation.
IntLaurentPoly t_poly(int k);
/// x^k T_k(x); asserts support within [k, (k+1)^2 - 1].
IntLaurentPoly t_tilde_poly(int k);

/// The symmetric extension of x^k T_k with doubled exponent blocks; support
/// within [0, 2k^2+6k+3].
IntLaurentPoly h_poly(int k);
/// The two halves of h_poly (low block and its mirror).
IntLaurentPoly h_prime_poly(int k);
IntLaurentPoly h_dprime_poly(int k);
/// The column-inserted variant driving the H recurrence.
IntLaurentPoly g_poly(int k);
/// The single-column-inserted analogue of x^k T_k with stride k+2.
IntLaurentPoly f_poly(int k);

/// E_B^k(n,d) read off the closed form: coefficient of x^{(k+1)d} in
/// T_k(x) (1 + x + ... + x^k)^{n-k}. Requires n >= k.
DescentTable ekb_counts_via_tk(int n, int k);

CoeffArray array_t(int k);        // (k+2) x (k+1), stride k+1
CoeffArray array_h(int k);        // (k+2) x 2(k+1), stride 2(k+1)
CoeffArray array_f(int k);        // (k+2) x (k+2), stride k+2
CoeffArray array_g(int k);        // (k+2) x (2k+4), stride 2(k+2)
CoeffArray array_h_prime(int k);  // as array_h
CoeffArray array_h_dprime(int k);

/// h_k == [rotate180(t_k) | t_k].
bool check_construction_lemma(int k);
/// f_k == t_k with a zero column prepended.
bool check_insert_lemma(int k);
/// g_k == h_k with zero columns inserted after columns k+1 and 2(k+1).
bool check_g_construction(int k);
/// h_k(i,j) == h_k(k+1-i, 2k+1-j).
bool check_h_symmetry(int k);
/// H_{k+1}(x) == G_k(x) (x + x^2 + ... + x^{2k+4}).
bool check_h_recurrence(int k);
/// The entrywise recurrences between h_k and h_{k-1} (k >= 1) and the local
/// identities h_k(i,k) == h_k(i,k+1) (k >= 1) and h_k(i,0) == h_k(i-1,2k+1).
bool check_entry_recurrences(int k);
/// B_n(t) == B_n(1/t) t^n.
bool check_b_symmetry(int n);
/// sum_l C(n,l) B_{n-l}(t) (t-1)^l == sum_l C(n,l) B_{n-l}(1/t) (1/t-1)^l t^{n+1}.
/// Claimed for n >= 1 (it comes from n = k+1); n = 0 is vacuously true.
bool check_bsum_identity(int n);
/// (1-t) B_n == (1-t)^{n+1} + t sum_{j=1}^{n} C(n,j) 2^j (1-t)^j B_{n-j},
/// the cleared-denominator form of the exponential generating function.
bool check_egf_identity(int n);

}  // namespace bdrop::typeb

#endif
