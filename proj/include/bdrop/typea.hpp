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

#ifndef BDROP_TYPEA_HPP
#define BDROP_TYPEA_HPP

#include "bdrop/enumerate.hpp"
#include "bdrop/int_poly.hpp"

// Type A machinery: Eulerian polynomials A_n(y), the maxdrop-restricted
// polynomials A_{n,k}(y), the kernel polynomials P_k / Q_k / R_{n,k}, and
// the identity / symmetry checks that tie them to the enumeration oracle.
//
// Convention: constant term of A_n(y) is 1 (the descent count starts at 0).

namespace bdrop::typea {

/// A_n(y); memoized.
IntLaurentPoly eulerian_poly(int n);

/// A_{n,k}(y) via the restricted recurrence; memoized. A_{n,k} = A_n for k >= n-1.
IntLaurentPoly restricted_descent_poly(int n, int k);

/// P_k(x); Laurent, support may start below 0 before cancellation.
IntLaurentPoly p_poly(int k);

/// Q_k(x) = x^k P_k(x); asserts min_degree >= 0.
IntLaurentPoly q_poly(int k);

/// R_{n,k}(x) = Q_k(x) (1 + x + ... + x^k)^{n-k}; rejects n < k.
IntLaurentPoly r_poly(int n, int k);

/// E^k(n,d) read off the closed form: coefficient of x^{(k+1)d} in
/// P_k(x) (1 + x + ... + x^k)^{n-k}. Requires n >= k.
DescentTable ek_counts_via_pk(int n, int k);

/// E(n,i;j): permutations of [n] with des = i and last entry j (oracle count).
Int refined_count_e(int n, int i, int j);
/// E^k(n,i;j): same restricted to maxdrop <= k.
Int refined_count_ek(int n, int k, int i, int j);

/// Q_n(x) == sum E(n+1,i;j+1) x^{(n+1)i+j} against the oracle.
bool check_q_identity(int n);
/// R_{n,k}(x) == sum E^k(n+1,i;n+1-k+j) x^{(k+1)i+j} against the oracle.
bool check_r_identity(int n, int k);
/// Window symmetry of R_{n,k} over [0, (n+2)k], plus the pairwise count
/// identity E^k(n+1,i;n+1-k+j) = E^k(n+1,i';n+1-k+j') via the oracle.
bool check_r_symmetry(int n, int k);

/// Converts a polynomial whose exponents step by `step` into descent counts:
/// counts[d] = coefficient(step * d). Shared with the type B closed form.
DescentTable descent_counts_from_poly(const IntLaurentPoly& p, std::int64_t step);

}  // namespace bdrop::typea

#endif
