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

#ifndef BDROP_DESCENT_KERNEL_HPP
#define BDROP_DESCENT_KERNEL_HPP

#include <cstdint>
#include <functional>

#include "bdrop/int_poly.hpp"

namespace bdrop::detail {

// The P_k / T_k / F_k / H_k / G_k kernels all share one shape:
//
//   sum_{l=0}^{k} E_{k-l}(x^m) (x^m - 1)^l sum_{s=l}^{k} C(s,l) x^(offset + s_sign*s)
//
// where E_n is an Eulerian-polynomial family (type A or B), m may be
// negative, and the inner monomial runs either downward (s_sign = -1) or
// upward (s_sign = +1) in s.
IntLaurentPoly descent_kernel_sum(int k, const std::function<IntLaurentPoly(int)>& eulerian,
                                  std::int64_t m, std::int64_t offset, int s_sign);

// Shared restricted-descent recurrence: X_{n,k} = X_n for n <= k and
//   X_{n,k}(y) = sum_{i=1}^{k+1} C(k+1,i) (y-1)^{i-1} X_{n-i,k}(y)
// above the base row, for either Eulerian family X.
IntLaurentPoly restricted_descent_recurrence(int n, int k,
                                             const std::function<IntLaurentPoly(int)>& eulerian);

}  // namespace bdrop::detail

#endif
