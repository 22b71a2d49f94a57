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

#include "descent_kernel.hpp"

#include <stdexcept>

namespace bdrop::detail {

IntLaurentPoly descent_kernel_sum(int k, const std::function<IntLaurentPoly(int)>& eulerian,
                                  std::int64_t m, std::int64_t offset, int s_sign) {
    if (k < 0) throw std::invalid_argument("descent_kernel_sum: k < 0");
    const IntLaurentPoly xm_minus_1 =
        IntLaurentPoly::monomial(1, m) + IntLaurentPoly::constant(-1);
    IntLaurentPoly total;
    IntLaurentPoly factor_pow = IntLaurentPoly::constant(1);  // (x^m - 1)^l
    for (int l = 0; l <= k; ++l) {
        IntLaurentPoly inner;
        for (int s = l; s <= k; ++s)
            inner = inner + IntLaurentPoly::monomial(binomial(s, l), offset + s_sign * s);
        total = total + substitute_power(eulerian(k - l), m) * factor_pow * inner;
        factor_pow = factor_pow * xm_minus_1;
    }
    return total;
}

IntLaurentPoly restricted_descent_recurrence(int n, int k,
                                             const std::function<IntLaurentPoly(int)>& eulerian) {
    if (n < 0 || k < 0) throw std::invalid_argument("restricted_descent_recurrence: negative index");
    if (n <= k) return eulerian(n);
    const IntLaurentPoly y_minus_1 =
        IntLaurentPoly::monomial(1, 1) + IntLaurentPoly::constant(-1);
    // bottom-up over the base row X_0..X_k, then the recurrence for m > k
    std::vector<IntLaurentPoly> row(static_cast<std::size_t>(n + 1));
    for (int m = 0; m <= k; ++m) row[static_cast<std::size_t>(m)] = eulerian(m);
    for (int m = k + 1; m <= n; ++m) {
        IntLaurentPoly acc;
        IntLaurentPoly ym_pow = IntLaurentPoly::constant(1);  // (y-1)^{i-1}
        for (int i = 1; i <= k + 1; ++i) {
            acc = acc + IntLaurentPoly::constant(binomial(k + 1, i)) * ym_pow *
                            row[static_cast<std::size_t>(m - i)];
            ym_pow = ym_pow * y_minus_1;
        }
        row[static_cast<std::size_t>(m)] = acc;
    }
    return row[static_cast<std::size_t>(n)];
}

}  // namespace bdrop::detail
