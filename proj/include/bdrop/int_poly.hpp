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

#ifndef BDROP_INT_POLY_HPP
#define BDROP_INT_POLY_HPP

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bdrop {

using Int = boost::multiprecision::cpp_int;

/// Explicit exponent window for the coefficient-sequence predicates.
/// Predicates never infer the window from the support: symmetry centers
/// routinely sit on zero coefficients at the window edges.
struct Window {
    std::int64_t lo;
    std::int64_t hi;
};

/// Laurent polynomial with exact integer coefficients over a contiguous
/// exponent range. Canonical form: either coeffs() is empty (zero) or its
/// first and last entries are nonzero. Immutable after construction.
class IntLaurentPoly {
   public:
    IntLaurentPoly() = default;  // zero polynomial
    IntLaurentPoly(std::int64_t min_degree, std::vector<Int> coeffs);

    static IntLaurentPoly constant(Int c);
    static IntLaurentPoly monomial(Int c, std::int64_t e);

    bool is_zero() const { return coeffs_.empty(); }
    /// Lowest exponent with nonzero coefficient; 0 for the zero polynomial.
    std::int64_t min_degree() const { return min_degree_; }
    /// Highest exponent with nonzero coefficient; requires a nonzero polynomial.
    std::int64_t max_degree() const;
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int coefficient(std::int64_t e) const;
    /// Value at x=1, i.e. the sum of all coefficients.
    Int coeff_sum() const;

    bool operator==(const IntLaurentPoly&) const = default;

   private:
    std::int64_t min_degree_ = 0;
    std::vector<Int> coeffs_;
};

IntLaurentPoly operator+(const IntLaurentPoly& p, const IntLaurentPoly& q);
IntLaurentPoly operator-(const IntLaurentPoly& p, const IntLaurentPoly& q);
IntLaurentPoly operator-(const IntLaurentPoly& p);
IntLaurentPoly operator*(const IntLaurentPoly& p, const IntLaurentPoly& q);

/// p^e for e >= 0; pow(p, 0) == 1.
IntLaurentPoly pow(const IntLaurentPoly& p, std::int64_t e);

/// Replace x by x^m (m may be negative, m == 0 rejected): the coefficient of
/// x^e in p becomes the coefficient of x^(m*e) in the result.
IntLaurentPoly substitute_power(const IntLaurentPoly& p, std::int64_t m);

/// 1 + x + ... + x^k.
IntLaurentPoly geometric_sum(std::int64_t k);

/// p * x^e.
IntLaurentPoly shift(const IntLaurentPoly& p, std::int64_t e);

/// Weak rise-then-fall of the coefficient sequence read over w, including
/// zeros at the window edges. Support outside w is rejected.
bool is_unimodal(const IntLaurentPoly& p, const Window& w);

/// Palindromic coefficient sequence over w: coefficient(lo+t) == coefficient(hi-t).
bool is_window_symmetric(const IntLaurentPoly& p, const Window& w);

/// Exact binomial coefficient; 0 when r < 0 or r > n.
Int binomial(std::int64_t n, std::int64_t r);

}  // namespace bdrop

#endif
