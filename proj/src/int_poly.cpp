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

#include "bdrop/int_poly.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bdrop {

namespace {

IntLaurentPoly make_canonical(std::int64_t min_degree, std::vector<Int> coeffs) {
    return IntLaurentPoly(min_degree, std::move(coeffs));
}

}  // namespace

IntLaurentPoly::IntLaurentPoly(std::int64_t min_degree, std::vector<Int> coeffs)
    : min_degree_(min_degree), coeffs_(std::move(coeffs)) {
    // trim leading/trailing zeros; zero polynomial normalizes to (0, {})
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    if (lead == coeffs_.size()) {
        coeffs_.clear();
        min_degree_ = 0;
        return;
    }
    std::size_t tail = coeffs_.size();
    while (coeffs_[tail - 1] == 0) --tail;
    if (lead > 0 || tail < coeffs_.size()) {
        std::vector<Int> trimmed(coeffs_.begin() + static_cast<std::ptrdiff_t>(lead),
                                 coeffs_.begin() + static_cast<std::ptrdiff_t>(tail));
        coeffs_ = std::move(trimmed);
        min_degree_ += static_cast<std::int64_t>(lead);
    }
}

IntLaurentPoly IntLaurentPoly::constant(Int c) {
    return IntLaurentPoly(0, {std::move(c)});
}

IntLaurentPoly IntLaurentPoly::monomial(Int c, std::int64_t e) {
    return IntLaurentPoly(e, {std::move(c)});
}

std::int64_t IntLaurentPoly::max_degree() const {
    if (is_zero()) throw std::logic_error("max_degree of zero polynomial");
    return min_degree_ + static_cast<std::int64_t>(coeffs_.size()) - 1;
}

Int IntLaurentPoly::coefficient(std::int64_t e) const {
    if (is_zero() || e < min_degree_) return 0;
    const std::int64_t t = e - min_degree_;
    if (t >= static_cast<std::int64_t>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(t)];
}

Int IntLaurentPoly::coeff_sum() const {
    Int s = 0;
    for (const Int& c : coeffs_) s += c;
    return s;
}

IntLaurentPoly operator+(const IntLaurentPoly& p, const IntLaurentPoly& q) {
    if (p.is_zero()) return q;
    if (q.is_zero()) return p;
    const std::int64_t lo = std::min(p.min_degree(), q.min_degree());
    const std::int64_t hi = std::max(p.max_degree(), q.max_degree());
    std::vector<Int> out(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t t = 0; t < p.coeffs().size(); ++t)
        out[static_cast<std::size_t>(p.min_degree() - lo) + t] += p.coeffs()[t];
    for (std::size_t t = 0; t < q.coeffs().size(); ++t)
        out[static_cast<std::size_t>(q.min_degree() - lo) + t] += q.coeffs()[t];
    return make_canonical(lo, std::move(out));
}

IntLaurentPoly operator-(const IntLaurentPoly& p) {
    std::vector<Int> out(p.coeffs());
    for (Int& c : out) c = -c;
    return make_canonical(p.min_degree(), std::move(out));
}

IntLaurentPoly operator-(const IntLaurentPoly& p, const IntLaurentPoly& q) {
    return p + (-q);
}

IntLaurentPoly operator*(const IntLaurentPoly& p, const IntLaurentPoly& q) {
    if (p.is_zero() || q.is_zero()) return IntLaurentPoly();
    std::vector<Int> out(p.coeffs().size() + q.coeffs().size() - 1);
    for (std::size_t a = 0; a < p.coeffs().size(); ++a)
        for (std::size_t b = 0; b < q.coeffs().size(); ++b)
            out[a + b] += p.coeffs()[a] * q.coeffs()[b];
    return make_canonical(p.min_degree() + q.min_degree(), std::move(out));
}

IntLaurentPoly pow(const IntLaurentPoly& p, std::int64_t e) {
    if (e < 0) throw std::invalid_argument("pow: negative exponent");
    IntLaurentPoly result = IntLaurentPoly::constant(1);
    IntLaurentPoly base = p;
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

IntLaurentPoly substitute_power(const IntLaurentPoly& p, std::int64_t m) {
    if (m == 0) throw std::invalid_argument("substitute_power: m == 0");
    if (p.is_zero()) return p;
    const std::int64_t n = static_cast<std::int64_t>(p.coeffs().size());
    const std::int64_t am = m < 0 ? -m : m;
    std::vector<Int> out(static_cast<std::size_t>((n - 1) * am + 1));
    std::int64_t lo;
    if (m > 0) {
        lo = p.min_degree() * m;
        for (std::int64_t t = 0; t < n; ++t)
            out[static_cast<std::size_t>(t * m)] = p.coeffs()[static_cast<std::size_t>(t)];
    } else {
        lo = p.max_degree() * m;  // highest old exponent maps to the new minimum
        for (std::int64_t t = 0; t < n; ++t)
            out[static_cast<std::size_t>((n - 1 - t) * am)] =
                p.coeffs()[static_cast<std::size_t>(t)];
    }
    return make_canonical(lo, std::move(out));
}

IntLaurentPoly geometric_sum(std::int64_t k) {
    if (k < 0) throw std::invalid_argument("geometric_sum: k < 0");
    return IntLaurentPoly(0, std::vector<Int>(static_cast<std::size_t>(k + 1), 1));
}

IntLaurentPoly shift(const IntLaurentPoly& p, std::int64_t e) {
    if (p.is_zero()) return p;
    return IntLaurentPoly(p.min_degree() + e, p.coeffs());
}

namespace {

void require_support_within(const IntLaurentPoly& p, const Window& w, const char* who) {
    if (w.hi < w.lo) throw std::invalid_argument(std::string(who) + ": window with hi < lo");
    if (!p.is_zero() && (p.min_degree() < w.lo || p.max_degree() > w.hi))
        throw std::invalid_argument(std::string(who) + ": support outside window");
}

}  // namespace

bool is_unimodal(const IntLaurentPoly& p, const Window& w) {
    require_support_within(p, w, "is_unimodal");
    bool rising = true;
    Int prev = p.coefficient(w.lo);
    for (std::int64_t e = w.lo + 1; e <= w.hi; ++e) {
        Int cur = p.coefficient(e);
        if (rising) {
            if (cur < prev) rising = false;
        } else {
            if (cur > prev) return false;
        }
        prev = std::move(cur);
    }
    return true;
}

bool is_window_symmetric(const IntLaurentPoly& p, const Window& w) {
    require_support_within(p, w, "is_window_symmetric");
    for (std::int64_t t = 0; w.lo + t < w.hi - t; ++t)
        if (p.coefficient(w.lo + t) != p.coefficient(w.hi - t)) return false;
    return true;
}

Int binomial(std::int64_t n, std::int64_t r) {
    if (r < 0 || r > n) return 0;
    if (r > n - r) r = n - r;
    Int result = 1;
    for (std::int64_t t = 1; t <= r; ++t) {
        result *= n - r + t;
        result /= t;
    }
    return result;
}

}  // namespace bdrop
