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

#include "bdrop/bijection.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <tuple>

#include "bdrop/enumerate.hpp"

namespace bdrop::bijection {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

std::pair<std::int64_t, std::int64_t> target_indices(int n, int k, std::int64_t i,
                                                     std::int64_t j) {
    if (k < 0) throw std::invalid_argument("target_indices: k < 0");
    if (j < 0 || j > k) throw std::invalid_argument("target_indices: j out of [0, k]");
    const std::int64_t num =
        static_cast<std::int64_t>(n + 1) * k - static_cast<std::int64_t>(k + 1) * i - j;
    const std::int64_t ip = floor_div(num, k + 1);
    const std::int64_t jp = num - (k + 1) * ip;
    return {ip, jp};
}

std::vector<PhiStep> phi_trace(const Permutation& pi, int k) {
    const int n = pi.size();
    if (n < 1) throw std::invalid_argument("phi: empty permutation");
    if (k < 0) throw std::invalid_argument("phi: k < 0");
    if (pi.maxdrop() > k) throw std::invalid_argument("phi: maxdrop(pi) > k");

    // peel the remove_end chain down to the singleton
    std::vector<int> inserted;  // last entries of the size-n..size-2 prefixes
    Permutation cur = pi;
    while (cur.size() > 1) {
        auto [prefix, last] = cur.remove_end();
        inserted.push_back(last);
        cur = std::move(prefix);
    }

    std::vector<PhiStep> steps;
    steps.reserve(static_cast<std::size_t>(n));
    {
        PhiStep base;
        base.prefix = cur;  // the permutation "1"
        base.i = 0;
        base.j = k;
        base.i_prime = 0;
        base.j_prime = k;
        base.inserted = 1;
        base.image = cur;  // phi(1) = 1
        steps.push_back(std::move(base));
    }

    // rebuild; each prefix's class is recomputed from the prefix itself
    Permutation prefix = cur;
    Permutation image = cur;
    for (auto it = inserted.rbegin(); it != inserted.rend(); ++it) {
        prefix = prefix.insert_end(*it);
        const int m = prefix.size();
        if (prefix.maxdrop() > k)
            throw std::logic_error("phi: recursive prefix left A_{m,k} at m=" + std::to_string(m));
        PhiStep step;
        step.prefix = prefix;
        step.i = prefix.des();
        step.j = prefix.entry(m) - m + k;
        std::tie(step.i_prime, step.j_prime) = target_indices(m, k, step.i, step.j);
        if (step.i_prime < 0 || step.i_prime > m - 1)
            throw std::logic_error("phi: target descent count out of range at m=" +
                                   std::to_string(m));
        step.inserted = m - k + static_cast<int>(step.j_prime);
        image = image.insert_end(step.inserted);
        step.image = image;
        steps.push_back(std::move(step));
    }
    return steps;
}

Permutation phi(const Permutation& pi, int k) {
    return phi_trace(pi, k).back().image;
}

bool verify_involution(int n, int k, std::string* witness) {
    bool ok = true;
    for_each_bounded_perm(n, k, [&](const Permutation& p) {
        if (!ok || p.size() == 0) return;
        if (phi(phi(p, k), k) != p) {
            ok = false;
            if (witness) *witness = p.str();
        }
    });
    return ok;
}

bool verify_gamma_mapping(int n, int k, std::string* witness) {
    bool ok = true;
    std::map<std::pair<std::int64_t, std::int64_t>, Int> class_size;
    for_each_bounded_perm(n, k, [&](const Permutation& p) {
        if (!ok || p.size() == 0) return;
        const std::int64_t i = p.des();
        const std::int64_t j = p.entry(n) - n + k;
        class_size[{i, j}] += 1;
        const auto [ip, jp] = target_indices(n, k, i, j);
        if (ip < 0 || ip > n - 1) {
            ok = false;
            if (witness) *witness = "target class out of range for " + p.str();
            return;
        }
        const Permutation q = phi(p, k);
        if (q.des() != ip || q.entry(n) != n - k + jp) {
            ok = false;
            if (witness) *witness = p.str() + " -> " + q.str();
        }
    });
    if (!ok) return false;
    // |Gamma^k(n,i;j)| = |Gamma^k(n,i';j')|, the count identity behind the
    // symmetry of R_{n,k}
    for (const auto& [key, size] : class_size) {
        const auto target = target_indices(n, k, key.first, key.second);
        auto it = class_size.find(target);
        if (it == class_size.end() || it->second != size) {
            ok = false;
            if (witness)
                *witness = "class (" + std::to_string(key.first) + "," +
                           std::to_string(key.second) + ") size mismatch";
            break;
        }
    }
    return ok;
}

}  // namespace bdrop::bijection
