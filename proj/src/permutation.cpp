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

#include "bdrop/permutation.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bdrop {

namespace {

std::vector<int> parse_ints(const std::string& text) {
    std::string normalized = text;
    std::replace(normalized.begin(), normalized.end(), ',', ' ');
    std::istringstream in(normalized);
    std::vector<int> out;
    int v;
    while (in >> v) out.push_back(v);
    if (!in.eof()) throw std::invalid_argument("permutation parse: bad token in \"" + text + "\"");
    return out;
}

void require_abs_bijection(const std::vector<int>& entries, const char* who) {
    const int n = static_cast<int>(entries.size());
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : entries) {
        const int a = std::abs(v);
        if (a < 1 || a > n || seen[static_cast<std::size_t>(a - 1)])
            throw std::invalid_argument(std::string(who) + ": entries are not a permutation of [n]");
        seen[static_cast<std::size_t>(a - 1)] = true;
    }
}

template <class Entries>
std::string join(const Entries& entries) {
    std::string out;
    for (std::size_t t = 0; t < entries.size(); ++t) {
        if (t > 0) out += ' ';
        out += std::to_string(entries[t]);
    }
    return out;
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
    require_abs_bijection(entries_, "Permutation");
    for (int v : entries_)
        if (v < 0) throw std::invalid_argument("Permutation: negative entry");
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

Permutation Permutation::parse(const std::string& text) {
    return Permutation(parse_ints(text));
}

std::vector<int> Permutation::descent_set() const {
    std::vector<int> out;
    for (int i = 1; i < size(); ++i)
        if (entry(i) > entry(i + 1)) out.push_back(i);
    return out;
}

int Permutation::des() const {
    int d = 0;
    for (int i = 1; i < size(); ++i)
        if (entry(i) > entry(i + 1)) ++d;
    return d;
}

int Permutation::maxdrop() const {
    if (size() == 0) throw std::logic_error("maxdrop of empty permutation");
    int m = 0;
    for (int i = 1; i <= size(); ++i) m = std::max(m, i - entry(i));
    return m;
}

Permutation Permutation::insert_end(int i) const {
    const int n = size();
    if (i < 1 || i > n + 1) throw std::invalid_argument("insert_end: value out of [1, n+1]");
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n + 1));
    for (int v : entries_) out.push_back(v >= i ? v + 1 : v);
    out.push_back(i);
    Permutation result;
    result.entries_ = std::move(out);
    return result;
}

std::pair<Permutation, int> Permutation::remove_end() const {
    const int n = size();
    if (n == 0) throw std::logic_error("remove_end of empty permutation");
    const int last = entry(n);
    std::vector<int> prefix;
    prefix.reserve(static_cast<std::size_t>(n - 1));
    for (int t = 1; t < n; ++t) {
        const int v = entry(t);
        prefix.push_back(v > last ? v - 1 : v);
    }
    Permutation result;
    result.entries_ = std::move(prefix);
    return {result, last};
}

std::string Permutation::str() const { return join(entries_); }

SignedPermutation::SignedPermutation(std::vector<int> entries) : entries_(std::move(entries)) {
    require_abs_bijection(entries_, "SignedPermutation");
    for (int v : entries_)
        if (v == 0) throw std::invalid_argument("SignedPermutation: zero entry");
}

SignedPermutation SignedPermutation::parse(const std::string& text) {
    return SignedPermutation(parse_ints(text));
}

std::vector<int> SignedPermutation::descent_set_b() const {
    std::vector<int> out;
    int prev = 0;  // virtual pi_0
    for (int i = 1; i <= size(); ++i) {
        if (prev > entry(i)) out.push_back(i - 1);
        prev = entry(i);
    }
    return out;
}

int SignedPermutation::des_b() const {
    return static_cast<int>(descent_set_b().size());
}

int SignedPermutation::maxdrop_b() const {
    if (size() == 0) throw std::logic_error("maxdrop_b of empty signed permutation");
    int m = 0;
    for (int i = 1; i <= size(); ++i) {
        const int v = entry(i);
        m = std::max(m, v > 0 ? i - v : i);
    }
    return m;
}

std::string SignedPermutation::str() const { return join(entries_); }

}  // namespace bdrop
