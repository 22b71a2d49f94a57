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

#ifndef BDROP_PERMUTATION_HPP
#define BDROP_PERMUTATION_HPP

#include <string>
#include <utility>
#include <vector>

namespace bdrop {

/// Permutation of [n] in one-line notation, 1-indexed positions and values.
/// n == 0 (the empty permutation) is legal. Immutable value type.
class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(std::vector<int> entries);  // validates the bijection

    static Permutation identity(int n);
    /// Parses space- or comma-separated entries, e.g. "4 5 2 1 3".
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(entries_.size()); }
    int entry(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& entries() const { return entries_; }

    /// Des(pi) = { i in [n-1] : pi_i > pi_{i+1} }.
    std::vector<int> descent_set() const;
    int des() const;
    /// max{ i - pi_i }; requires n >= 1.
    int maxdrop() const;

    /// pi <- i: append i and increment every old entry >= i. Requires 1 <= i <= n+1.
    Permutation insert_end(int i) const;
    /// Inverse of insert_end: (order-isomorphic prefix, last entry). Requires n >= 1.
    std::pair<Permutation, int> remove_end() const;

    std::string str() const;
    bool operator==(const Permutation&) const = default;

   private:
    std::vector<int> entries_;
};

/// Signed permutation in one-line notation; |entries| is a permutation of [n].
/// The type-B convention pi_0 = 0 is implicit, never stored.
class SignedPermutation {
   public:
    SignedPermutation() = default;
    explicit SignedPermutation(std::vector<int> entries);

    static SignedPermutation parse(const std::string& text);

    int size() const { return static_cast<int>(entries_.size()); }
    int entry(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& entries() const { return entries_; }

    /// Des_B(pi) = { i in [0, n-1] : pi_i > pi_{i+1} } with pi_0 = 0.
    std::vector<int> descent_set_b() const;
    int des_b() const;
    /// max of i - pi_i over positive entries and of i over negative entries;
    /// requires n >= 1.
    int maxdrop_b() const;

    std::string str() const;
    bool operator==(const SignedPermutation&) const = default;

   private:
    std::vector<int> entries_;
};

}  // namespace bdrop

#endif
