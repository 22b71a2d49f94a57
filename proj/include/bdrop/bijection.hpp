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

#ifndef BDROP_BIJECTION_HPP
#define BDROP_BIJECTION_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bdrop/permutation.hpp"

// The recursive involution phi on A_{n,k}. For pi with des(pi) = i and last
// entry n-k+j, phi maps the class (i,j) to (i',j') where
// (k+1)i+j + (k+1)i'+j' = (n+1)k, and is its own inverse.

namespace bdrop::bijection {

/// (i,j) -> (i',j'): i' = floor(((n+1)k - (k+1)i - j) / (k+1)) with
/// mathematical floor (toward -infinity), j' the matching remainder in [0,k].
/// Applying it twice returns (i,j). The caller must treat i' outside
/// [0, n-1] as an invalid (i,j) for this (n,k).
std::pair<std::int64_t, std::int64_t> target_indices(int n, int k, std::int64_t i,
                                                     std::int64_t j);

/// phi(pi) for pi in A_{n,k}; rejects maxdrop(pi) > k. Implemented
/// iteratively: peel the whole remove_end chain, then rebuild with
/// insert_end, recomputing each prefix's class from the prefix itself.
Permutation phi(const Permutation& pi, int k);

/// One rebuild step of phi's recursion, from prefix length 1 up to n.
struct PhiStep {
    Permutation prefix;  // the size-m prefix permutation (order isomorphic)
    std::int64_t i = 0, j = 0;    // its class
    std::int64_t i_prime = 0, j_prime = 0;
    int inserted = 0;    // value appended to the image, m-k+j'
    Permutation image;   // phi of the prefix
};

/// The full recursion chain; the last image equals phi(pi, k).
std::vector<PhiStep> phi_trace(const Permutation& pi, int k);

/// phi(phi(pi)) == pi for every pi in A_{n,k}. On failure, *witness (if
/// given) receives the offending permutation.
bool verify_involution(int n, int k, std::string* witness = nullptr);

/// Every pi in Gamma^k(n,i;j) maps into Gamma^k(n,i';j'), and the class
/// cardinalities match.
bool verify_gamma_mapping(int n, int k, std::string* witness = nullptr);

}  // namespace bdrop::bijection

#endif
