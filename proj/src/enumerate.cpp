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

#include "bdrop/enumerate.hpp"

namespace bdrop {

DescentTable descent_table_s(int n) {
    DescentTable out;
    for_each_perm(n, [&](const Permutation& p) { out.counts[p.des()] += 1; });
    return out;
}

DescentTable descent_table_a(int n, int k) {
    DescentTable out;
    for_each_bounded_perm(n, k, [&](const Permutation& p) { out.counts[p.des()] += 1; });
    return out;
}

DescentTable descent_table_b_full(int n) {
    DescentTable out;
    for_each_signed_perm(n, [&](const SignedPermutation& p) { out.counts[p.des_b()] += 1; });
    return out;
}

DescentTable descent_table_b(int n, int k) {
    DescentTable out;
    for_each_bounded_signed_perm(n, k,
                                 [&](const SignedPermutation& p) { out.counts[p.des_b()] += 1; });
    return out;
}

RefinedTable refined_table_s(int n) {
    RefinedTable out;
    for_each_perm(n, [&](const Permutation& p) {
        if (p.size() > 0) out.counts[{p.des(), p.entry(p.size())}] += 1;
    });
    return out;
}

RefinedTable refined_table_a(int n, int k) {
    RefinedTable out;
    for_each_bounded_perm(n, k, [&](const Permutation& p) {
        if (p.size() > 0) out.counts[{p.des(), p.entry(p.size())}] += 1;
    });
    return out;
}

}  // namespace bdrop
