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

#ifndef BDROP_COEFF_ARRAY_HPP
#define BDROP_COEFF_ARRAY_HPP

#include <cstdint>
#include <vector>

#include "bdrop/int_poly.hpp"

namespace bdrop {

/// Rectangular integer array laid over a polynomial through the affine map
/// (i,j) -> base + stride*i + j. One type serves the arrays t_k (stride k+1),
/// h_k (stride 2k+2), f_k (stride k+2) and g_k (stride 2k+4); stride >= cols
/// so rows cover disjoint exponent blocks.
struct CoeffArray {
    int rows = 0;
    int cols = 0;
    std::int64_t base = 0;
    std::int64_t stride = 0;
    std::vector<Int> entries;  // row-major

    const Int& at(int i, int j) const {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                       static_cast<std::size_t>(j)];
    }
    Int& at(int i, int j) {
        return entries[static_cast<std::size_t>(i) * static_cast<std::size_t>(cols) +
                       static_cast<std::size_t>(j)];
    }
    /// at(i,j) with zero outside the index range; lemma checks index past the
    /// edges freely.
    Int at_or_zero(int i, int j) const {
        if (i < 0 || i >= rows || j < 0 || j >= cols) return 0;
        return at(i, j);
    }

    /// Reads the array off a polynomial. Throws if the polynomial has support
    /// outside the covered cells or the rows would overlap.
    static CoeffArray from_poly(const IntLaurentPoly& p, int rows, int cols, std::int64_t base,
                                std::int64_t stride);

    CoeffArray rotated180() const;

    /// Entrywise equality, ignoring base/stride.
    bool same_entries(const CoeffArray& other) const {
        return rows == other.rows && cols == other.cols && entries == other.entries;
    }

    bool operator==(const CoeffArray&) const = default;
};

}  // namespace bdrop

#endif
