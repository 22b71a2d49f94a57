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

#include "bdrop/coeff_array.hpp"

#include <stdexcept>

namespace bdrop {

CoeffArray CoeffArray::from_poly(const IntLaurentPoly& p, int rows, int cols, std::int64_t base,
                                 std::int64_t stride) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("CoeffArray: empty dimensions");
    if (stride < cols) throw std::invalid_argument("CoeffArray: overlapping rows (stride < cols)");
    CoeffArray out;
    out.rows = rows;
    out.cols = cols;
    out.base = base;
    out.stride = stride;
    out.entries.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = p.coefficient(base + stride * i + j);
    // every nonzero coefficient of p must land in a cell; the affine map can
    // skip exponents when stride > cols
    if (!p.is_zero()) {
        for (std::int64_t e = p.min_degree(); e <= p.max_degree(); ++e) {
            if (p.coefficient(e) == 0) continue;
            const std::int64_t off = e - base;
            if (off < 0 || off / stride >= rows || off % stride >= cols)
                throw std::invalid_argument("CoeffArray: polynomial support outside array cells");
        }
    }
    return out;
}

CoeffArray CoeffArray::rotated180() const {
    CoeffArray out = *this;
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) out.at(i, j) = at(rows - 1 - i, cols - 1 - j);
    return out;
}

}  // namespace bdrop
