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

#ifndef BDROP_RENDER_HPP
#define BDROP_RENDER_HPP

#include <string>

#include <json.hpp>

#include "bdrop/coeff_array.hpp"
#include "bdrop/int_poly.hpp"

namespace bdrop {

/// Ascending exponents, zero terms omitted: "x + 2x^2 + x^3"; "0" for zero.
std::string poly_to_text(const IntLaurentPoly& p);

/// [[exponent, "coefficient"], ...] in increasing exponent order. Coefficients
/// are decimal strings: they may exceed 64 bits and JSON numbers lose
/// precision past 53.
nlohmann::json poly_to_json(const IntLaurentPoly& p);
IntLaurentPoly poly_from_json(const nlohmann::json& j);

std::string poly_to_csv(const IntLaurentPoly& p);

/// Aligned columns, matching the printed table layout.
std::string array_to_text(const CoeffArray& a);
std::string array_to_csv(const CoeffArray& a);
nlohmann::json array_to_json(const CoeffArray& a);

}  // namespace bdrop

#endif
