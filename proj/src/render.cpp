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

#include "bdrop/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bdrop {

namespace {

std::string term_text(const Int& coeff, std::int64_t e) {
    Int a = coeff < 0 ? Int(-coeff) : coeff;
    std::string out;
    if (e == 0) {
        out = a.str();
    } else {
        if (a != 1) out = a.str();
        out += "x";
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

}  // namespace

std::string poly_to_text(const IntLaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::int64_t e = p.min_degree(); e <= p.max_degree(); ++e) {
        const Int c = p.coefficient(e);
        if (c == 0) continue;
        if (first) {
            if (c < 0) out += "-";
            first = false;
        } else {
            out += c < 0 ? " - " : " + ";
        }
        out += term_text(c, e);
    }
    return out;
}

nlohmann::json poly_to_json(const IntLaurentPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    if (!p.is_zero()) {
        for (std::int64_t e = p.min_degree(); e <= p.max_degree(); ++e) {
            const Int c = p.coefficient(e);
            if (c != 0) terms.push_back({e, c.str()});
        }
    }
    return terms;
}

IntLaurentPoly poly_from_json(const nlohmann::json& j) {
    IntLaurentPoly out;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2)
            throw std::invalid_argument("poly_from_json: expected [exponent, coefficient] pairs");
        const std::int64_t e = term[0].get<std::int64_t>();
        const Int c(term[1].get<std::string>());
        out = out + IntLaurentPoly::monomial(c, e);
    }
    return out;
}

std::string poly_to_csv(const IntLaurentPoly& p) {
    std::string out = "exponent,coefficient\n";
    if (!p.is_zero()) {
        for (std::int64_t e = p.min_degree(); e <= p.max_degree(); ++e) {
            const Int c = p.coefficient(e);
            if (c != 0) out += std::to_string(e) + "," + c.str() + "\n";
        }
    }
    return out;
}

std::string array_to_text(const CoeffArray& a) {
    std::vector<std::size_t> widths(static_cast<std::size_t>(a.cols), 1);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j)
            widths[static_cast<std::size_t>(j)] =
                std::max(widths[static_cast<std::size_t>(j)], a.at(i, j).str().size());
    std::ostringstream out;
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) {
            if (j > 0) out << ' ';
            const std::string s = a.at(i, j).str();
            out << std::string(widths[static_cast<std::size_t>(j)] - s.size(), ' ') << s;
        }
        out << '\n';
    }
    return out.str();
}

std::string array_to_csv(const CoeffArray& a) {
    std::string out;
    for (int i = 0; i < a.rows; ++i) {
        for (int j = 0; j < a.cols; ++j) {
            if (j > 0) out += ',';
            out += a.at(i, j).str();
        }
        out += '\n';
    }
    return out;
}

nlohmann::json array_to_json(const CoeffArray& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < a.rows; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < a.cols; ++j) row.push_back(a.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"rows", a.rows},
                          {"cols", a.cols},
                          {"base", a.base},
                          {"stride", a.stride},
                          {"entries", std::move(rows)}};
}

}  // namespace bdrop
