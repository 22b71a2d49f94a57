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

#ifndef BDROP_VERIFY_HPP
#define BDROP_VERIFY_HPP

#include <functional>
#include <string>
#include <vector>

namespace bdrop::verify {

struct CheckResult {
    std::string name;   // check plus parameters, e.g. "involution(n=5,k=2)"
    bool pass = false;
    std::string witness;  // filled on failure when one is available
    double millis = 0.0;
};

struct Check {
    std::string name;
    std::function<bool(std::string& witness)> run;
};

struct Bounds {
    int max_n = 7;
    int max_k = 10;
};

std::vector<Check> typea_suite(const Bounds& b);
std::vector<Check> typeb_suite(const Bounds& b);
std::vector<Check> bijection_suite(const Bounds& b);
std::vector<Check> arrays_suite(const Bounds& b);
std::vector<Check> all_suites(const Bounds& b);

/// Runs the checks on `jobs` worker threads; the result order always matches
/// the check order, independent of scheduling.
std::vector<CheckResult> run_checks(const std::vector<Check>& checks, int jobs);

}  // namespace bdrop::verify

#endif
