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

#include "bdrop/verify.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "bdrop/bijection.hpp"
#include "bdrop/enumerate.hpp"
#include "bdrop/typea.hpp"
#include "bdrop/typeb.hpp"

namespace bdrop::verify {

namespace {

std::string fmt_nk(const char* what, int n, int k) {
    return std::string(what) + "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
}

std::string fmt_n(const char* what, const char* var, int n) {
    return std::string(what) + "(" + var + "=" + std::to_string(n) + ")";
}

DescentTable table_from_descent_poly(const IntLaurentPoly& p) {
    return typea::descent_counts_from_poly(p, 1);
}

std::string table_diff_witness(const DescentTable& a, const DescentTable& b, const char* la,
                               const char* lb) {
    for (const auto& [d, c] : a.counts) {
        auto it = b.counts.find(d);
        if (it == b.counts.end() || it->second != c)
            return std::string(la) + " has " + c.str() + " at d=" + std::to_string(d) + ", " + lb +
                   " has " + (it == b.counts.end() ? "0" : it->second.str());
    }
    for (const auto& [d, c] : b.counts)
        if (a.counts.find(d) == a.counts.end())
            return std::string(lb) + " has extra d=" + std::to_string(d);
    return "";
}

}  // namespace

std::vector<Check> typea_suite(const Bounds& b) {
    std::vector<Check> checks;
    // recurrence == closed form == enumeration
    for (int n = 1; n <= b.max_n; ++n)
        for (int k = 0; k < n; ++k)
            checks.push_back({fmt_nk("typea_triple", n, k), [n, k](std::string& witness) {
                                  const DescentTable rec =
                                      table_from_descent_poly(typea::restricted_descent_poly(n, k));
                                  const DescentTable closed = typea::ek_counts_via_pk(n, k);
                                  const DescentTable oracle = descent_table_a(n, k);
                                  if (rec != oracle) {
                                      witness = table_diff_witness(rec, oracle, "recurrence",
                                                                   "enumeration");
                                      return false;
                                  }
                                  if (closed != oracle) {
                                      witness = table_diff_witness(closed, oracle, "closed form",
                                                                   "enumeration");
                                      return false;
                                  }
                                  return true;
                              }});
    for (int n = 0; n <= b.max_n; ++n)
        checks.push_back({fmt_n("q_identity", "n", n), [n](std::string&) {
                              return typea::check_q_identity(n);
                          }});
    for (int n = 0; n <= b.max_n; ++n)
        for (int k = 0; k <= n; ++k) {
            checks.push_back({fmt_nk("r_identity", n, k), [n, k](std::string&) {
                                  return typea::check_r_identity(n, k);
                              }});
            checks.push_back({fmt_nk("r_symmetry", n, k), [n, k](std::string&) {
                                  return typea::check_r_symmetry(n, k);
                              }});
        }
    for (int k = 0; k <= b.max_k; ++k)
        checks.push_back({fmt_n("q_unimodal", "k", k), [k](std::string&) {
                              return is_unimodal(typea::q_poly(k),
                                                 {0, static_cast<std::int64_t>(k) * (k + 2)});
                          }});
    return checks;
}

std::vector<Check> typeb_suite(const Bounds& b) {
    std::vector<Check> checks;
    for (int n = 0; n <= b.max_n; ++n)
        for (int k = 0; k <= n; ++k)
            checks.push_back({fmt_nk("typeb_triple", n, k), [n, k](std::string& witness) {
                                  const DescentTable rec =
                                      table_from_descent_poly(typeb::restricted_descent_poly(n, k));
                                  const DescentTable closed = typeb::ekb_counts_via_tk(n, k);
                                  const DescentTable oracle = descent_table_b(n, k);
                                  if (rec != oracle) {
                                      witness = table_diff_witness(rec, oracle, "recurrence",
                                                                   "enumeration");
                                      return false;
                                  }
                                  if (closed != oracle) {
                                      witness = table_diff_witness(closed, oracle, "closed form",
                                                                   "enumeration");
                                      return false;
                                  }
                                  return true;
                              }});
    for (int n = 0; n <= b.max_n; ++n)
        checks.push_back({fmt_n("eulerian_b_vs_enumeration", "n", n), [n](std::string&) {
                              return table_from_descent_poly(typeb::eulerian_poly(n)) ==
                                     descent_table_b_full(n);
                          }});
    for (int n = 0; n <= b.max_k; ++n) {
        checks.push_back({fmt_n("b_symmetry", "n", n), [n](std::string&) {
                              return typeb::check_b_symmetry(n);
                          }});
        checks.push_back({fmt_n("bsum_identity", "n", n), [n](std::string&) {
                              return typeb::check_bsum_identity(n);
                          }});
        checks.push_back({fmt_n("egf_identity", "n", n), [n](std::string&) {
                              return typeb::check_egf_identity(n);
                          }});
    }
    return checks;
}

std::vector<Check> bijection_suite(const Bounds& b) {
    std::vector<Check> checks;
    checks.push_back({"target_indices_involution", [](std::string& witness) {
                          for (int n = 1; n <= 30; ++n)
                              for (int k = 0; k <= 12; ++k)
                                  for (int i = 0; i <= n - 1; ++i)
                                      for (int j = 0; j <= k; ++j) {
                                          const auto [ip, jp] =
                                              bijection::target_indices(n, k, i, j);
                                          if (bijection::target_indices(n, k, ip, jp) !=
                                              std::pair<std::int64_t, std::int64_t>{i, j}) {
                                              witness = "(n,k,i,j)=(" + std::to_string(n) + "," +
                                                        std::to_string(k) + "," +
                                                        std::to_string(i) + "," +
                                                        std::to_string(j) + ")";
                                              return false;
                                          }
                                      }
                          return true;
                      }});
    for (int n = 1; n <= b.max_n; ++n)
        for (int k = 0; k < n; ++k) {
            checks.push_back({fmt_nk("involution", n, k), [n, k](std::string& witness) {
                                  return bijection::verify_involution(n, k, &witness);
                              }});
            checks.push_back({fmt_nk("gamma_mapping", n, k), [n, k](std::string& witness) {
                                  return bijection::verify_gamma_mapping(n, k, &witness);
                              }});
        }
    return checks;
}

std::vector<Check> arrays_suite(const Bounds& b) {
    std::vector<Check> checks;
    for (int k = 0; k <= b.max_k; ++k) {
        checks.push_back({fmt_n("construction_lemma", "k", k), [k](std::string&) {
                              return typeb::check_construction_lemma(k);
                          }});
        checks.push_back({fmt_n("insert_lemma", "k", k), [k](std::string&) {
                              return typeb::check_insert_lemma(k);
                          }});
        checks.push_back({fmt_n("g_construction", "k", k), [k](std::string&) {
                              return typeb::check_g_construction(k);
                          }});
        checks.push_back({fmt_n("h_symmetry", "k", k), [k](std::string&) {
                              return typeb::check_h_symmetry(k);
                          }});
        checks.push_back({fmt_n("h_recurrence", "k", k), [k](std::string&) {
                              return typeb::check_h_recurrence(k);
                          }});
        checks.push_back({fmt_n("entry_recurrences", "k", k), [k](std::string&) {
                              return typeb::check_entry_recurrences(k);
                          }});
        checks.push_back({fmt_n("t_tilde_unimodal", "k", k), [k](std::string&) {
                              return is_unimodal(
                                  typeb::t_tilde_poly(k),
                                  {k, static_cast<std::int64_t>(k + 1) * (k + 1) - 1});
                          }});
        checks.push_back({fmt_n("h_unimodal", "k", k), [k](std::string&) {
                              return is_unimodal(
                                  typeb::h_poly(k),
                                  {0, 2 * static_cast<std::int64_t>(k) * k + 6 * k + 3});
                          }});
    }
    return checks;
}

std::vector<Check> all_suites(const Bounds& b) {
    std::vector<Check> checks = typea_suite(b);
    for (auto* suite : {&typeb_suite, &bijection_suite, &arrays_suite}) {
        std::vector<Check> more = (*suite)(b);
        for (auto& c : more) checks.push_back(std::move(c));
    }
    return checks;
}

std::vector<CheckResult> run_checks(const std::vector<Check>& checks, int jobs) {
    std::vector<CheckResult> results(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            const std::size_t idx = next.fetch_add(1);
            if (idx >= checks.size()) return;
            const auto start = std::chrono::steady_clock::now();
            CheckResult& r = results[idx];
            r.name = checks[idx].name;
            try {
                r.pass = checks[idx].run(r.witness);
            } catch (const std::exception& e) {
                r.pass = false;
                r.witness = std::string("exception: ") + e.what();
            }
            r.millis = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    return results;
}

}  // namespace bdrop::verify
