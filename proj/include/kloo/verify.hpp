/*
   Copyright 2026 the kloo authors

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

#ifndef KLOO_VERIFY_HPP
#define KLOO_VERIFY_HPP

#include <string>
#include <vector>

#include "kloo/cubic_census.hpp"
#include "kloo/eq_solver.hpp"
#include "kloo/field.hpp"
#include "kloo/kloosterman.hpp"
#include "kloo/value_distribution.hpp"

namespace kloo::verify {

struct CheckResult {
    std::string suite;
    int m = 0;
    bool pass = true;
    std::string detail;  // first counterexample on failure
};

inline CheckResult fail(std::string suite, int m, std::string detail) {
    return {std::move(suite), m, false, std::move(detail)};
}

inline CheckResult ok(std::string suite, int m) { return {std::move(suite), m, true, ""}; }

// Context sanity: modulus irreducibility, generator order, trace balance,
// character orthogonality.
inline CheckResult check_field(const FieldContext& F) {
    const int m = F.m();
    if (!poly2::is_irreducible(F.modulus())) return fail("field", m, "modulus reducible");
    const std::uint64_t n = F.q() - 1;
    if (F.pow(F.generator(), static_cast<long long>(n)) != 1) {
        return fail("field", m, "generator^(q-1) != 1");
    }
    for (std::uint64_t p : F.order_factors()) {
        if (F.pow(F.generator(), static_cast<long long>(n / p)) == 1) {
            return fail("field", m, "generator has non-full order");
        }
    }
    long long zeros = 0, chi_sum = 0;
    for (FieldElement x = 0; x < F.q(); ++x) {
        zeros += F.tr1(x) == 0;
        chi_sum += F.chi(x);
    }
    if (zeros != F.q() / 2) return fail("field", m, "trace is not balanced");
    if (chi_sum != 0) return fail("field", m, "character orthogonality fails");
    return ok("field", m);
}

inline CheckResult check_lemma10(const FieldContext& F) {
    for (SumKind k : {SumKind::X3, SumKind::X9, SumKind::X3PlusX, SumKind::X9PlusX3}) {
        const long long brute = char_sum(F, sum_kind_poly(k));
        const long long closed = lemma10_closed(k, F.m());
        if (brute != closed) {
            return fail("lemma10", F.m(),
                        std::string(to_string(k)) + ": brute " + std::to_string(brute) +
                            " != closed " + std::to_string(closed));
        }
    }
    return ok("lemma10", F.m());
}

inline CheckResult check_thm6(const FieldContext& F, bool force = false) {
    for (int k = 1; k <= 4; ++k) {
        long long total = 0;
        for (FieldElement a = 1; a < F.q(); ++a) {
            const auto rep = count_solutions(F, k, a, force);
            const auto sols = enumerate_solutions(F, k, a, force);
            if (sols.size() != rep.count) {
                return fail("thm6", F.m(),
                            "k=" + std::to_string(k) + " a=" + F.element_hex(a) + ": predicted " +
                                std::to_string(rep.count) + ", enumerated " +
                                std::to_string(sols.size()));
            }
            total += static_cast<long long>(rep.count);
        }
        if (total != static_cast<long long>(F.q()) - 2) {
            return fail("thm6", F.m(),
                        "k=" + std::to_string(k) + ": total count " + std::to_string(total) +
                            " != q-2");
        }
    }
    return ok("thm6", F.m());
}

// 3 P_3(1, c) = q + 1 + chi(c) K(c^4 + c^3) plus the mod-3 trichotomy for
// every c; the O(q^2) double-scan point count is cross-checked for every c
// up to m = 8 and on a fixed sample above that.
inline CheckResult check_thm4(const FieldContext& F, bool force = false) {
    const long long q = F.q();
    int scans_left = F.m() <= 8 ? static_cast<int>(q) : 8;
    for (FieldElement c = 2; c < F.q(); ++c) {
        const long long lhs = 3 * count_irreducible_cubics(F, 1, c, force);
        const FieldElement c2 = F.square(c);
        const FieldElement a = F.mul(c2, c2) ^ F.mul(c2, c);
        const long long K = kloosterman_direct(F, a, force);
        const long long rhs = q + 1 + F.chi(c) * K;
        if (lhs != rhs) {
            return fail("thm4", F.m(),
                        "c=" + F.element_hex(c) + ": 3*P3 = " + std::to_string(lhs) +
                            " != q+1+chi(c)K = " + std::to_string(rhs));
        }
        if (scans_left > 0) {
            --scans_left;
            const long long pts = curve_point_count(F, c, force);
            if (pts != rhs) {
                return fail("thm4", F.m(),
                            "c=" + F.element_hex(c) + ": point count " + std::to_string(pts) +
                                " != " + std::to_string(rhs));
            }
        }
        const int mod3 = static_cast<int>(((K % 3) + 3) % 3);
        const int expected = F.m() % 2 != 0 ? 0 : (F.tr1(c) == 0 ? 1 : 2);
        if (mod3 != expected) {
            return fail("thm4", F.m(),
                        "c=" + F.element_hex(c) + ": K mod 3 = " + std::to_string(mod3) +
                            ", expected " + std::to_string(expected));
        }
    }
    return ok("thm4", F.m());
}

inline CheckResult check_thm9(const FieldContext& F, bool force = false) {
    for (FieldElement a = 1; a < F.q(); ++a) {
        const int predicted = classify24(F, a, force).mod24;
        const int actual =
            static_cast<int>(((kloosterman_direct(F, a, force) % 24) + 24) % 24);
        if (predicted != actual) {
            return fail("thm9", F.m(),
                        "a=" + F.element_hex(a) + ": classifier says " +
                            std::to_string(predicted) + ", K(a) mod 24 = " +
                            std::to_string(actual));
        }
    }
    return ok("thm9", F.m());
}

inline CheckResult check_lemma12(const FieldContext& F, bool force = false) {
    const CountGrid direct = count_grid_direct(F, force);
    const CountGrid closed = count_grid_closed(F.m());
    for (int e = 0; e < 2; ++e) {
        for (int d = 0; d < 2; ++d) {
            if (direct.C[e][d] != closed.C[e][d] || direct.N[e][d] != closed.N[e][d]) {
                return fail("lemma12", F.m(),
                            "grid cell (" + std::to_string(e) + "," + std::to_string(d) +
                                ") direct/closed mismatch");
            }
        }
        if (direct.sbeta_total[e] != closed.sbeta_total[e]) {
            return fail("lemma12", F.m(), "S_beta total mismatch at eps=" + std::to_string(e));
        }
    }
    const auto by_class = sbeta_by_class(F, force);
    if (by_class.size() != 3) return fail("lemma12", F.m(), "Tr_2 image is not F_4*");
    for (const auto& [beta, cnt] : by_class) {
        for (int e = 0; e < 2; ++e) {
            if (3 * cnt[e] != direct.sbeta_total[e]) {
                return fail("lemma12", F.m(),
                            "#S_beta(eps) unequal across beta=" + F.element_hex(beta));
            }
        }
    }
    return ok("lemma12", F.m());
}

inline CheckResult check_table(const FieldContext& F, const char* suite,
                               std::initializer_list<int> residues, bool force = false) {
    const DistTable closed = distribution_closed(F.m());
    const DistTable fast = distribution(F, DistMode::Fast, force);
    for (int k : residues) {
        if (closed.counts.at(k) != fast.counts.at(k)) {
            return fail(suite, F.m(),
                        "N(" + std::to_string(k) + "): closed " +
                            std::to_string(closed.counts.at(k)) + " != fast " +
                            std::to_string(fast.counts.at(k)));
        }
    }
    if (F.m() <= 14) {
        const DistTable brute = distribution(F, DistMode::Brute, force);
        for (int k : residues) {
            if (closed.counts.at(k) != brute.counts.at(k)) {
                return fail(suite, F.m(),
                            "N(" + std::to_string(k) + "): closed " +
                                std::to_string(closed.counts.at(k)) + " != brute " +
                                std::to_string(brute.counts.at(k)));
            }
        }
    }
    return ok(suite, F.m());
}

inline const std::vector<std::string>& suite_order() {
    static const std::vector<std::string> order = {"field",  "lemma10", "thm6",  "thm4",
                                                   "thm9",   "lemma12", "thm13", "thm16"};
    return order;
}

// Runs one named suite over every applicable m in [m_min, m_max].
inline std::vector<CheckResult> run_suite(const std::string& suite, int m_min, int m_max,
                                          bool force = false) {
    std::vector<CheckResult> out;
    for (int m = m_min; m <= m_max; ++m) {
        const bool even = m % 2 == 0;
        if (suite == "field") {
            FieldContext F(m);
            out.push_back(check_field(F));
        } else if (suite == "lemma10" && even) {
            FieldContext F(m);
            out.push_back(check_lemma10(F));
        } else if (suite == "thm6") {
            FieldContext F(m);
            out.push_back(check_thm6(F, force));
        } else if (suite == "thm4" && m >= 3) {
            FieldContext F(m);
            out.push_back(check_thm4(F, force));
        } else if (suite == "thm9" && even) {
            FieldContext F(m);
            out.push_back(check_thm9(F, force));
        } else if (suite == "lemma12" && even && m >= 4) {
            FieldContext F(m);
            out.push_back(check_lemma12(F, force));
        } else if (suite == "thm13" && even && m >= 4) {
            FieldContext F(m);
            out.push_back(check_table(F, "thm13", {7, 11, 19, 23}, force));
        } else if (suite == "thm16" && even && m >= 4) {
            FieldContext F(m);
            out.push_back(check_table(F, "thm16", {3, 15}, force));
        }
    }
    return out;
}

inline std::vector<CheckResult> run_suites(const std::vector<std::string>& suites, int m_min,
                                           int m_max, bool force = false) {
    std::vector<CheckResult> out;
    for (const auto& s : suites) {
        auto part = run_suite(s, m_min, m_max, force);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

}  // namespace kloo::verify

#endif  // KLOO_VERIFY_HPP
