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

#ifndef KLOO_VALUE_DISTRIBUTION_HPP
#define KLOO_VALUE_DISTRIBUTION_HPP

#include <array>
#include <map>

#include "kloo/char_sums.hpp"
#include "kloo/field.hpp"
#include "kloo/kloosterman.hpp"

namespace kloo {

// The counting layer behind Theorems 13 and 16: the cells C(eps, delta) and
// N(eps, delta) of Lemma 11/12 and the S_beta totals of Lemma 15.
struct CountGrid {
    int m = 0;
    std::array<std::array<long long, 2>, 2> C{};  // C[eps][delta]
    std::array<std::array<long long, 2>, 2> N{};  // N[eps][delta]
    std::array<long long, 2> sbeta_total{};       // sum over beta of #S_beta(eps)
};

inline void check_even(const FieldContext& F, const char* what) {
    if (F.m() % 2 != 0) throw OddDegree(std::string(what) + " covers even m only");
}

inline CountGrid count_grid_direct(const FieldContext& F, bool force = false) {
    check_even(F, "count_grid_direct");
    if (F.m() > 20 && !force) {
        throw FieldTooLarge("count_grid_direct is an O(q) scan, refused above m = 20");
    }
    CountGrid g;
    g.m = F.m();
    for (FieldElement c = 1; c < F.q(); ++c) {
        const FieldElement c3 = F.mul(F.square(c), c);
        const int e = F.tr1(c3);
        if (F.tr2(c) != 0) ++g.sbeta_total[e];
        if (c != 1) ++g.C[F.tr1(c)][e];
    }
    // N(eps, delta) = #{i = 1..(q-1)/3 - 1 : Tr(g^3i) = eps, Tr(g^9i) = delta}
    const FieldElement g3 = F.pow(F.generator(), 3);
    const FieldElement g9 = F.pow(F.generator(), 9);
    FieldElement t = 1, u = 1;
    const std::uint32_t top = (F.q() - 1) / 3 - 1;
    for (std::uint32_t i = 1; i <= top; ++i) {
        t = F.mul(t, g3);
        u = F.mul(u, g9);
        ++g.N[F.tr1(t)][F.tr1(u)];
    }
    return g;
}

// Per-beta counts #S_beta(eps) keyed by the (nonzero) value of Tr_2; Lemma 15
// says all three agree.
inline std::map<FieldElement, std::array<long long, 2>> sbeta_by_class(const FieldContext& F,
                                                                       bool force = false) {
    check_even(F, "sbeta_by_class");
    if (F.m() > 20 && !force) {
        throw FieldTooLarge("sbeta_by_class is an O(q) scan, refused above m = 20");
    }
    std::map<FieldElement, std::array<long long, 2>> out;
    for (FieldElement b = 1; b < F.q(); ++b) {
        const FieldElement t2 = F.tr2(b);
        if (t2 == 0) continue;
        ++out[t2][F.tr1(F.mul(F.square(b), b))];
    }
    return out;
}

inline long long exact_div(long long num, long long den, const char* what) {
    if (num % den != 0) throw NonIntegralCount(std::string(what) + " is not integral");
    return num / den;
}

// Lemma 12 plus the Theorem 16 proof display, consuming Lemma 10's closed
// forms. The S_beta display uses sums over F_q*, i.e. the full-field values
// minus chi(0) = 1.
inline CountGrid count_grid_closed(int m) {
    if (m % 2 != 0) throw OddDegree("count_grid_closed covers even m only");
    if (m < 4) throw DegreeOutOfRange("count_grid_closed requires m >= 4");
    const long long q = 1ll << m;
    const long long s3 = lemma10_closed(SumKind::X3, m);
    const long long s9 = lemma10_closed(SumKind::X9, m);
    const long long s31 = lemma10_closed(SumKind::X3PlusX, m);
    const long long s93 = lemma10_closed(SumKind::X9PlusX3, m);
    CountGrid g;
    g.m = m;
    for (int eps = 0; eps < 2; ++eps) {
        const long long se = eps == 0 ? 1 : -1;
        for (int delta = 0; delta < 2; ++delta) {
            const long long sd = delta == 0 ? 1 : -1;
            const long long h = (eps == 0 && delta == 0) ? 4 : 0;
            g.N[eps][delta] = exact_div(q + sd * s9 + se * s3 + se * sd * s93 - 4 * h, 12,
                                        "12 N(eps, delta)");
            g.C[eps][delta] =
                exact_div(q + sd * s3 + se * sd * s31 - 2 * h, 4, "4 #C(eps, delta)");
        }
        g.sbeta_total[eps] = exact_div(3 * (q + se * (s3 - s31)), 8, "8 sum #S_beta(eps)");
    }
    return g;
}

// Per-cell distinct-image counts of c -> c^4 + c^3 on C(eps, delta), computed
// directly and checked against #C - (3/4) N (Lemma 11).
inline std::array<std::array<long long, 2>, 2> lemma11_counts(const FieldContext& F,
                                                              bool force = false) {
    check_even(F, "lemma11_counts");
    if (F.m() > 20 && !force) {
        throw FieldTooLarge("lemma11_counts is an O(q) scan, refused above m = 20");
    }
    std::array<std::array<std::vector<bool>, 2>, 2> seen;
    for (auto& row : seen)
        for (auto& bm : row) bm.assign(F.q(), false);
    for (FieldElement c = 2; c < F.q(); ++c) {  // c in F_q* \ {1}
        const FieldElement c2 = F.square(c);
        const FieldElement c3 = F.mul(c2, c);
        seen[F.tr1(c)][F.tr1(c3)][F.mul(c2, c2) ^ c3] = true;
    }
    const CountGrid g = count_grid_direct(F, force);
    std::array<std::array<long long, 2>, 2> out{};
    for (int eps = 0; eps < 2; ++eps) {
        for (int delta = 0; delta < 2; ++delta) {
            long long direct = 0;
            for (std::uint32_t a = 0; a < F.q(); ++a) direct += seen[eps][delta][a];
            const long long formula =
                g.C[eps][delta] - exact_div(3 * g.N[eps][delta], 4, "(3/4) N(eps, delta)");
            if (direct != formula) {
                throw Error("Lemma 11 identity violated at cell (" + std::to_string(eps) + ", " +
                            std::to_string(delta) + ")");
            }
            out[eps][delta] = direct;
        }
    }
    return out;
}

struct DistTable {
    int m = 0;
    std::map<int, long long> counts;  // residue mod 24 -> N(k), keys {3,7,11,15,19,23}

    bool operator==(const DistTable& o) const { return counts == o.counts; }
};

enum class DistMode { Fast, Closed, Brute };

inline long long pow2(int e) {
    if (e < 0) throw NonIntegralCount("closed-form table entry with negative dyadic exponent");
    return 1ll << e;
}

// Theorem 13: N(7), N(19), N(11), N(23), keyed by m mod 24. Rows labelled
// "+-r" in the table cover both residues r and 24 - r.
inline std::map<int, long long> theorem13_closed(int m) {
    if (m % 2 != 0) throw OddDegree("Theorem 13 covers even m only");
    if (m < 4) throw DegreeOutOfRange("Theorem 13 table requires m >= 4");
    const long long base = 3 * pow2(m - 4);
    const int h = m / 2;
    const int r = m % 24;
    long long n7, n19, n11, n23;
    switch (r) {
        case 0:
            n7 = pow2(h - 3) - 1, n19 = pow2(h - 3), n11 = -pow2(h - 3), n23 = -pow2(h - 3);
            break;
        case 6:
        case 18:
            n7 = -pow2(h - 2) - 1, n19 = 0, n11 = pow2(h - 2), n23 = 0;
            break;
        case 12:
            n7 = 3 * pow2(h - 3) - 1, n19 = -pow2(h - 3), n11 = -3 * pow2(h - 3),
            n23 = pow2(h - 3);
            break;
        case 8:
        case 16:
            n7 = -pow2(h - 2) - 1, n19 = pow2(h - 1), n11 = -pow2(h - 1), n23 = pow2(h - 2);
            break;
        case 2:
        case 10:
        case 14:
        case 22:
            n7 = pow2(h - 3) - 1, n19 = -3 * pow2(h - 3), n11 = 5 * pow2(h - 3),
            n23 = -3 * pow2(h - 3);
            break;
        case 4:
        case 20:
            n7 = -1, n19 = pow2(h - 2), n11 = -3 * pow2(h - 2), n23 = pow2(h - 1);
            break;
        default:
            throw Error("unreachable residue class");
    }
    return {{7, base + n7}, {19, base + n19}, {11, base + n11}, {23, base + n23}};
}

// Theorem 16: N(3) and N(15), keyed by m mod 8.
inline std::map<int, long long> theorem16_closed(int m) {
    if (m % 2 != 0) throw OddDegree("Theorem 16 covers even m only");
    if (m < 4) throw DegreeOutOfRange("Theorem 16 table requires m >= 4");
    const long long base = pow2(m - 3);
    switch (m % 8) {
        case 0: return {{3, base}, {15, base}};
        case 4: return {{3, base + pow2(m / 2 - 1)}, {15, base - pow2(m / 2 - 1)}};
        default: return {{3, base - pow2(m / 2 - 2)}, {15, base + pow2(m / 2 - 2)}};
    }
}

inline DistTable distribution_closed(int m) {
    DistTable d;
    d.m = m;
    for (const auto& [k, v] : theorem16_closed(m)) d.counts[k] = v;
    for (const auto& [k, v] : theorem13_closed(m)) d.counts[k] = v;
    return d;
}

// The mod-24 value distribution, by three routes that must agree: FAST
// tallies the Theorem 9 classifier, CLOSED evaluates the Theorem 13/16
// tables, BRUTE tallies K(a) mod 24 directly.
inline DistTable distribution(const FieldContext& F, DistMode mode, bool force = false) {
    check_even(F, "distribution");
    if (mode == DistMode::Closed) return distribution_closed(F.m());
    DistTable d;
    d.m = F.m();
    for (int k : {3, 7, 11, 15, 19, 23}) d.counts[k] = 0;
    if (mode == DistMode::Fast) {
        for (FieldElement a = 1; a < F.q(); ++a) ++d.counts[classify24(F, a, force).mod24];
    } else {
        if (F.m() > 14 && !force) {
            throw FieldTooLarge("brute distribution is O(q^2) work, refused above m = 14");
        }
        for (FieldElement a = 1; a < F.q(); ++a) {
            ++d.counts[static_cast<int>(((kloosterman_direct(F, a, force) % 24) + 24) % 24)];
        }
    }
    return d;
}

}  // namespace kloo

#endif  // KLOO_VALUE_DISTRIBUTION_HPP
