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

#ifndef KLOO_EQ_SOLVER_HPP
#define KLOO_EQ_SOLVER_HPP

#include <numeric>
#include <optional>
#include <vector>

#include "kloo/field.hpp"

namespace kloo {

enum class EqCase { NotAPower, PowerTraceZero, PowerTraceNonzero };

inline const char* to_string(EqCase c) {
    switch (c) {
        case EqCase::NotAPower: return "not_a_power";
        case EqCase::PowerTraceZero: return "power_trace_zero";
        default: return "power_trace_nonzero";
    }
}

// Theorem 6 verdict for x^(2^k) + x^(2^k - 1) = a: the solution count and,
// when a is a (2^k - 1)-th power, a representative root b.
struct SolutionReport {
    int k = 0;
    FieldElement a = 0;
    int s = 0;  // gcd(k, m)
    EqCase tag = EqCase::NotAPower;
    unsigned long long count = 0;
    std::optional<FieldElement> root_b;
};

inline int check_k(int k) {
    // 2^k - 1 must stay in exact integer range before reduction mod q-1.
    if (k < 1 || k > 62) throw DegreeOutOfRange("k must be in [1, 62]");
    return k;
}

inline SolutionReport count_solutions(const FieldContext& F, int k, FieldElement a,
                                      bool force = false) {
    if (a == 0) throw ZeroInput("count_solutions requires a != 0");
    check_k(k);
    SolutionReport r;
    r.k = k;
    r.a = a;
    r.s = std::gcd(k, F.m());
    const std::uint64_t n = F.q() - 1;
    const std::uint64_t ds = (1ull << r.s) - 1;  // gcd(2^k - 1, q - 1)
    if (F.pow(a, static_cast<long long>(n / ds)) != 1) {
        r.tag = EqCase::NotAPower;
        r.count = 1;
        return r;
    }
    const std::uint64_t e = ((1ull << k) - 1) % n;
    const FieldElement b = F.solve_power(a, e, force);
    r.root_b = b;
    // Tr_s(b) = 0 is root-independent: the roots differ by F_{2^s}* factors
    // and Tr_s is linear over that subfield.
    if (F.trace(b, r.s) == 0) {
        r.tag = EqCase::PowerTraceZero;
        r.count = 1ull << r.s;
    } else {
        r.tag = EqCase::PowerTraceNonzero;
        r.count = 0;
    }
    return r;
}

// The exact solution set by full-field scan.
inline std::vector<FieldElement> enumerate_solutions(const FieldContext& F, int k, FieldElement a,
                                                     bool force = false) {
    if (a == 0) throw ZeroInput("enumerate_solutions requires a != 0");
    check_k(k);
    if (F.m() > FieldContext::kTableCapDegree && !force) {
        throw FieldTooLarge("enumerate_solutions is an O(q) scan, refused above m = 24");
    }
    const std::uint64_t e = ((1ull << k) - 1) % (F.q() - 1ull);
    std::vector<FieldElement> sols;
    for (FieldElement x = 1; x < F.q(); ++x) {
        // x^(2^k) + x^(2^k - 1) = x^(2^k - 1) (x + 1); x = 0 never hits a != 0
        if (F.mul(F.pow(x, static_cast<long long>(e)), x ^ 1u) == a) sols.push_back(x);
    }
    return sols;
}

// Some c with c^4 + c^3 = a, or nullopt exactly when a = b^3 with
// Tr_2(b) != 0 (Theorem 9 case 1). Even m only.
inline std::optional<FieldElement> quartic_preimage(const FieldContext& F, FieldElement a,
                                                    bool force = false) {
    if (a == 0) throw ZeroInput("quartic_preimage requires a != 0");
    if (F.m() % 2 != 0) throw OddDegree("quartic_preimage covers even m only");
    const auto& t = F.tables(force);
    const FieldElement c = t.quartic_pre[a];
    if (c == FieldContext::kNoPreimage) return std::nullopt;
    return c;
}

}  // namespace kloo

#endif  // KLOO_EQ_SOLVER_HPP
