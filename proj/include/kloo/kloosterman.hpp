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

#ifndef KLOO_KLOOSTERMAN_HPP
#define KLOO_KLOOSTERMAN_HPP

#include <map>
#include <optional>

#include "kloo/field.hpp"

namespace kloo {

// K(a) = sum over x in F_q* of (-1)^Tr(x + a/x), as an exact integer.
inline long long kloosterman_direct(const FieldContext& F, FieldElement a, bool force = false) {
    if (a == 0) throw ZeroInput("K(a) requires a != 0");
    if (F.m() > FieldContext::kTableCapDegree && !force) {
        throw FieldTooLarge("kloosterman_direct is an O(q) loop, refused above m = 24");
    }
    const auto& t = F.tables(force);
    const std::uint32_t n = F.q() - 1;
    const std::uint32_t la = t.log[a];
    long long ones = 0;
    for (std::uint32_t x = 1; x <= n; ++x) {
        // a * x^-1 through the log/exp tables
        const FieldElement ax = t.exp[(la + n - t.log[x]) % n];
        ones += F.tr1(x ^ ax);
    }
    return static_cast<long long>(n) - 2 * ones;
}

// Proposition 1: K(a) mod 8 is decided by Tr(a) alone.
inline int congruence_mod8(const FieldContext& F, FieldElement a) {
    if (a == 0) throw ZeroInput("congruence_mod8 requires a != 0");
    return F.tr1(a) == 1 ? 3 : 7;
}

// K(a) mod 3. For even m the residue is always determined (Proposition 2 and
// Theorem 4); for odd m only divisibility by 3 is known, so a nonzero residue
// comes back as nullopt.
inline std::optional<int> congruence_mod3(const FieldContext& F, FieldElement a,
                                          bool force = false) {
    if (a == 0) throw ZeroInput("congruence_mod3 requires a != 0");
    if (F.m() % 2 == 0) {
        const auto& t = F.tables(force);
        const FieldElement b = t.cube_pre[a];
        if (b != FieldContext::kNoPreimage && F.tr2(b) != 0) return 0;
        const FieldElement c = t.quartic_pre[a];
        return F.tr1(c) == 0 ? 1 : 2;
    }
    // m odd: the cube root is unique since gcd(3, q-1) = 1.
    const std::uint64_t e = mod_inverse(3, F.q() - 1);
    const FieldElement root = F.pow(a, static_cast<long long>(e));
    if (F.tr1(root) == 0) return 0;
    return std::nullopt;
}

enum class CaseTag { CubeNonzeroTr2, QuarticImage };

inline const char* to_string(CaseTag t) {
    return t == CaseTag::CubeNonzeroTr2 ? "cube_nonzero_tr2" : "quartic_image";
}

// The mod-24 verdict for one a, with the witness that decides it.
struct Classification {
    FieldElement a = 0;
    CaseTag tag = CaseTag::QuarticImage;
    FieldElement witness = 0;        // b with b^3 = a, or c with c^4 + c^3 = a
    std::optional<int> eps;          // Tr(c), quartic case only
    std::optional<int> delta;        // Tr(c^3), quartic case only
    int tr_a = 0;
    int mod8 = 0;
    int mod3 = 0;
    int mod24 = 0;
};

// Theorem 9: the complete evaluation of K(a) mod 24 for even m, without
// computing K(a).
inline Classification classify24(const FieldContext& F, FieldElement a, bool force = false) {
    if (a == 0) throw ZeroInput("classify24 requires a != 0");
    if (F.m() % 2 != 0) throw OddDegree("classify24 covers even m only");
    const auto& t = F.tables(force);

    Classification r;
    r.a = a;
    r.tr_a = F.tr1(a);
    r.mod8 = r.tr_a == 1 ? 3 : 7;

    const FieldElement b = t.cube_pre[a];
    if (b != FieldContext::kNoPreimage && F.tr2(b) != 0) {
        r.tag = CaseTag::CubeNonzeroTr2;
        r.witness = b;
        r.mod3 = 0;
        r.mod24 = r.tr_a == 1 ? 3 : 15;
        return r;
    }
    // Otherwise a = c^4 + c^3 is guaranteed (Theorem 6 with k = 2).
    const FieldElement c = t.quartic_pre[a];
    r.tag = CaseTag::QuarticImage;
    r.witness = c;
    const int eps = F.tr1(c);
    const int delta = F.tr1(F.mul(F.square(c), c));
    r.eps = eps;
    r.delta = delta;
    r.mod3 = eps == 0 ? 1 : 2;
    static constexpr int kTable[2][2] = {{7, 19}, {11, 23}};
    r.mod24 = kTable[eps][delta];
    return r;
}

// Exact value-multiplicity table of K over F_q*.
inline std::map<long long, long long> spectrum(const FieldContext& F, bool force = false) {
    if (F.m() > 14 && !force) {
        throw FieldTooLarge("spectrum is O(q^2) work, refused above m = 14");
    }
    std::map<long long, long long> counts;
    for (FieldElement a = 1; a < F.q(); ++a) {
        ++counts[kloosterman_direct(F, a, force)];
    }
    return counts;
}

}  // namespace kloo

#endif  // KLOO_KLOOSTERMAN_HPP
