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

#ifndef KLOO_CHAR_SUMS_HPP
#define KLOO_CHAR_SUMS_HPP

#include <array>
#include <vector>

#include "kloo/field.hpp"

namespace kloo {

struct SparseTerm {
    std::uint64_t exponent = 0;
    FieldElement coeff = 0;
};

// Sparse polynomial with positive, strictly increasing exponents and nonzero
// coefficients.
using SparsePoly = std::vector<SparseTerm>;

inline void validate_poly(const SparsePoly& f) {
    std::uint64_t last = 0;
    for (const auto& t : f) {
        if (t.exponent == 0 || t.exponent <= last) {
            throw Error("sparse polynomial exponents must be positive and strictly increasing");
        }
        if (t.coeff == 0) throw Error("sparse polynomial coefficients must be nonzero");
        last = t.exponent;
    }
}

// Full-field convention: sum over all of F_q, x = 0 contributing chi(0) = 1.
inline long long char_sum(const FieldContext& F, const SparsePoly& f, bool force = false) {
    validate_poly(f);
    if (F.m() > FieldContext::kTableCapDegree && !force) {
        throw FieldTooLarge("char_sum is an O(q) scan, refused above m = 24");
    }
    long long acc = 1;  // x = 0
    for (FieldElement x = 1; x < F.q(); ++x) {
        FieldElement v = 0;
        for (const auto& t : f) {
            v ^= F.mul(t.coeff, F.pow(x, static_cast<long long>(t.exponent % (F.q() - 1ull))));
        }
        acc += F.chi(v);
    }
    return acc;
}

enum class SumKind { X3, X9, X3PlusX, X9PlusX3 };

inline const char* to_string(SumKind k) {
    switch (k) {
        case SumKind::X3: return "x3";
        case SumKind::X9: return "x9";
        case SumKind::X3PlusX: return "x3_plus_x";
        default: return "x9_plus_x3";
    }
}

inline SparsePoly sum_kind_poly(SumKind k) {
    switch (k) {
        case SumKind::X3: return {{3, 1}};
        case SumKind::X9: return {{9, 1}};
        case SumKind::X3PlusX: return {{1, 1}, {3, 1}};
        default: return {{3, 1}, {9, 1}};
    }
}

// Lemma 10's closed forms with sqrt(q) = 2^(m/2) exact. Even m only.
inline long long lemma10_closed(SumKind kind, int m) {
    if (m < 2 || m % 2 != 0) throw OddDegree("Lemma 10 closed forms require even m >= 2");
    const long long sqrtq = 1ll << (m / 2);
    const long long sign = (m / 2) % 2 == 0 ? 1 : -1;  // (-1)^(m/2)
    switch (kind) {
        case SumKind::X3:
            return -sign * 2 * sqrtq;
        case SumKind::X9:
            return m % 3 == 0 ? -sign * 8 * sqrtq : -sign * 2 * sqrtq;
        case SumKind::X3PlusX:
            switch (m % 8) {
                case 0: return -2 * sqrtq;
                case 4: return 2 * sqrtq;
                default: return 0;  // m = 2, 6 mod 8
            }
        default:  // X9PlusX3
            switch (m % 8) {
                case 0: return -8 * sqrtq;
                case 4: return 4 * sqrtq;
                default: return 2 * sqrtq;
            }
    }
}

// Numerator of the zeta function of y^2 + y = x^9 + x^3 (genus 4, degree 8).
struct LPolynomial {
    std::array<long long, 9> coeffs{};  // a_0 .. a_8
};

// Newton-style recursion i a_i = sum_{j<i} S_{i-j} a_j for i = 1..4, then the
// functional equation a_{8-i} = 2^(4-i) a_i for the top half. The S_r are the
// full-field sums sum_{x in F_{2^r}} chi(x^9 + x^3); S_1 = 2 pins the sign
// convention.
inline LPolynomial lpoly_build(const std::array<long long, 4>& power_sums) {
    LPolynomial L;
    L.coeffs[0] = 1;
    for (int i = 1; i <= 4; ++i) {
        long long num = 0;
        for (int j = 0; j < i; ++j) num += power_sums[i - j - 1] * L.coeffs[j];
        if (num % i != 0) {
            throw NonIntegralCoefficient("power sums incompatible with an integral L-polynomial");
        }
        L.coeffs[i] = num / i;
    }
    for (int i = 0; i <= 3; ++i) L.coeffs[8 - i] = (1ll << (4 - i)) * L.coeffs[i];
    return L;
}

// The S_r predicted by L through t L'(t) / L(t) = sum_{r>=1} S_r t^r, as an
// exact integer recurrence.
inline long long lpoly_power_sum(const LPolynomial& L, int r) {
    if (r < 1 || r > 16) throw DegreeOutOfRange("power sum order must be in [1, 16]");
    std::vector<long long> S(r + 1, 0);
    for (int n = 1; n <= r; ++n) {
        long long v = n <= 8 ? static_cast<long long>(n) * L.coeffs[n] : 0;
        for (int j = 1; j < n && j <= 8; ++j) v -= L.coeffs[j] * S[n - j];
        S[n] = v;
    }
    return S[r];
}

// Full-field sum of chi(x^9 + x^3) over GF(2^r). r = 1 is the two-point
// field, where the absolute trace is the identity; r >= 2 goes through a
// regular context.
inline long long brute_power_sum_x9_x3(int r) {
    if (r == 1) {
        long long acc = 0;
        for (int x = 0; x <= 1; ++x) {
            const int v = (x ^ x) & 1;  // x^9 + x^3 = 2x^3 = 0 over F_2
            acc += v == 0 ? 1 : -1;
        }
        return acc;
    }
    const FieldContext F(r);
    return char_sum(F, sum_kind_poly(SumKind::X9PlusX3));
}

inline std::array<long long, 4> brute_power_sums_x9_x3() {
    return {brute_power_sum_x9_x3(1), brute_power_sum_x9_x3(2), brute_power_sum_x9_x3(3),
            brute_power_sum_x9_x3(4)};
}

}  // namespace kloo

#endif  // KLOO_CHAR_SUMS_HPP
