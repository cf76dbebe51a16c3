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

#ifndef KLOO_FIELD_HPP
#define KLOO_FIELD_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "kloo/errors.hpp"

namespace kloo {

// Elements of GF(2^m) in the polynomial basis. Bit i is the coefficient of
// x^i, so the zero vector is 0 and (1,0,...,0) is the encoding 1.
using FieldElement = std::uint32_t;

// Polynomials over GF(2) as bit masks (bit i = coefficient of x^i). These
// helpers do plain polynomial arithmetic, independent of any field context;
// they back modulus validation and the irreducible sieve.
namespace poly2 {

inline int degree(std::uint64_t f) {
    return f == 0 ? -1 : 63 - std::countl_zero(f);
}

// Carry-less product. Caller keeps deg(a) + deg(b) < 64.
inline std::uint64_t clmul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    while (a != 0) {
        r ^= b << std::countr_zero(a);
        a &= a - 1;
    }
    return r;
}

inline std::uint64_t mod(std::uint64_t a, std::uint64_t f) {
    const int df = degree(f);
    for (int d = degree(a); d >= df; d = degree(a)) {
        a ^= f << (d - df);
    }
    return a;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
    while (b != 0) {
        a = mod(a, b);
        std::swap(a, b);
    }
    return a;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t f) {
    return mod(clmul(a, b), f);
}

inline std::vector<int> prime_factors_of(int n) {
    std::vector<int> ps;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) ps.push_back(n);
    return ps;
}

// Rabin's test: f of degree n is irreducible iff x^(2^n) == x (mod f) and
// gcd(x^(2^(n/p)) - x, f) = 1 for every prime p | n.
inline bool is_irreducible(std::uint64_t f) {
    const int n = degree(f);
    if (n <= 0) return false;
    if (n == 1) return true;
    if ((f & 1) == 0) return false;  // divisible by x
    const auto primes = prime_factors_of(n);
    std::uint64_t t = 2;  // the polynomial x
    for (int i = 1; i <= n; ++i) {
        t = mulmod(t, t, f);
        for (int p : primes) {
            if (i == n / p && gcd(t ^ 2u, f) != 1) return false;
        }
    }
    return t == 2;
}

inline std::uint64_t smallest_irreducible(int m) {
    for (std::uint64_t f = (1ull << m) | 1u; f < (1ull << (m + 1)); f += 2) {
        if (is_irreducible(f)) return f;
    }
    return 0;  // unreachable: irreducibles exist in every degree
}

inline std::uint64_t next_irreducible(int m, std::uint64_t after) {
    for (std::uint64_t f = (after | 1u) + 2; f < (1ull << (m + 1)); f += 2) {
        if (is_irreducible(f)) return f;
    }
    return 0;
}

}  // namespace poly2

// Inverse of a modulo n (n >= 1), requires gcd(a, n) = 1.
inline std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t n) {
    if (n == 1) return 0;
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(n);
    std::int64_t newr = static_cast<std::int64_t>(a % n);
    while (newr != 0) {
        const std::int64_t qq = r / newr;
        t = std::exchange(newt, t - qq * newt);
        r = std::exchange(newr, r - qq * newr);
    }
    if (r != 1) throw Error("mod_inverse: arguments not coprime");
    return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(n) : t);
}

// Immutable description of GF(2^m): degree, irreducible modulus, a fixed
// primitive element, and lazily built lookup tables. All arithmetic is pure;
// the tables are built once under a single writer and shared afterwards.
class FieldContext {
   public:
    static constexpr int kMaxDegree = 30;
    static constexpr int kTableCapDegree = 24;  // O(q)-memory tables refuse above this
    static constexpr FieldElement kNoPreimage = 0xffffffffu;

    struct Tables {
        std::vector<FieldElement> exp;          // exp[i] = generator^i, i in [0, q-1)
        std::vector<std::uint32_t> log;         // log[x] for x != 0
        std::vector<FieldElement> inv;          // inv[x] for x != 0
        std::vector<FieldElement> cube_pre;     // smallest y with y^3 = x, kNoPreimage if none
        std::vector<FieldElement> quartic_pre;  // smallest y with y^4 + y^3 = x
    };

    explicit FieldContext(int m, std::optional<std::uint64_t> modulus = std::nullopt) : m_(m) {
        if (m < 2 || m > kMaxDegree) {
            throw DegreeOutOfRange("extension degree must be in [2, 30], got " + std::to_string(m));
        }
        q_ = 1u << m;
        if (modulus.has_value()) {
            if (poly2::degree(*modulus) != m) {
                throw DegreeOutOfRange("modulus must have degree " + std::to_string(m));
            }
            if (!poly2::is_irreducible(*modulus)) {
                throw NotIrreducible("modulus is reducible over GF(2)");
            }
            modulus_ = *modulus;
        } else {
            modulus_ = poly2::smallest_irreducible(m);
        }

        std::uint64_t n = q_ - 1;
        for (std::uint64_t p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                order_factors_.push_back(p);
                while (n % p == 0) n /= p;
            }
        }
        if (n > 1) order_factors_.push_back(n);

        generator_ = find_generator();

        trace_mask_ = 0;
        for (int i = 0; i < m_; ++i) {
            if (trace_slow(1u << i) & 1u) trace_mask_ |= 1u << i;
        }
        if (m_ % 2 == 0) {
            tr2_basis_.resize(m_);
            for (int i = 0; i < m_; ++i) tr2_basis_[i] = trace_raw(1u << i, 2);
        }
    }

    FieldContext(const FieldContext&) = delete;
    FieldContext& operator=(const FieldContext&) = delete;

    int m() const { return m_; }
    std::uint32_t q() const { return q_; }
    std::uint64_t modulus() const { return modulus_; }
    FieldElement generator() const { return generator_; }
    const std::vector<std::uint64_t>& order_factors() const { return order_factors_; }

    FieldElement add(FieldElement a, FieldElement b) const { return a ^ b; }

    FieldElement mul(FieldElement a, FieldElement b) const {
        std::uint64_t r = 0;
        std::uint64_t bb = b;
        while (a != 0) {
            r ^= bb << std::countr_zero(a);
            a &= a - 1;
        }
        for (int d = 2 * m_ - 2; d >= m_; --d) {
            if ((r >> d) & 1u) r ^= modulus_ << (d - m_);
        }
        return static_cast<FieldElement>(r);
    }

    FieldElement square(FieldElement a) const { return mul(a, a); }

    FieldElement pow(FieldElement a, long long e) const {
        if (a == 0) {
            if (e > 0) return 0;
            if (e == 0) return 1;
            throw DivisionByZero("negative power of zero");
        }
        const long long n = q_ - 1;
        long long r = e % n;
        if (r < 0) r += n;
        FieldElement acc = 1;
        FieldElement base = a;
        while (r != 0) {
            if (r & 1) acc = mul(acc, base);
            base = square(base);
            r >>= 1;
        }
        return acc;
    }

    FieldElement inv(FieldElement a) const {
        if (a == 0) throw DivisionByZero("inverse of zero");
        return pow(a, static_cast<long long>(q_) - 2);
    }

    // Tr_s: F_q -> F_{2^s}, requires s | m.
    FieldElement trace(FieldElement x, int s = 1) const {
        if (s < 1 || m_ % s != 0) {
            throw NonDivisorSubfieldDegree("subfield degree " + std::to_string(s) +
                                           " does not divide " + std::to_string(m_));
        }
        if (s == 1) return tr1(x);
        return trace_raw(x, s);
    }

    // Absolute trace as a bit; O(1) via the precomputed linear-form mask.
    int tr1(FieldElement x) const { return std::popcount(x & trace_mask_) & 1; }

    int chi(FieldElement x) const { return tr1(x) == 0 ? 1 : -1; }

    // Tr_2 for even m; O(m) XOR of precomputed basis traces.
    FieldElement tr2(FieldElement x) const {
        FieldElement y = 0;
        while (x != 0) {
            const int i = std::countr_zero(x);
            y ^= tr2_basis_[i];
            x &= x - 1;
        }
        return y;
    }

    // Some b with b^d = a for d | q-1, or nullopt when a is not a d-th power.
    // Exponentiation when the cofactor is coprime to d, discrete-log table
    // otherwise.
    std::optional<FieldElement> power_residue_root(FieldElement a, std::uint64_t d,
                                                   bool force = false) const {
        if (a == 0) throw ZeroInput("power_residue_root of zero");
        const std::uint64_t n = q_ - 1;
        if (d == 0 || n % d != 0) {
            throw NonDivisorOrder("order " + std::to_string(d) + " does not divide q-1");
        }
        if (pow(a, static_cast<long long>(n / d)) != 1) return std::nullopt;
        return solve_power(a, d, force);
    }

    // Some b with b^e = a; requires a != 0 and a^( (q-1)/gcd(e,q-1) ) = 1.
    FieldElement solve_power(FieldElement a, std::uint64_t e, bool force = false) const {
        const std::uint64_t n = q_ - 1;
        const std::uint64_t g = std::gcd(e, n);
        if (std::gcd(e, n / g) == 1) {
            const std::uint64_t w = mod_inverse(e, n / g);
            return pow(a, static_cast<long long>(w));
        }
        const Tables& t = tables(force);
        const std::uint64_t j = t.log[a];
        const std::uint64_t ep = (e % n) / g;
        const std::uint64_t nn = n / g;
        const std::uint64_t sol = (j / g) % nn * mod_inverse(ep, nn) % nn;
        return t.exp[sol];
    }

    const Tables& tables(bool force = false) const {
        if (m_ > kTableCapDegree && !force) {
            throw FieldTooLarge("lookup tables refused above m = 24 (use force to override)");
        }
        std::call_once(tables_once_, [this] { build_tables(); });
        return *tables_;
    }

    std::string element_hex(FieldElement x) const {
        char buf[16];
        std::snprintf(buf, sizeof buf, "%x", x);
        return buf;
    }

    FieldElement parse_element(const std::string& hex) const {
        std::size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(hex, &pos, 16);
        } catch (const std::exception&) {
            throw Error("bad element encoding: " + hex);
        }
        if (pos != hex.size() || v >= q_) throw Error("element out of range: " + hex);
        return static_cast<FieldElement>(v);
    }

   private:
    FieldElement trace_raw(FieldElement x, int s) const {
        FieldElement y = 0;
        FieldElement t = x;
        for (int j = 0; j < m_ / s; ++j) {
            y ^= t;
            for (int i = 0; i < s; ++i) t = square(t);
        }
        return y;
    }

    int trace_slow(FieldElement x) const { return trace_raw(x, 1) & 1; }

    FieldElement find_generator() const {
        const std::uint64_t n = q_ - 1;
        for (FieldElement g = 2; g < q_; ++g) {
            bool full_order = true;
            for (std::uint64_t p : order_factors_) {
                if (pow(g, static_cast<long long>(n / p)) == 1) {
                    full_order = false;
                    break;
                }
            }
            if (full_order) return g;
        }
        throw Error("no generator found (broken modulus?)");
    }

    void build_tables() const {
        auto t = std::make_unique<Tables>();
        const std::uint32_t n = q_ - 1;
        t->exp.resize(n);
        t->log.assign(q_, 0);
        t->inv.assign(q_, 0);
        FieldElement x = 1;
        for (std::uint32_t i = 0; i < n; ++i) {
            t->exp[i] = x;
            t->log[x] = i;
            x = mul(x, generator_);
        }
        for (std::uint32_t y = 1; y < q_; ++y) {
            t->inv[y] = t->exp[(n - t->log[y]) % n];
        }
        t->cube_pre.assign(q_, kNoPreimage);
        t->quartic_pre.assign(q_, kNoPreimage);
        for (std::uint32_t y = 0; y < q_; ++y) {
            const FieldElement y2 = square(y);
            const FieldElement y3 = mul(y2, y);
            const FieldElement y4 = square(y2);
            if (t->cube_pre[y3] == kNoPreimage) t->cube_pre[y3] = y;
            if (t->quartic_pre[y4 ^ y3] == kNoPreimage) t->quartic_pre[y4 ^ y3] = y;
        }
        tables_ = std::move(t);
    }

    int m_;
    std::uint32_t q_;
    std::uint64_t modulus_;
    FieldElement generator_;
    std::uint32_t trace_mask_;
    std::vector<FieldElement> tr2_basis_;
    std::vector<std::uint64_t> order_factors_;
    mutable std::unique_ptr<Tables> tables_;
    mutable std::once_flag tables_once_;
};

inline FieldContext make_field(int m, std::optional<std::uint64_t> modulus = std::nullopt) {
    return FieldContext(m, modulus);
}

}  // namespace kloo

#endif  // KLOO_FIELD_HPP
