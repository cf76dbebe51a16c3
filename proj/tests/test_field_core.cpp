#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "kloo/field.hpp"
#include "oracles.hpp"

using namespace kloo;

TEST_CASE("default modulus is the smallest irreducible encoding") {
    CHECK(make_field(2).modulus() == 7);   // x^2 + x + 1, the only choice
    CHECK(make_field(3).modulus() == 11);  // x^3 + x + 1
    CHECK(make_field(4).modulus() == 19);  // x^4 + x + 1
    for (int m = 2; m <= 10; ++m) {
        CHECK(make_field(m).modulus() == oracles::naive_smallest_irreducible(m));
    }
}

TEST_CASE("reducible modulus is rejected") {
    CHECK_THROWS_AS(make_field(4, 0b10101), NotIrreducible);  // (x^2+x+1)^2
    CHECK_THROWS_AS(make_field(4, 0b11011), NotIrreducible);  // has the root 1
    CHECK_THROWS_AS(make_field(4, 7), DegreeOutOfRange);      // degree 2 != 4
    CHECK_THROWS_AS(make_field(1), DegreeOutOfRange);
    CHECK_THROWS_AS(make_field(31), DegreeOutOfRange);
}

TEST_CASE("GF(4) arithmetic by hand") {
    FieldContext F(2);
    const FieldElement x = 2;  // the class of x mod x^2+x+1
    CHECK(F.mul(x, x) == 3);   // x^2 = x + 1
    CHECK(F.inv(x) == 3);
    CHECK(F.add(x, x) == 0);
    CHECK(F.generator() == 2);
}

TEST_CASE("generator has full multiplicative order") {
    for (int m = 2; m <= 10; ++m) {
        FieldContext F(m);
        const long long n = F.q() - 1;
        CHECK(F.pow(F.generator(), n) == 1);
        for (std::uint64_t p : F.order_factors()) {
            CHECK(F.pow(F.generator(), n / static_cast<long long>(p)) != 1);
        }
    }
}

TEST_CASE("field axioms, exhaustive on small fields") {
    for (int m : {4, 6}) {
        FieldContext F(m);
        for (FieldElement a = 0; a < F.q(); ++a) {
            CHECK(F.square(a) == F.mul(a, a));
            if (a != 0) CHECK(F.mul(a, F.inv(a)) == 1);
            for (FieldElement b = 0; b < F.q(); ++b) {
                CHECK(F.mul(a, b) == F.mul(b, a));
            }
        }
    }
}

TEST_CASE("pow handles zero and negative exponents") {
    FieldContext F(4);
    CHECK(F.pow(0, 0) == 1);
    CHECK(F.pow(0, 5) == 0);
    CHECK(F.pow(3, -1) == F.inv(3));
    CHECK_THROWS_AS(F.pow(0, -1), DivisionByZero);
    CHECK_THROWS_AS(F.inv(0), DivisionByZero);
}

TEST_CASE("trace values and subfield containment") {
    // Tr(1) = m mod 2
    for (int m = 2; m <= 9; ++m) {
        FieldContext F(m);
        CHECK(F.tr1(1) == m % 2);
    }
    FieldContext F2(2);
    CHECK(F2.tr1(F2.generator()) == 1);  // x + x^2 = 1 in GF(4)
    FieldContext F4(4);
    CHECK(F4.trace(1, 2) == 0);  // (m/2) mod 2 copies of 1 in F_4
    // Tr_s lands in F_{2^s}: its 2^s-th power is itself
    for (int s : {1, 2, 4}) {
        for (FieldElement x = 0; x < F4.q(); ++x) {
            FieldElement t = F4.trace(x, s);
            FieldElement tp = t;
            for (int i = 0; i < s; ++i) tp = F4.square(tp);
            CHECK(tp == t);
        }
    }
    CHECK_THROWS_AS(F4.trace(1, 3), NonDivisorSubfieldDegree);
}

TEST_CASE("trace is Frobenius-linear and balanced") {
    FieldContext F(4);
    for (FieldElement x = 0; x < F.q(); ++x) {
        CHECK(F.tr1(F.square(x)) == F.tr1(x));
        for (FieldElement y = 0; y < F.q(); ++y) {
            CHECK(F.tr1(x ^ y) == (F.tr1(x) ^ F.tr1(y)));
            CHECK(F.trace(x ^ y, 2) == (F.trace(x, 2) ^ F.trace(y, 2)));
        }
    }
    for (int m = 2; m <= 10; ++m) {
        FieldContext G(m);
        long long zeros = 0;
        for (FieldElement x = 0; x < G.q(); ++x) zeros += G.tr1(x) == 0;
        CHECK(zeros == G.q() / 2);
    }
}

TEST_CASE("character orthogonality") {
    for (int m = 2; m <= 10; ++m) {
        FieldContext F(m);
        CHECK(F.chi(0) == 1);
        long long sum = 0;
        for (FieldElement x = 0; x < F.q(); ++x) sum += F.chi(x);
        CHECK(sum == 0);
    }
}

TEST_CASE("power residue roots") {
    FieldContext F(6);
    const FieldElement g = F.generator();
    CHECK(F.power_residue_root(5, 1) == 5);
    const FieldElement g3 = F.pow(g, 3);
    auto r = F.power_residue_root(g3, 3);
    REQUIRE(r.has_value());
    CHECK(F.pow(*r, 3) == g3);
    CHECK_FALSE(F.power_residue_root(g, 3).has_value());
    CHECK_THROWS_AS(F.power_residue_root(0, 3), ZeroInput);
    CHECK_THROWS_AS(F.power_residue_root(5, 5), NonDivisorOrder);

    // each divisor d of q-1 has exactly (q-1)/d d-th powers
    for (std::uint64_t d : {1, 3, 7, 9, 21, 63}) {
        long long hits = 0;
        for (FieldElement a = 1; a < F.q(); ++a) {
            auto root = F.power_residue_root(a, d);
            if (root.has_value()) {
                ++hits;
                CHECK(F.pow(*root, static_cast<long long>(d)) == a);
            }
        }
        CHECK(hits == 63 / static_cast<long long>(d));
    }
}

TEST_CASE("solve_power takes both the exponentiation and the log-table path") {
    // m = 4: gcd(3, 15/3) = 1, pure exponentiation
    FieldContext F4(4);
    for (FieldElement a = 1; a < F4.q(); ++a) {
        auto r = F4.power_residue_root(a, 3);
        if (r.has_value()) CHECK(F4.pow(*r, 3) == a);
    }
    // m = 6: gcd(3, 63/3) = 3, falls back to discrete logs
    FieldContext F6(6);
    for (FieldElement a = 1; a < F6.q(); ++a) {
        auto r = F6.power_residue_root(a, 9);
        if (r.has_value()) CHECK(F6.pow(*r, 9) == a);
    }
}

TEST_CASE("element hex round trip") {
    FieldContext F(6);
    for (FieldElement x = 0; x < F.q(); ++x) {
        CHECK(F.parse_element(F.element_hex(x)) == x);
    }
    CHECK_THROWS(F.parse_element("zz"));
    CHECK_THROWS(F.parse_element("40"));  // 64 >= q
}

TEST_CASE("trace and character counts agree across moduli at m = 6") {
    FieldContext F(6);
    FieldContext G(6, poly2::next_irreducible(6, F.modulus()));
    CHECK(F.modulus() != G.modulus());
    auto count_tr1 = [](const FieldContext& C) {
        long long n = 0;
        for (FieldElement x = 0; x < C.q(); ++x) n += C.tr1(x);
        return n;
    };
    CHECK(count_tr1(F) == count_tr1(G));
}
