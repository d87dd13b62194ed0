#include <gtest/gtest.h>

#include "rpgc/rpgc.hpp"

using namespace rpgc;

TEST(Multiply, IdentityElement) {
    for (uint32_t q : {2u, 3u, 5u}) {
        auto f = field_make(q, 1);
        const auto alg = compile(f, 4, Strategy::Opt);
        SplitMix64 rng(5 + q);
        for (int i = 0; i < 100; ++i) {
            const ExtElement x = random_ext_element(alg, rng);
            const auto [z, trace] = multiply(alg, x, ext_one(alg));
            EXPECT_TRUE(ext_eq(z, x));
        }
    }
}

TEST(Multiply, GeneratorSquareInF4) {
    auto f2 = field_make(2, 1);
    const Poly Q = poly_from_wire(*f2, "1,1,1");
    const auto alg = compile(f2, 2, Strategy::Deg, 3, Q);
    const ExtElement x = ext_from_poly(alg, poly_x(*f2));
    const auto [z, trace] = multiply(alg, x, x);
    EXPECT_TRUE(poly_eq(ext_to_poly(alg, z), poly_from_wire(*f2, "1,1")));  // x^2 = x + 1
    EXPECT_EQ(trace.total, 3u);
}

TEST(Oracle, Examples) {
    auto f2 = field_make(2, 1);
    const auto alg2 = compile(f2, 2, Strategy::Deg, 3, poly_from_wire(*f2, "1,1,1"));
    const ExtElement x2 = ext_from_poly(alg2, poly_x(*f2));
    EXPECT_TRUE(ext_eq(oracle_multiply(alg2, x2, ext_one(alg2)), x2));
    EXPECT_TRUE(poly_eq(ext_to_poly(alg2, oracle_multiply(alg2, x2, x2)), poly_from_wire(*f2, "1,1")));

    // x^3 = x + 2 mod x^3 + 2x + 1 over F_3
    auto f3 = field_make(3, 1);
    const Poly Q = poly_from_wire(*f3, "1,2,0,1");
    const auto alg3 = compile(f3, 3, Strategy::Deg, 3, Q);
    const ExtElement xsq = ext_from_poly(alg3, poly_monomial(*f3, 2));
    const ExtElement x = ext_from_poly(alg3, poly_x(*f3));
    EXPECT_TRUE(poly_eq(ext_to_poly(alg3, oracle_multiply(alg3, xsq, x)), poly_from_wire(*f3, "2,1")));
}

TEST(Multiply, MatchesOracleOnRandomPairs) {
    auto f3 = field_make(3, 1);
    const auto alg = compile(f3, 6, Strategy::Deg);
    SplitMix64 rng(42);
    for (int i = 0; i < 1000; ++i) {
        const ExtElement x = random_ext_element(alg, rng);
        const ExtElement y = random_ext_element(alg, rng);
        const auto [z, trace] = multiply(alg, x, y);
        ASSERT_TRUE(ext_eq(z, oracle_multiply(alg, x, y)));
        ASSERT_EQ(trace.total, alg.bilinear_count());
    }
}

TEST(Multiply, TraceBreakdownSumsToTotal) {
    auto f2 = field_make(2, 1);
    const auto alg = compile(f2, 7, Strategy::Opt);
    SplitMix64 rng(9);
    const auto [z, trace] = multiply(alg, random_ext_element(alg, rng), random_ext_element(alg, rng));
    ASSERT_EQ(trace.per_point.size(), alg.top.spec.points.size());
    uint64_t sum = 0;
    for (uint64_t c : trace.per_point) sum += c;
    EXPECT_EQ(sum, trace.total);
    EXPECT_EQ(trace.total, alg.bilinear_count());
}

TEST(Multiply, CommutativeAndDistributiveSpotChecks) {
    auto f5 = field_make(5, 1);
    const auto alg = compile(f5, 4, Strategy::Deg);
    SplitMix64 rng(77);
    for (int i = 0; i < 100; ++i) {
        const ExtElement a = random_ext_element(alg, rng);
        const ExtElement b = random_ext_element(alg, rng);
        const ExtElement c = random_ext_element(alg, rng);
        EXPECT_TRUE(ext_eq(multiply(alg, a, b).first, multiply(alg, b, a).first));
        // a (b + c) = a b + a c, with the addition done coefficientwise
        ExtElement bc;
        for (uint32_t k = 0; k < alg.n; ++k) bc.coeffs.push_back(elem_add(b.coeffs[k], c.coeffs[k]));
        const ExtElement lhs = multiply(alg, a, bc).first;
        const ExtElement ab = multiply(alg, a, b).first;
        const ExtElement ac = multiply(alg, a, c).first;
        for (uint32_t k = 0; k < alg.n; ++k)
            EXPECT_TRUE(elem_eq(lhs.coeffs[k], elem_add(ab.coeffs[k], ac.coeffs[k])));
    }
}

TEST(Multiply, RejectsForeignElements) {
    auto f2 = field_make(2, 1);
    auto f3 = field_make(3, 1);
    const auto alg = compile(f2, 2, Strategy::Deg);
    const auto other = compile(f3, 2, Strategy::Deg);
    try {
        multiply(alg, ext_one(other), ext_one(other));
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(int(e.code()), int(ErrorCode::ConfigMismatch));
    }
}

TEST(Verify, ReportsKnownCounts) {
    auto r22 = verify(field_make(2, 1), 2, Strategy::Deg, 1000, 42);
    EXPECT_TRUE(r22.pass) << r22.failure;
    EXPECT_EQ(r22.bilinear_count, 3u);

    auto r43 = verify(field_make(2, 2), 3, Strategy::Deg, 1000, 42);
    EXPECT_TRUE(r43.pass) << r43.failure;
    EXPECT_EQ(r43.bilinear_count, 5u);

    auto r25 = verify(field_make(2, 1), 5, Strategy::Opt, 1000, 42);
    EXPECT_TRUE(r25.pass) << r25.failure;
    EXPECT_EQ(r25.bilinear_count, 14u);
}

TEST(Verify, ImportedAlgorithmRunsIdentically) {
    auto f3 = field_make(3, 1);
    const auto alg = compile(f3, 4, Strategy::Opt);
    const auto back = import_json(export_json(alg));
    SplitMix64 rng(31);
    for (int i = 0; i < 50; ++i) {
        const ExtElement x = random_ext_element(alg, rng);
        const ExtElement y = random_ext_element(alg, rng);
        EXPECT_TRUE(ext_eq(multiply(alg, x, y).first, multiply(back, x, y).first));
    }
}

TEST(Rng, SplitMixIsStable) {
    SplitMix64 rng(0);
    EXPECT_EQ(rng.next(), 0xE220A8397B1DCDAFull);  // reference first output for seed 0
}
