#include <gtest/gtest.h>

#include "rpgc/rpgc.hpp"

using namespace rpgc;

namespace {

std::vector<FieldElement> eval_flat(const Poly& f, const std::vector<EvalPoint>& points, uint32_t k) {
    return evaluate_points(f, points, k).flatten();
}

}  // namespace

TEST(ResidueAt, Examples) {
    auto f2 = field_make(2, 1);
    const Place quad = place_finite(poly_from_ints(*f2, {1, 1, 1}));
    EXPECT_TRUE(poly_eq(residue_at(poly_monomial(*f2, 3), quad), poly_from_ints(*f2, {1})));
    EXPECT_TRUE(residue_at(poly_zero(*f2), quad).is_zero());
    const Place at_one = place_finite(poly_from_ints(*f2, {1, 1}));
    EXPECT_TRUE(residue_at(poly_from_ints(*f2, {0, 1, 1}), at_one).is_zero());  // x^2+x at 1
}

TEST(HasseExpansion, Examples) {
    auto f2 = field_make(2, 1);
    const FieldElement zero = elem_zero(*f2);
    const FieldElement one = elem_one(*f2);

    auto coeffs = hasse_expansion(poly_from_ints(*f2, {0, 1, 1}), zero, 2);  // x^2+x at 0
    ASSERT_EQ(coeffs.size(), 2u);
    EXPECT_TRUE(coeffs[0].is_zero());
    EXPECT_TRUE(elem_eq(coeffs[1], one));

    // x^2 = 1 + (x+1)^2 in characteristic 2
    coeffs = hasse_expansion(poly_monomial(*f2, 2), one, 3);
    ASSERT_EQ(coeffs.size(), 3u);
    EXPECT_TRUE(elem_eq(coeffs[0], one));
    EXPECT_TRUE(coeffs[1].is_zero());
    EXPECT_TRUE(elem_eq(coeffs[2], one));

    coeffs = hasse_expansion(poly_from_ints(*f2, {1}), one, 2);
    EXPECT_TRUE(elem_eq(coeffs[0], one));
    EXPECT_TRUE(coeffs[1].is_zero());
}

TEST(LeadingCoeff, Examples) {
    auto f3 = field_make(3, 1);
    const Poly f = poly_from_ints(*f3, {2, 1});  // 2 + x
    EXPECT_TRUE(elem_eq(leading_coeff(f, 1), elem_one(*f3)));
    EXPECT_TRUE(leading_coeff(poly_from_ints(*f3, {1}), 4).is_zero());
    EXPECT_TRUE(elem_eq(leading_coeff(poly_from_ints(*f3, {1, 1, 1}), 2), elem_one(*f3)));
    try {
        leading_coeff(poly_monomial(*f3, 3), 2);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(int(e.code()), int(ErrorCode::DegreeTooLarge));
    }
}

TEST(EvalRowBlock, QuadraticPlaceColumns) {
    auto f2 = field_make(2, 1);
    const EvalPoint pt = EvalPoint::expansion(place_finite(poly_from_ints(*f2, {1, 1, 1})));
    const Mat m = eval_row_block(pt, 4);
    ASSERT_EQ(m.rows, 2u);
    ASSERT_EQ(m.cols, 4u);
    // columns: 1 -> (1,0), x -> (0,1), x^2 -> (1,1), x^3 -> (1,0)
    const uint32_t want[2][4] = {{1, 0, 1, 1}, {0, 1, 1, 0}};
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(m.at(r, c).d[0], want[r][c]) << r << "," << c;
}

TEST(EvalRowBlock, InfinitySelectsTopColumn) {
    auto f2 = field_make(2, 1);
    const Mat m = eval_row_block(EvalPoint::infinity_lead(*f2), 3);
    ASSERT_EQ(m.rows, 1u);
    EXPECT_TRUE(m.at(0, 0).is_zero());
    EXPECT_TRUE(m.at(0, 1).is_zero());
    EXPECT_TRUE(elem_eq(m.at(0, 2), elem_one(*f2)));
}

TEST(EvalRowBlock, MultiplicityTwoAtZero) {
    auto f3 = field_make(3, 1);
    const EvalPoint pt = EvalPoint::expansion(place_finite(poly_x(*f3)), 2);
    const Mat m = eval_row_block(pt, 3);
    ASSERT_EQ(m.rows, 2u);
    const uint32_t want[2][3] = {{1, 0, 0}, {0, 1, 0}};
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(m.at(r, c).d[0], want[r][c]);
}

TEST(EvalRowBlock, AgreesWithDirectEvaluation) {
    for (uint32_t q : {2u, 3u, 4u}) {
        auto f = q == 4 ? field_make(2, 2) : field_make(q, 1);
        SplitMix64 rng(90 + q);
        for (uint32_t d = 1; d <= 4; ++d) {
            for (const auto& place : enumerate_places(*f, d)) {
                if (place.infinite) continue;
                const EvalPoint pt = EvalPoint::expansion(place);
                const Mat block = eval_row_block(pt, 7);
                for (int trial = 0; trial < 5; ++trial) {
                    const Poly g = random_poly(*f, rng, 6);
                    std::vector<FieldElement> coeffs(7, elem_zero(*f));
                    for (std::size_t i = 0; i < g.c.size(); ++i) coeffs[i] = g.c[i];
                    const auto got = mat_vec(block, coeffs);
                    const Poly want = residue_at(g, place);
                    for (uint32_t i = 0; i < d; ++i)
                        ASSERT_TRUE(elem_eq(got[i], want.coeff(i))) << "q=" << q << " d=" << d;
                }
            }
        }
        // multiplicities at rational places against hasse_expansion
        for (const auto& place : enumerate_places(*f, 1)) {
            if (place.infinite) continue;
            for (uint32_t u = 1; u <= 3; ++u) {
                const Mat block = eval_row_block(EvalPoint::expansion(place, u), 7);
                const FieldElement a = elem_neg(place.minpoly.c[0]);
                for (int trial = 0; trial < 5; ++trial) {
                    const Poly g = random_poly(*f, rng, 6);
                    std::vector<FieldElement> coeffs(7, elem_zero(*f));
                    for (std::size_t i = 0; i < g.c.size(); ++i) coeffs[i] = g.c[i];
                    const auto got = mat_vec(block, coeffs);
                    const auto want = hasse_expansion(g, a, u);
                    for (uint32_t i = 0; i < u; ++i) ASSERT_TRUE(elem_eq(got[i], want[i]));
                }
            }
        }
    }
}

TEST(EvaluatePoints, KaratsubaShape) {
    auto f2 = field_make(2, 1);
    const auto rationals = enumerate_places(*f2, 1);
    const std::vector<EvalPoint> pts = {EvalPoint::infinity_lead(*f2),
                                        EvalPoint::expansion(rationals[1]),
                                        EvalPoint::expansion(rationals[2])};
    // (f_1, f_0, f_0 + f_1) for every linear polynomial
    for (uint32_t f0 = 0; f0 < 2; ++f0)
        for (uint32_t f1 = 0; f1 < 2; ++f1) {
            const Poly f = poly_from_ints(*f2, {f0, f1});
            const auto flat = eval_flat(f, pts, 1);
            ASSERT_EQ(flat.size(), 3u);
            EXPECT_EQ(flat[0].d[0], f1);
            EXPECT_EQ(flat[1].d[0], f0);
            EXPECT_EQ(flat[2].d[0], (f0 + f1) % 2);
        }
}

TEST(EvaluatePoints, ZeroGivesZeroVector) {
    auto f2 = field_make(2, 1);
    const auto rationals = enumerate_places(*f2, 1);
    const std::vector<EvalPoint> pts = {EvalPoint::infinity_lead(*f2),
                                        EvalPoint::expansion(rationals[1], 2),
                                        EvalPoint::expansion(rationals[2])};
    for (const auto& e : eval_flat(poly_zero(*f2), pts, 2)) EXPECT_TRUE(e.is_zero());
}

TEST(EvaluatePoints, MixedMultiplicityExample) {
    auto f2 = field_make(2, 1);
    const auto rationals = enumerate_places(*f2, 1);
    const std::vector<EvalPoint> pts = {EvalPoint::infinity_lead(*f2),
                                        EvalPoint::expansion(rationals[1], 2),
                                        EvalPoint::expansion(rationals[2])};
    const auto flat = eval_flat(poly_monomial(*f2, 2), pts, 2);  // f = x^2
    ASSERT_EQ(flat.size(), 4u);
    EXPECT_EQ(flat[0].d[0], 1u);  // leading coefficient
    EXPECT_EQ(flat[1].d[0], 0u);  // value at 0
    EXPECT_EQ(flat[2].d[0], 0u);  // first derivative coefficient at 0
    EXPECT_EQ(flat[3].d[0], 1u);  // value at 1
}

TEST(EvaluatePoints, RejectsDegreeAboveCap) {
    auto f2 = field_make(2, 1);
    const std::vector<EvalPoint> pts = {EvalPoint::infinity_lead(*f2)};
    try {
        evaluate_points(poly_monomial(*f2, 3), pts, 2);
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(int(e.code()), int(ErrorCode::DegreeTooLarge));
    }
}

TEST(Properties, Linearity) {
    int cases = 0;
    for (uint32_t q : {2u, 3u}) {
        auto f = q == 4 ? field_make(2, 2) : field_make(q, 1);
        const auto rationals = enumerate_places(*f, 1);
        const auto quads = enumerate_places(*f, 2);
        const std::vector<EvalPoint> pts = {EvalPoint::infinity_lead(*f),
                                            EvalPoint::expansion(rationals[1], 3),
                                            EvalPoint::expansion(rationals[2]),
                                            EvalPoint::expansion(quads[0])};
        SplitMix64 rng(7 * q);
        for (int i = 0; i < 300; ++i, ++cases) {
            const Poly a = random_poly(*f, rng, 8);
            const Poly b = random_poly(*f, rng, 8);
            const auto lhs = eval_flat(poly_add(a, b), pts, 8);
            const auto ea = eval_flat(a, pts, 8);
            const auto eb = eval_flat(b, pts, 8);
            for (std::size_t k = 0; k < lhs.size(); ++k)
                ASSERT_TRUE(elem_eq(lhs[k], elem_add(ea[k], eb[k])));
        }
    }
    EXPECT_GE(cases, 500);
}

TEST(Properties, HasseConvolution) {
    int cases = 0;
    for (uint32_t q : {2u, 3u}) {
        auto f = field_make(q, 1);
        SplitMix64 rng(40 + q);
        for (int i = 0; i < 300; ++i, ++cases) {
            const Poly a = random_poly(*f, rng, 5);
            const Poly b = random_poly(*f, rng, 5);
            const FieldElement at = elem_at_index(*f, rng.next() % q);
            const uint32_t u = 1 + uint32_t(rng.next() % 3);
            const auto ea = hasse_expansion(a, at, u);
            const auto eb = hasse_expansion(b, at, u);
            const auto prod = hasse_expansion(poly_mul(a, b), at, u);
            for (uint32_t k = 0; k < u; ++k) {
                FieldElement conv = elem_zero(*f);
                for (uint32_t i2 = 0; i2 <= k; ++i2) conv = elem_add(conv, elem_mul(ea[i2], eb[k - i2]));
                ASSERT_TRUE(elem_eq(prod[k], conv));
            }
        }
    }
    EXPECT_GE(cases, 500);
}

TEST(Properties, LeadingCoeffMultiplicative) {
    int cases = 0;
    for (uint32_t q : {2u, 3u, 5u}) {
        auto f = field_make(q, 1);
        SplitMix64 rng(60 + q);
        for (int i = 0; i < 200; ++i, ++cases) {
            const uint32_t k = 1 + uint32_t(rng.next() % 6);
            const Poly a = random_poly(*f, rng, k);
            const Poly b = random_poly(*f, rng, k);
            const FieldElement lhs = leading_coeff(poly_mul(a, b), 2 * k);
            const FieldElement rhs = elem_mul(leading_coeff(a, k), leading_coeff(b, k));
            ASSERT_TRUE(elem_eq(lhs, rhs));
        }
    }
    EXPECT_GE(cases, 500);
}
