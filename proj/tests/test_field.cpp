#include <gtest/gtest.h>

#include <functional>

#include "rpgc/rpgc.hpp"

using namespace rpgc;

namespace {

FieldElement ints(const FieldConfig& f, std::vector<uint32_t> digits) { return elem_from_digits(f, digits); }

void expect_error(ErrorCode code, const std::function<void()>& fn) {
    try {
        fn();
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(int(e.code()), int(code)) << e.what();
    }
}

}  // namespace

TEST(FieldMake, PrimeFieldUsesIdentityModulus) {
    auto f2 = field_make(2, 1);
    EXPECT_EQ(f2->q(), 2u);
    EXPECT_EQ(f2->modulus, (std::vector<uint32_t>{0, 1}));
}

TEST(FieldMake, AcceptsIrreducibleModulus) {
    auto f4 = field_make(2, 2, {1, 1, 1});  // t^2 + t + 1
    EXPECT_EQ(f4->q(), 4u);
}

TEST(FieldMake, RejectsReducibleModulus) {
    // (t+1)^2 = t^2 + 1 over F_2
    expect_error(ErrorCode::ReducibleModulus, [] { field_make(2, 2, {1, 0, 1}); });
}

TEST(FieldMake, RejectsCompositeCharacteristic) {
    expect_error(ErrorCode::NotPrime, [] { field_make(4, 1); });
    expect_error(ErrorCode::NotPrime, [] { field_make(1, 1); });
}

TEST(FieldMake, RejectsWrongDegreeModulus) {
    expect_error(ErrorCode::DegreeMismatch, [] { field_make(2, 3, {1, 1, 1}); });
}

TEST(FieldMake, CanonicalModulusIsFirstIrreducible) {
    EXPECT_EQ(field_make(2, 2)->modulus, (std::vector<uint32_t>{1, 1, 1}));     // t^2+t+1
    EXPECT_EQ(field_make(3, 2)->modulus, (std::vector<uint32_t>{1, 0, 1}));     // t^2+1
    EXPECT_EQ(field_make(2, 3)->modulus, (std::vector<uint32_t>{1, 1, 0, 1}));  // t^3+t+1
}

TEST(ElemOps, GeneratorSquareInF4) {
    auto f4 = field_make(2, 2, {1, 1, 1});
    const FieldElement w = ints(*f4, {0, 1});
    EXPECT_TRUE(elem_eq(elem_mul(w, w), ints(*f4, {1, 1})));  // t^2 = t + 1
}

TEST(ElemOps, AdditionWrapsInF3) {
    auto f3 = field_make(3, 1);
    EXPECT_TRUE(elem_eq(elem_add(ints(*f3, {2}), ints(*f3, {2})), ints(*f3, {1})));
}

TEST(ElemOps, InverseOfOne) {
    auto f2 = field_make(2, 1);
    EXPECT_TRUE(elem_eq(elem_inv(elem_one(*f2)), elem_one(*f2)));
}

TEST(ElemOps, InverseOfZeroFails) {
    auto f5 = field_make(5, 1);
    expect_error(ErrorCode::DivisionByZero, [&] { elem_inv(elem_zero(*f5)); });
}

TEST(ElemOps, MismatchedConfigsFail) {
    auto f2 = field_make(2, 1);
    auto f3 = field_make(3, 1);
    expect_error(ErrorCode::ConfigMismatch, [&] { elem_add(elem_one(*f2), elem_one(*f3)); });
}

TEST(ElemOps, WireRoundTrip) {
    auto f4 = field_make(2, 2, {1, 1, 1});
    const FieldElement e = ints(*f4, {1, 1});
    EXPECT_EQ(elem_to_wire(e), "1.1");
    EXPECT_TRUE(elem_eq(elem_from_wire(*f4, "1.1"), e));
}

TEST(PolyOps, SquareInCharacteristicTwo) {
    auto f2 = field_make(2, 1);
    const Poly xp1 = poly_from_ints(*f2, {1, 1});
    EXPECT_TRUE(poly_eq(poly_mul(xp1, xp1), poly_from_ints(*f2, {1, 0, 1})));
}

TEST(PolyOps, CubeModQuadratic) {
    auto f2 = field_make(2, 1);
    const Poly x3 = poly_monomial(*f2, 3);
    const Poly m = poly_from_ints(*f2, {1, 1, 1});
    EXPECT_TRUE(poly_eq(poly_mod(x3, m), poly_from_ints(*f2, {1})));
}

TEST(PolyOps, SubtractionNormalizesToEmpty) {
    auto f3 = field_make(3, 1);
    const Poly f = poly_from_ints(*f3, {1, 0, 1});
    const Poly z = poly_sub(f, f);
    EXPECT_TRUE(z.is_zero());
    EXPECT_TRUE(z.c.empty());
    EXPECT_EQ(z.degree(), -1);
}

TEST(PolyOps, DivisionByZeroFails) {
    auto f2 = field_make(2, 1);
    expect_error(ErrorCode::DivisionByZero, [&] { poly_divmod(poly_x(*f2), poly_zero(*f2)); });
}

TEST(PolyOps, DivmodRoundTripRandom) {
    for (uint32_t q : {2u, 3u, 5u}) {
        auto f = field_make(q, 1);
        SplitMix64 rng(1000 + q);
        for (int i = 0; i < 300; ++i) {
            const Poly a = random_poly(*f, rng, 9);
            Poly b = random_poly(*f, rng, 4);
            if (b.is_zero()) b = poly_x(*f);
            auto [quot, rem] = poly_divmod(a, b);
            EXPECT_TRUE(poly_eq(a, poly_add(poly_mul(quot, b), rem)));
            EXPECT_LT(rem.degree(), b.degree());
        }
    }
}

TEST(PolyOps, RandomizedFieldAlgebra) {
    const std::vector<std::pair<uint32_t, uint32_t>> shapes = {{2, 1}, {3, 1}, {2, 2}, {5, 1}, {2, 3}, {3, 2}};
    for (auto [p, m] : shapes) {
        auto f = field_make(p, m);
        SplitMix64 rng(17 * p + m);
        for (int i = 0; i < 1000; ++i) {
            const FieldElement a = random_element(*f, rng);
            const FieldElement b = random_element(*f, rng);
            const FieldElement c = random_element(*f, rng);
            ASSERT_TRUE(elem_eq(elem_mul(a, elem_add(b, c)), elem_add(elem_mul(a, b), elem_mul(a, c))));
            ASSERT_TRUE(elem_eq(elem_mul(elem_mul(a, b), c), elem_mul(a, elem_mul(b, c))));
            if (!a.is_zero()) ASSERT_TRUE(elem_eq(elem_mul(a, elem_inv(a)), elem_one(*f)));
        }
    }
}

TEST(Irreducibility, SpecExamples) {
    auto f2 = field_make(2, 1);
    EXPECT_TRUE(poly_is_irreducible(poly_from_ints(*f2, {1, 1, 1})));     // x^2+x+1
    EXPECT_FALSE(poly_is_irreducible(poly_from_ints(*f2, {1, 0, 1})));    // x^2+1 has root 1
    EXPECT_TRUE(poly_is_irreducible(poly_from_ints(*f2, {1, 1, 0, 1})));  // x^3+x+1
}

TEST(Irreducibility, RequiresMonic) {
    auto f3 = field_make(3, 1);
    expect_error(ErrorCode::NotMonic, [&] { poly_is_irreducible(poly_from_ints(*f3, {1, 2})); });
}

namespace {

// independent oracle: trial division by every monic polynomial of degree <= deg(f)/2
bool irreducible_by_trial_division(const Poly& f, const std::vector<Poly>& divisors) {
    for (const auto& g : divisors) {
        if (2 * g.degree() > f.degree()) continue;
        if (poly_mod(f, g).is_zero()) return false;
    }
    return true;
}

Poly monic_at(const FieldConfig& f, uint32_t deg, uint64_t w) {
    std::vector<FieldElement> c(deg + 1, elem_zero(f));
    for (uint32_t i = 0; i < deg; ++i) {
        c[i] = elem_at_index(f, w % f.q());
        w /= f.q();
    }
    c[deg] = elem_one(f);
    return Poly{&f, std::move(c)};
}

}  // namespace

TEST(Irreducibility, AgreesWithTrialDivision) {
    for (uint32_t q : {2u, 3u, 4u}) {
        auto f = q == 4 ? field_make(2, 2) : field_make(q, 1);
        std::vector<Poly> divisors;
        for (uint32_t deg = 1; deg <= 4; ++deg) {
            uint64_t total = 1;
            for (uint32_t i = 0; i < deg; ++i) total *= q;
            for (uint64_t w = 0; w < total; ++w) divisors.push_back(monic_at(*f, deg, w));
        }
        for (uint32_t deg = 1; deg <= 8; ++deg) {
            uint64_t total = 1;
            for (uint32_t i = 0; i < deg; ++i) total *= q;
            for (uint64_t w = 0; w < total; ++w) {
                const Poly cand = monic_at(*f, deg, w);
                ASSERT_EQ(poly_is_irreducible(cand), irreducible_by_trial_division(cand, divisors))
                    << "q=" << q << " poly=" << poly_to_wire(cand);
            }
        }
    }
}

TEST(PolyWire, RoundTrip) {
    auto f4 = field_make(2, 2);
    const Poly f = poly_from_digit_rows(*f4, {{1, 0}, {0, 1}, {1, 0}});
    EXPECT_EQ(poly_to_wire(f), "1.0,0.1,1.0");
    EXPECT_TRUE(poly_eq(poly_from_wire(*f4, "1.0,0.1,1.0"), f));
    EXPECT_TRUE(poly_from_wire(*f4, "").is_zero());
}
