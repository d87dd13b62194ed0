#ifndef RPGC_PLACES_HPP
#define RPGC_PLACES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rpgc/poly.hpp"

namespace rpgc {

// A place of the rational function field F_q(x): the infinite place, or a
// monic irreducible polynomial over F_q.
struct Place {
    bool infinite = false;
    Poly minpoly;  // empty for the infinite place

    uint32_t degree() const { return infinite ? 1 : static_cast<uint32_t>(minpoly.degree()); }

    bool operator==(const Place& o) const {
        if (infinite != o.infinite) return false;
        return infinite || poly_eq(minpoly, o.minpoly);
    }
};

inline Place place_infinity() { return Place{true, {}}; }

inline Place place_finite(Poly minpoly) {
    if (!minpoly.is_monic()) fail(ErrorCode::NotMonic, "a finite place needs a monic polynomial");
    return Place{false, std::move(minpoly)};
}

inline std::string place_to_wire(const Place& p) { return p.infinite ? "infinity" : poly_to_wire(p.minpoly); }

// Exhaustive enumeration stays cheap while q^d fits in a lookup-sized range.
inline constexpr uint64_t kMaxEnumeration = uint64_t(1) << 24;

// B_d, the number of places of degree d; B_1 = q + 1 counts the infinite place.
inline uint64_t count_places(const FieldConfig& field, uint32_t d) {
    if (d < 1) fail(ErrorCode::DegreeMismatch, "place degree must be >= 1");
    const uint64_t q = field.q();
    if (d == 1) return q + 1;
    unsigned __int128 qd = 1;
    for (uint32_t i = 0; i < d; ++i) {
        qd *= q;
        if (qd > (unsigned __int128)UINT64_MAX / 2) fail(ErrorCode::Unsupported, "q^d too large to count");
    }
    unsigned __int128 sum = qd + 1;
    for (uint32_t k = 1; k < d; ++k) {
        if (d % k == 0) sum -= (unsigned __int128)k * count_places(field, k);
    }
    return static_cast<uint64_t>(sum / d);
}

// All places of degree d in canonical order. Degree 1: infinite place first,
// then x - a for a in canonical element order. Degree >= 2: monic irreducible
// polynomials filtered in canonical polynomial order.
inline std::vector<Place> enumerate_places(const FieldConfig& field, uint32_t d) {
    if (d < 1) fail(ErrorCode::DegreeMismatch, "place degree must be >= 1");
    const uint64_t q = field.q();
    std::vector<Place> out;
    if (d == 1) {
        out.push_back(place_infinity());
        for (uint64_t a = 0; a < q; ++a) {
            FieldElement e = elem_at_index(field, a);
            out.push_back(place_finite(poly_from_coeffs(field, {elem_neg(e), elem_one(field)})));
        }
        return out;
    }
    unsigned __int128 total = 1;
    for (uint32_t i = 0; i < d; ++i) total *= q;
    if (total > kMaxEnumeration) fail(ErrorCode::Unsupported, "enumeration beyond q^d = 2^24 is out of scope");
    for (uint64_t w = 0; w < (uint64_t)total; ++w) {
        std::vector<FieldElement> coeffs(d + 1, elem_zero(field));
        uint64_t t = w;
        for (uint32_t i = 0; i < d; ++i) {
            coeffs[i] = elem_at_index(field, t % q);
            t /= q;
        }
        coeffs[d] = elem_one(field);
        Poly f{&field, std::move(coeffs)};
        if (poly_is_irreducible(f)) out.push_back(place_finite(std::move(f)));
    }
    return out;
}

// First monic irreducible of degree d in canonical order, skipping any
// polynomial in `exclude`. For large degrees a trial-division pre-filter by
// small irreducibles rejects most candidates before the full Rabin test; it
// only ever discards polynomials with an exhibited factor.
inline Poly first_irreducible(const FieldConfig& field, uint32_t d, const std::vector<Poly>& exclude = {}) {
    const uint64_t q = field.q();
    unsigned __int128 total = 1;
    for (uint32_t i = 0; i < d && total <= (unsigned __int128)1 << 40; ++i) total *= q;

    std::vector<Poly> small_divisors;
    if (d >= 24) {
        for (uint32_t k = 1; k <= 8; ++k) {
            unsigned __int128 qk = 1;
            for (uint32_t i = 0; i < k; ++i) qk *= q;
            if (qk > (1 << 16)) break;
            for (uint64_t w = 0; w < (uint64_t)qk; ++w) {
                std::vector<FieldElement> coeffs(k + 1, elem_zero(field));
                uint64_t t = w;
                for (uint32_t i = 0; i < k; ++i) {
                    coeffs[i] = elem_at_index(field, t % q);
                    t /= q;
                }
                coeffs[k] = elem_one(field);
                Poly g{&field, std::move(coeffs)};
                if (poly_is_irreducible(g)) small_divisors.push_back(std::move(g));
            }
        }
    }

    const uint64_t limit = total > (unsigned __int128)1 << 40 ? (uint64_t(1) << 40) : (uint64_t)total;
    for (uint64_t w = 0; w < limit; ++w) {
        std::vector<FieldElement> coeffs(d + 1, elem_zero(field));
        uint64_t t = w;
        for (uint32_t i = 0; i < d; ++i) {
            coeffs[i] = elem_at_index(field, t % q);
            t /= q;
        }
        coeffs[d] = elem_one(field);
        Poly f{&field, std::move(coeffs)};
        bool skip = false;
        for (const auto& e : exclude)
            if (poly_eq(e, f)) skip = true;
        for (const auto& g : small_divisors)
            if (!skip && poly_mod(f, g).is_zero()) skip = true;
        if (skip) continue;
        if (poly_is_irreducible(f)) return f;
    }
    fail(ErrorCode::NoIrreducibleFound, "no admissible irreducible of degree " + std::to_string(d));
}

// Residue field F_q[x]/(P(x)) at a finite place; elements are polynomials of
// degree < deg P over F_q.
struct ResidueField {
    const FieldConfig* base = nullptr;
    Place place;

    uint32_t degree() const { return place.degree(); }

    unsigned __int128 size() const {
        unsigned __int128 s = 1;
        for (uint32_t i = 0; i < degree(); ++i) s *= base->q();
        return s;
    }

    Poly reduce(const Poly& f) const { return poly_mod(f, place.minpoly); }
    Poly add(const Poly& a, const Poly& b) const { return reduce(poly_add(a, b)); }
    Poly mul(const Poly& a, const Poly& b) const { return reduce(poly_mul(a, b)); }

    Poly inv(const Poly& a) const {
        Poly r = reduce(a);
        if (r.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero residue");
        auto [g, s] = poly_half_xgcd(r, place.minpoly);
        return reduce(s);
    }
};

inline ResidueField residue_field(const Place& place) {
    if (place.infinite)
        fail(ErrorCode::InfinitePlaceHasNoQuotientRepresentation,
             "the infinite place has no quotient representation; use the leading-coefficient evaluation");
    return ResidueField{place.minpoly.field, place};
}

}  // namespace rpgc

#endif
