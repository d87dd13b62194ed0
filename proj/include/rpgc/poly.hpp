#ifndef RPGC_POLY_HPP
#define RPGC_POLY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rpgc/field.hpp"

namespace rpgc {

// Dense polynomial over F_q, coefficients low-to-high, always normalized (no
// trailing zeros; the zero polynomial has an empty coefficient list).
struct Poly {
    const FieldConfig* field = nullptr;
    std::vector<FieldElement> c;

    bool is_zero() const noexcept { return c.empty(); }
    // degree of the zero polynomial is reported as -1 (stands in for -infinity)
    int64_t degree() const noexcept { return static_cast<int64_t>(c.size()) - 1; }
    bool is_monic() const { return !c.empty() && elem_eq(c.back(), elem_one(*field)); }

    FieldElement coeff(std::size_t i) const { return i < c.size() ? c[i] : elem_zero(*field); }
};

inline Poly poly_normalize(Poly f) {
    while (!f.c.empty() && f.c.back().is_zero()) f.c.pop_back();
    return f;
}

inline Poly poly_zero(const FieldConfig& f) { return Poly{&f, {}}; }

inline Poly poly_from_coeffs(const FieldConfig& f, std::vector<FieldElement> coeffs) {
    for (const auto& e : coeffs)
        if (!detail::same_field(e.field, &f)) fail(ErrorCode::ConfigMismatch, "coefficient from a different field");
    return poly_normalize(Poly{&f, std::move(coeffs)});
}

// convenience for fields where each coefficient is a single digit vector
inline Poly poly_from_digit_rows(const FieldConfig& f, const std::vector<std::vector<uint32_t>>& rows) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(rows.size());
    for (const auto& row : rows) coeffs.push_back(elem_from_digits(f, row));
    return poly_normalize(Poly{&f, std::move(coeffs)});
}

// prime-field shorthand: one integer per coefficient
inline Poly poly_from_ints(const FieldConfig& f, const std::vector<uint32_t>& ints) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(ints.size());
    for (uint32_t v : ints) {
        FieldElement e = elem_zero(f);
        e.d[0] = static_cast<uint8_t>(v % f.p);
        coeffs.push_back(e);
    }
    return poly_normalize(Poly{&f, std::move(coeffs)});
}

inline Poly poly_x(const FieldConfig& f) { return poly_from_coeffs(f, {elem_zero(f), elem_one(f)}); }

inline Poly poly_const(const FieldElement& e) { return poly_normalize(Poly{e.field, {e}}); }

inline Poly poly_monomial(const FieldConfig& f, std::size_t k) {
    std::vector<FieldElement> c(k + 1, elem_zero(f));
    c[k] = elem_one(f);
    return Poly{&f, std::move(c)};
}

namespace detail {
inline void require_same_field(const Poly& a, const Poly& b) {
    if (!same_field(a.field, b.field)) fail(ErrorCode::ConfigMismatch, "polynomials over different fields");
}
}  // namespace detail

inline bool poly_eq(const Poly& a, const Poly& b) {
    detail::require_same_field(a, b);
    if (a.c.size() != b.c.size()) return false;
    for (std::size_t i = 0; i < a.c.size(); ++i)
        if (!elem_eq(a.c[i], b.c[i])) return false;
    return true;
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    detail::require_same_field(a, b);
    Poly r{a.field, {}};
    const std::size_t n = std::max(a.c.size(), b.c.size());
    r.c.reserve(n);
    for (std::size_t i = 0; i < n; ++i) r.c.push_back(elem_add(a.coeff(i), b.coeff(i)));
    return poly_normalize(std::move(r));
}

inline Poly poly_neg(const Poly& a) {
    Poly r = a;
    for (auto& e : r.c) e = elem_neg(e);
    return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

inline Poly poly_scale(const Poly& a, const FieldElement& s) {
    Poly r{a.field, {}};
    r.c.reserve(a.c.size());
    for (const auto& e : a.c) r.c.push_back(elem_mul(e, s));
    return poly_normalize(std::move(r));
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
    detail::require_same_field(a, b);
    if (a.is_zero() || b.is_zero()) return poly_zero(*a.field);
    Poly r{a.field, std::vector<FieldElement>(a.c.size() + b.c.size() - 1, elem_zero(*a.field))};
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c.size(); ++j)
            r.c[i + j] = elem_add(r.c[i + j], elem_mul(a.c[i], b.c[j]));
    }
    return poly_normalize(std::move(r));
}

inline std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b) {
    detail::require_same_field(a, b);
    if (b.is_zero()) fail(ErrorCode::DivisionByZero, "polynomial division by zero");
    if (a.degree() < b.degree()) return {poly_zero(*a.field), a};
    const FieldElement lead_inv = elem_inv(b.c.back());
    std::vector<FieldElement> rem = a.c;
    std::vector<FieldElement> quot(a.c.size() - b.c.size() + 1, elem_zero(*a.field));
    for (std::size_t i = a.c.size(); i-- >= b.c.size();) {
        if (!rem[i].is_zero()) {
            FieldElement f = elem_mul(rem[i], lead_inv);
            quot[i - (b.c.size() - 1)] = f;
            for (std::size_t j = 0; j < b.c.size(); ++j)
                rem[i - (b.c.size() - 1) + j] = elem_sub(rem[i - (b.c.size() - 1) + j], elem_mul(f, b.c[j]));
        }
        if (i == b.c.size() - 1) break;
    }
    return {poly_normalize(Poly{a.field, std::move(quot)}), poly_normalize(Poly{a.field, std::move(rem)})};
}

inline Poly poly_mod(const Poly& a, const Poly& b) { return poly_divmod(a, b).second; }

inline Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& mod) { return poly_mod(poly_mul(a, b), mod); }

inline Poly poly_make_monic(const Poly& a) {
    if (a.is_zero()) return a;
    return poly_scale(a, elem_inv(a.c.back()));
}

inline Poly poly_gcd(Poly a, Poly b) {
    detail::require_same_field(a, b);
    while (!b.is_zero()) {
        Poly r = poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return poly_make_monic(a);
}

// extended gcd: returns (g, s) with s*a = g mod m, g = gcd(a, m)
inline std::pair<Poly, Poly> poly_half_xgcd(const Poly& a, const Poly& m) {
    Poly r0 = m, r1 = a;
    Poly s0 = poly_zero(*a.field), s1 = poly_const(elem_one(*a.field));
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divmod(r0, r1);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.is_zero()) return {r0, s0};
    FieldElement inv = elem_inv(r0.c.back());
    return {poly_scale(r0, inv), poly_scale(s0, inv)};
}

inline Poly poly_powmod(const Poly& base, uint64_t e, const Poly& mod) {
    Poly b = poly_mod(base, mod);
    Poly r = poly_const(elem_one(*base.field));
    bool r_trivial = true;
    while (e) {
        if (e & 1) {
            r = r_trivial ? b : poly_mulmod(r, b, mod);
            r_trivial = false;
        }
        e >>= 1;
        if (e) b = poly_mulmod(b, b, mod);
    }
    return r;
}

// Rabin's criterion: f of degree d is irreducible over F_q iff
// x^{q^d} = x (mod f) and gcd(x^{q^{d/r}} - x, f) = 1 for every prime r | d.
inline bool poly_is_irreducible(const Poly& f) {
    if (!f.is_monic()) fail(ErrorCode::NotMonic, "irreducibility test needs a monic polynomial");
    const int64_t d = f.degree();
    if (d < 1) fail(ErrorCode::DegreeMismatch, "irreducibility test needs degree >= 1");
    if (d == 1) return true;
    const uint64_t q = f.field->q();

    // frob[j] = x^{q^j} mod f, built by iterating the q-power map
    std::vector<Poly> frob(static_cast<std::size_t>(d) + 1, poly_zero(*f.field));
    frob[0] = poly_mod(poly_x(*f.field), f);
    for (int64_t j = 1; j <= d; ++j) frob[j] = poly_powmod(frob[j - 1], q, f);

    const Poly x = poly_mod(poly_x(*f.field), f);
    if (!poly_eq(frob[static_cast<std::size_t>(d)], x)) return false;

    int64_t dd = d;
    for (int64_t r = 2; r * r <= dd; ++r) {
        if (dd % r) continue;
        Poly g = poly_gcd(poly_sub(frob[static_cast<std::size_t>(d / r)], x), f);
        if (g.degree() != 0) return false;
        while (dd % r == 0) dd /= r;
    }
    if (dd > 1) {  // dd is the remaining prime factor
        Poly g = poly_gcd(poly_sub(frob[static_cast<std::size_t>(d / dd)], x), f);
        if (g.degree() != 0) return false;
    }
    return true;
}

inline bool modulus_is_irreducible(uint32_t p, const std::vector<uint32_t>& modulus) {
    static thread_local std::vector<FieldPtr> prime_cache;
    FieldPtr base;
    for (const auto& f : prime_cache)
        if (f->p == p) base = f;
    if (!base) {
        base = field_make(p, 1);
        prime_cache.push_back(base);
    }
    return poly_is_irreducible(poly_from_ints(*base, modulus));
}

// Canonical order on polynomials of equal degree: counting order of the
// coefficient vector with the high coefficient most significant, each
// coefficient ranked by elem_index. Total order: by degree first.
inline uint64_t poly_order_value(const Poly& f) {
    const uint64_t q = f.field->q();
    uint64_t v = 0;
    for (std::size_t i = f.c.size(); i-- > 0;) v = v * q + elem_index(f.c[i]);
    return v;
}

// Wire format: comma-separated element encodings, low-to-high; zero is "".
inline std::string poly_to_wire(const Poly& f) {
    std::string s;
    for (std::size_t i = 0; i < f.c.size(); ++i) {
        if (i) s += ',';
        s += elem_to_wire(f.c[i]);
    }
    return s;
}

inline Poly poly_from_wire(const FieldConfig& f, const std::string& s) {
    if (s.empty()) return poly_zero(f);
    std::vector<FieldElement> coeffs;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) coeffs.push_back(elem_from_wire(f, part));
    return poly_normalize(Poly{&f, std::move(coeffs)});
}

}  // namespace rpgc

#endif
