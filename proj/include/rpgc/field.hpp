#ifndef RPGC_FIELD_HPP
#define RPGC_FIELD_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "rpgc/errors.hpp"

namespace rpgc {

// Digits of one field element, residues mod p, low-to-high. Extension degrees
// beyond kMaxFieldDigits (and characteristics beyond one byte) are out of the
// desk-scale envelope this library targets.
inline constexpr std::size_t kMaxFieldDigits = 12;

class FieldConfig;
using FieldPtr = std::shared_ptr<const FieldConfig>;

// F_q = F_p[t]/(m(t)), q = p^m. Immutable after construction.
class FieldConfig {
  public:
    uint32_t p;                     // prime characteristic
    uint32_t m;                     // extension degree over F_p
    std::vector<uint32_t> modulus;  // monic, degree m, coefficients low-to-high; t itself when m == 1

    uint64_t q() const noexcept {
        uint64_t r = 1;
        for (uint32_t i = 0; i < m; ++i) r *= p;
        return r;
    }

    bool operator==(const FieldConfig& o) const noexcept {
        return p == o.p && m == o.m && modulus == o.modulus;
    }
};

struct FieldElement {
    const FieldConfig* field = nullptr;
    std::array<uint8_t, kMaxFieldDigits> d{};  // digits [m, kMaxFieldDigits) stay zero

    bool is_zero() const noexcept {
        for (uint32_t i = 0; i < field->m; ++i)
            if (d[i]) return false;
        return true;
    }
};

namespace detail {

inline bool same_field(const FieldConfig* a, const FieldConfig* b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_field(const FieldElement& a, const FieldElement& b) {
    if (!same_field(a.field, b.field)) fail(ErrorCode::ConfigMismatch, "operands belong to different fields");
}

inline bool is_small_prime(uint32_t p) {
    if (p < 2) return false;
    for (uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace detail

inline FieldElement elem_zero(const FieldConfig& f) {
    FieldElement e;
    e.field = &f;
    return e;
}

inline FieldElement elem_one(const FieldConfig& f) {
    FieldElement e = elem_zero(f);
    e.d[0] = 1;
    return e;
}

inline FieldElement elem_from_digits(const FieldConfig& f, const std::vector<uint32_t>& digits) {
    if (digits.size() > f.m) fail(ErrorCode::DegreeMismatch, "too many digits for this field");
    FieldElement e = elem_zero(f);
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (digits[i] >= f.p) fail(ErrorCode::FieldMismatch, "digit out of range [0,p)");
        e.d[i] = static_cast<uint8_t>(digits[i]);
    }
    return e;
}

// Canonical order on F_q: counting order of the base-p digit vector, high
// digit most significant. index(0)=0, index(1)=1, ..., index(t)=p, ...
inline uint64_t elem_index(const FieldElement& a) {
    uint64_t v = 0;
    for (uint32_t i = a.field->m; i-- > 0;) v = v * a.field->p + a.d[i];
    return v;
}

inline FieldElement elem_at_index(const FieldConfig& f, uint64_t index) {
    FieldElement e = elem_zero(f);
    for (uint32_t i = 0; i < f.m; ++i) {
        e.d[i] = static_cast<uint8_t>(index % f.p);
        index /= f.p;
    }
    if (index) fail(ErrorCode::DegreeMismatch, "element index out of range");
    return e;
}

inline bool elem_eq(const FieldElement& a, const FieldElement& b) {
    detail::require_same_field(a, b);
    for (uint32_t i = 0; i < a.field->m; ++i)
        if (a.d[i] != b.d[i]) return false;
    return true;
}

inline FieldElement elem_add(const FieldElement& a, const FieldElement& b) {
    detail::require_same_field(a, b);
    const uint32_t p = a.field->p;
    FieldElement r = a;
    for (uint32_t i = 0; i < a.field->m; ++i) {
        uint32_t s = uint32_t(r.d[i]) + b.d[i];
        if (s >= p) s -= p;
        r.d[i] = static_cast<uint8_t>(s);
    }
    return r;
}

inline FieldElement elem_neg(const FieldElement& a) {
    const uint32_t p = a.field->p;
    FieldElement r = a;
    for (uint32_t i = 0; i < a.field->m; ++i) r.d[i] = static_cast<uint8_t>(a.d[i] ? p - a.d[i] : 0);
    return r;
}

inline FieldElement elem_sub(const FieldElement& a, const FieldElement& b) { return elem_add(a, elem_neg(b)); }

inline FieldElement elem_scale(const FieldElement& a, uint32_t c) {
    // multiply by a prime-field constant
    const uint32_t p = a.field->p;
    c %= p;
    FieldElement r = elem_zero(*a.field);
    for (uint32_t i = 0; i < a.field->m; ++i) r.d[i] = static_cast<uint8_t>((uint32_t(a.d[i]) * c) % p);
    return r;
}

inline FieldElement elem_mul(const FieldElement& a, const FieldElement& b) {
    detail::require_same_field(a, b);
    const FieldConfig& f = *a.field;
    const uint32_t p = f.p;
    const uint32_t m = f.m;
    if (m == 1) {
        FieldElement r = elem_zero(f);
        r.d[0] = static_cast<uint8_t>((uint32_t(a.d[0]) * b.d[0]) % p);
        return r;
    }
    std::array<uint32_t, 2 * kMaxFieldDigits> buf{};
    for (uint32_t i = 0; i < m; ++i) {
        if (!a.d[i]) continue;
        for (uint32_t j = 0; j < m; ++j) buf[i + j] += uint32_t(a.d[i]) * b.d[j];
    }
    // fold x^i for i >= m using x^m = -sum modulus[j] x^j
    for (uint32_t i = 2 * m - 2; i >= m; --i) {
        uint32_t c = buf[i] % p;
        if (c) {
            for (uint32_t j = 0; j < m; ++j) buf[i - m + j] += c * ((p - f.modulus[j] % p) % p);
        }
        if (i == m) break;
    }
    FieldElement r = elem_zero(f);
    for (uint32_t i = 0; i < m; ++i) r.d[i] = static_cast<uint8_t>(buf[i] % p);
    return r;
}

inline FieldElement elem_pow(const FieldElement& a, unsigned __int128 e) {
    FieldElement base = a;
    FieldElement r = elem_one(*a.field);
    while (e) {
        if (e & 1) r = elem_mul(r, base);
        base = elem_mul(base, base);
        e >>= 1;
    }
    return r;
}

inline FieldElement elem_inv(const FieldElement& a) {
    if (a.is_zero()) fail(ErrorCode::DivisionByZero, "inverse of zero");
    const FieldConfig& f = *a.field;
    unsigned __int128 q = 1;
    for (uint32_t i = 0; i < f.m; ++i) q *= f.p;
    return elem_pow(a, q - 2);
}

// Wire format: base-p digits joined by '.', low-to-high ("1.1" = w+1 in F_4).
inline std::string elem_to_wire(const FieldElement& a) {
    std::string s;
    for (uint32_t i = 0; i < a.field->m; ++i) {
        if (i) s += '.';
        s += std::to_string(uint32_t(a.d[i]));
    }
    return s;
}

inline FieldElement elem_from_wire(const FieldConfig& f, const std::string& s) {
    std::vector<uint32_t> digits;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, '.')) {
        if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
            fail(ErrorCode::SchemaViolation, "malformed element '" + s + "'");
        digits.push_back(static_cast<uint32_t>(std::stoul(part)));
    }
    if (digits.size() != f.m) fail(ErrorCode::DegreeMismatch, "element '" + s + "' needs exactly m digits");
    return elem_from_digits(f, digits);
}

// Defined in poly.hpp; needed here to validate a modulus.
bool modulus_is_irreducible(uint32_t p, const std::vector<uint32_t>& modulus);

inline FieldPtr field_make(uint32_t p, uint32_t m, const std::vector<uint32_t>& modulus = {}) {
    if (!detail::is_small_prime(p)) fail(ErrorCode::NotPrime, "p = " + std::to_string(p) + " is not prime");
    if (p > 251) fail(ErrorCode::Unsupported, "characteristic above 251 is out of scope");
    if (m < 1 || m > kMaxFieldDigits)
        fail(ErrorCode::Unsupported, "extension degree m must be in [1," + std::to_string(kMaxFieldDigits) + "]");

    auto cfg = std::make_shared<FieldConfig>();
    cfg->p = p;
    cfg->m = m;

    if (m == 1) {
        if (!modulus.empty() && modulus != std::vector<uint32_t>{0, 1})
            fail(ErrorCode::DegreeMismatch, "for m = 1 the modulus is the identity polynomial t");
        cfg->modulus = {0, 1};
        return cfg;
    }

    if (!modulus.empty()) {
        if (modulus.size() != m + 1 || modulus.back() != 1)
            fail(ErrorCode::DegreeMismatch, "modulus must be monic of degree m");
        for (uint32_t c : modulus)
            if (c >= p) fail(ErrorCode::FieldMismatch, "modulus coefficient out of range [0,p)");
        if (!modulus_is_irreducible(p, modulus)) fail(ErrorCode::ReducibleModulus, "modulus is reducible over F_p");
        cfg->modulus = modulus;
        return cfg;
    }

    // canonically-first monic irreducible of degree m over F_p
    uint64_t count = 1;
    for (uint32_t i = 0; i < m; ++i) count *= p;
    for (uint64_t w = 0; w < count; ++w) {
        std::vector<uint32_t> cand(m + 1, 0);
        uint64_t t = w;
        for (uint32_t i = 0; i < m; ++i) {
            cand[i] = static_cast<uint32_t>(t % p);
            t /= p;
        }
        cand[m] = 1;
        if (modulus_is_irreducible(p, cand)) {
            cfg->modulus = cand;
            return cfg;
        }
    }
    fail(ErrorCode::NoIrreducibleFound, "no monic irreducible of requested degree");  // unreachable
}

}  // namespace rpgc

#endif
