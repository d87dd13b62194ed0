#ifndef RPGC_EVALUATION_HPP
#define RPGC_EVALUATION_HPP

#include <cstdint>
#include <vector>

#include "rpgc/linalg.hpp"
#include "rpgc/places.hpp"

namespace rpgc {

// One interpolation point: either the leading-coefficient evaluation standing
// in for the infinite place, or a local expansion at a finite place. An
// expansion with multiplicity u > 1 is only meaningful at rational places,
// where the digit expansion in powers of (x - a) is an honest power series
// and truncated products of expansions multiply coefficientwise.
struct EvalPoint {
    enum class Kind { LeadingCoeffAtInfinity, LocalExpansion };
    Kind kind = Kind::LocalExpansion;
    Place place;
    uint32_t u = 1;

    static EvalPoint infinity_lead(const FieldConfig& f) {
        return EvalPoint{Kind::LeadingCoeffAtInfinity, Place{true, poly_zero(f)}, 1};
    }

    static EvalPoint expansion(Place p, uint32_t mult = 1) {
        if (p.infinite)
            fail(ErrorCode::Unsupported, "local expansions at the infinite place are not modeled");
        if (mult < 1) fail(ErrorCode::UnsupportedMultiplicity, "multiplicity must be >= 1");
        if (mult > 1 && p.degree() != 1)
            fail(ErrorCode::UnsupportedMultiplicity, "multiplicity > 1 needs a rational place");
        return EvalPoint{Kind::LocalExpansion, std::move(p), mult};
    }

    bool is_infinity_lead() const { return kind == Kind::LeadingCoeffAtInfinity; }
    uint32_t weight() const { return is_infinity_lead() ? 1 : u * place.degree(); }
    const FieldConfig& field() const { return *place.minpoly.field; }

    bool operator==(const EvalPoint& o) const {
        return kind == o.kind && u == o.u && place == o.place;
    }
};

// Evaluation of one polynomial at a point list. Each block holds u residue
// field elements (expansion coefficients); the infinity block holds the single
// leading coefficient. Flattening over F_q yields weight() entries per block.
struct EvalBlock {
    EvalPoint point;
    std::vector<std::vector<FieldElement>> entries;  // entries[i] has deg(place) digits
};

struct EvalVector {
    std::vector<EvalBlock> blocks;

    std::vector<FieldElement> flatten() const {
        std::vector<FieldElement> out;
        for (const auto& b : blocks)
            for (const auto& entry : b.entries) out.insert(out.end(), entry.begin(), entry.end());
        return out;
    }
};

// f mod minpoly, the residue of f in F_q[x]/(P(x)).
inline Poly residue_at(const Poly& f, const Place& place) {
    if (place.infinite)
        fail(ErrorCode::InfinitePlaceHasNoQuotientRepresentation, "no residue at the infinite place");
    return poly_mod(f, place.minpoly);
}

// First u coefficients of f rewritten in powers of (x - a): Hasse/Taylor
// coefficients, computed by iterated synthetic division so that they are valid
// in any characteristic.
inline std::vector<FieldElement> hasse_expansion(const Poly& f, const FieldElement& a, uint32_t u) {
    if (u < 1) fail(ErrorCode::UnsupportedMultiplicity, "expansion order must be >= 1");
    std::vector<FieldElement> out;
    out.reserve(u);
    std::vector<FieldElement> cur = f.c;
    for (uint32_t k = 0; k < u; ++k) {
        if (cur.empty()) {
            out.push_back(elem_zero(*f.field));
            continue;
        }
        // synthetic division by (x - a): cur[0..d-1] becomes the quotient,
        // the carry is the remainder and the next expansion coefficient
        FieldElement rem = elem_zero(*f.field);
        for (std::size_t i = cur.size(); i-- > 0;) {
            FieldElement v = elem_add(cur[i], elem_mul(rem, a));
            cur[i] = rem;
            rem = v;
        }
        out.push_back(rem);
        cur.pop_back();
    }
    return out;
}

// Coefficient of x^k in f, the evaluation "at infinity" of f in L(kP_inf).
inline FieldElement leading_coeff(const Poly& f, uint32_t k) {
    if (f.degree() > static_cast<int64_t>(k))
        fail(ErrorCode::DegreeTooLarge, "polynomial does not lie in L(kP_inf)");
    return f.coeff(k);
}

namespace detail {

// Columns l = 0..ncols-1 are x^l mod P(x), built with the column recurrence
// M[0][l] = -a_0 M[d-1][l-1], M[k][l] = M[k-1][l-1] - a_k M[d-1][l-1].
inline Mat reduction_matrix(const Place& place, std::size_t ncols) {
    const Poly& P = place.minpoly;
    const FieldConfig& f = *P.field;
    const std::size_t d = static_cast<std::size_t>(P.degree());
    Mat m = Mat::zero(f, d, ncols);
    for (std::size_t l = 0; l < ncols && l < d; ++l) m.at(l, l) = elem_one(f);
    for (std::size_t l = d; l < ncols; ++l) {
        const FieldElement top = m.at(d - 1, l - 1);
        m.at(0, l) = elem_neg(elem_mul(P.c[0], top));
        for (std::size_t k = 1; k < d; ++k)
            m.at(k, l) = elem_sub(m.at(k - 1, l - 1), elem_mul(P.c[k], top));
    }
    return m;
}

// Rows i = 0..u-1, columns l: i-th expansion coefficient of x^l at a, via
// the Pascal-style recurrence h_i(x^{l+1}) = a h_i(x^l) + h_{i-1}(x^l).
inline Mat expansion_matrix(const FieldElement& a, uint32_t u, std::size_t ncols) {
    const FieldConfig& f = *a.field;
    Mat m = Mat::zero(f, u, ncols);
    if (ncols == 0) return m;
    m.at(0, 0) = elem_one(f);
    for (std::size_t l = 1; l < ncols; ++l) {
        for (uint32_t i = 0; i < u; ++i) {
            FieldElement v = elem_mul(a, m.at(i, l - 1));
            if (i > 0) v = elem_add(v, m.at(i - 1, l - 1));
            m.at(i, l) = v;
        }
    }
    return m;
}

}  // namespace detail

// Row block of the evaluation map on the monomial basis {1, x, ..., x^{ncols-1}}:
// multiplying it by a coefficient vector gives the flattened evaluation block.
inline Mat eval_row_block(const EvalPoint& point, std::size_t ncols) {
    if (ncols < 1) fail(ErrorCode::DegreeMismatch, "need at least one column");
    if (point.is_infinity_lead()) {
        Mat m = Mat::zero(point.field(), 1, ncols);
        m.at(0, ncols - 1) = elem_one(*m.field);
        return m;
    }
    if (point.u > 1) {
        // rational place x - a: local parameter x - a, digits are Hasse coefficients
        const FieldElement a = elem_neg(point.place.minpoly.c[0]);
        return detail::expansion_matrix(a, point.u, ncols);
    }
    return detail::reduction_matrix(point.place, ncols);
}

// Evaluate f (deg f <= k) at every point of an ordered point list; the
// infinity block reads the coefficient of x^k.
inline EvalVector evaluate_points(const Poly& f, const std::vector<EvalPoint>& points, uint32_t k) {
    if (f.degree() > static_cast<int64_t>(k)) fail(ErrorCode::DegreeTooLarge, "degree above the cap k");
    EvalVector out;
    out.blocks.reserve(points.size());
    for (const auto& pt : points) {
        EvalBlock block{pt, {}};
        if (pt.is_infinity_lead()) {
            block.entries.push_back({leading_coeff(f, k)});
        } else if (pt.u > 1 || pt.place.degree() == 1) {
            const FieldElement a = elem_neg(pt.place.minpoly.c[0]);
            for (const auto& coeff : hasse_expansion(f, a, pt.u)) block.entries.push_back({coeff});
        } else {
            Poly r = residue_at(f, pt.place);
            std::vector<FieldElement> digits(pt.place.degree(), elem_zero(*f.field));
            for (std::size_t i = 0; i < r.c.size(); ++i) digits[i] = r.c[i];
            block.entries.push_back(std::move(digits));
        }
        out.blocks.push_back(std::move(block));
    }
    return out;
}

}  // namespace rpgc

#endif
