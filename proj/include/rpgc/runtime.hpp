#ifndef RPGC_RUNTIME_HPP
#define RPGC_RUNTIME_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rpgc/compiler.hpp"

namespace rpgc {

// Element of F_{q^n} = F_q[x]/(Q) in the basis {1, x, ..., x^{n-1}}.
struct ExtElement {
    std::vector<FieldElement> coeffs;  // exactly n entries
};

inline ExtElement ext_from_poly(const CompiledAlgorithm& alg, const Poly& f) {
    if (!detail::same_field(f.field, alg.field.get()))
        fail(ErrorCode::ConfigMismatch, "element lives in a different field");
    if (f.degree() >= int64_t(alg.n)) fail(ErrorCode::DegreeMismatch, "element needs degree < n");
    ExtElement e;
    e.coeffs.assign(alg.n, elem_zero(*alg.field));
    for (std::size_t i = 0; i < f.c.size(); ++i) e.coeffs[i] = f.c[i];
    return e;
}

inline Poly ext_to_poly(const CompiledAlgorithm& alg, const ExtElement& e) {
    return poly_normalize(Poly{alg.field.get(), e.coeffs});
}

inline ExtElement ext_one(const CompiledAlgorithm& alg) {
    return ext_from_poly(alg, poly_const(elem_one(*alg.field)));
}

inline bool ext_eq(const ExtElement& a, const ExtElement& b) {
    if (a.coeffs.size() != b.coeffs.size()) return false;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i)
        if (!elem_eq(a.coeffs[i], b.coeffs[i])) return false;
    return true;
}

// Bilinear multiplications actually performed during one product, split per
// top-level interpolation point.
struct MultTrace {
    uint64_t total = 0;
    std::vector<uint64_t> per_point;
};

namespace detail {

// Runs one core: evaluate both factors, multiply pointwise, reconstruct the
// coefficients of the product polynomial (degree <= 2n-2). The caller reduces
// mod its own modulus. Returns the bilinear multiplications performed.
inline uint64_t core_multiply(const CompiledAlgorithm& alg, const DegreeCore& core,
                              const std::vector<FieldElement>& a, const std::vector<FieldElement>& b,
                              std::vector<FieldElement>& product_out, MultTrace* trace) {
    const std::vector<FieldElement> ea = mat_vec(core.evalL, a);
    const std::vector<FieldElement> eb = mat_vec(core.evalL, b);
    std::vector<FieldElement> prod(ea.size(), elem_zero(*alg.field));
    uint64_t performed = 0;

    for (const auto& entry : core.schedule) {
        uint64_t here = 0;
        switch (entry.kind) {
            case ScheduleEntry::Kind::ScalarMult: {
                prod[entry.offset] = elem_mul(ea[entry.offset], eb[entry.offset]);
                here = 1;
                break;
            }
            case ScheduleEntry::Kind::TruncatedProduct: {
                const TruncScheme& scheme = trunc_scheme(1, entry.u);
                std::vector<FieldElement> products;
                products.reserve(scheme.product_terms.size());
                for (const auto& terms : scheme.product_terms) {
                    FieldElement fa = elem_zero(*alg.field), fb = elem_zero(*alg.field);
                    for (uint32_t idx : terms) {
                        fa = elem_add(fa, ea[entry.offset + idx]);
                        fb = elem_add(fb, eb[entry.offset + idx]);
                    }
                    products.push_back(elem_mul(fa, fb));
                    ++here;
                }
                for (uint32_t k = 0; k < entry.u; ++k) {
                    FieldElement acc = elem_zero(*alg.field);
                    const auto& combo = scheme.output_coeffs[k];
                    for (std::size_t j = 0; j < combo.size(); ++j) {
                        if (combo[j] == 0) continue;
                        FieldElement term = products[j];
                        if (combo[j] < 0) term = elem_neg(term);
                        // scheme coefficients are only ever -1, 0 or 1
                        acc = elem_add(acc, term);
                    }
                    prod[entry.offset + k] = acc;
                }
                break;
            }
            case ScheduleEntry::Kind::SubAlgorithm: {
                const DegreeCore& sub = alg.cores.at(entry.degree);
                std::vector<FieldElement> ra(ea.begin() + entry.offset,
                                             ea.begin() + entry.offset + entry.width);
                std::vector<FieldElement> rb(eb.begin() + entry.offset,
                                             eb.begin() + entry.offset + entry.width);
                std::vector<FieldElement> unreduced;
                here = core_multiply(alg, sub, ra, rb, unreduced, nullptr);
                const std::vector<FieldElement> reduced = mat_vec(entry.reduce, unreduced);
                for (uint32_t i = 0; i < entry.width; ++i) prod[entry.offset + i] = reduced[i];
                break;
            }
        }
        performed += here;
        if (trace) trace->per_point.push_back(here);
    }

    product_out = mat_vec(core.recon, prod);
    return performed;
}

}  // namespace detail

inline std::pair<ExtElement, MultTrace> multiply(const CompiledAlgorithm& alg, const ExtElement& x,
                                                 const ExtElement& y) {
    if (x.coeffs.size() != alg.n || y.coeffs.size() != alg.n)
        fail(ErrorCode::ConfigMismatch, "operands do not match the algorithm's extension degree");
    for (const auto& e : x.coeffs)
        if (!detail::same_field(e.field, alg.field.get()))
            fail(ErrorCode::ConfigMismatch, "operand bound to a different field");
    MultTrace trace;
    std::vector<FieldElement> h;
    trace.total = detail::core_multiply(alg, alg.top, x.coeffs, y.coeffs, h, &trace);
    ExtElement z;
    z.coeffs = mat_vec(alg.reduceQ, h);
    return {std::move(z), std::move(trace)};
}

// Schoolbook product followed by reduction mod Q; the independent reference
// the compiled pipeline is checked against.
inline ExtElement oracle_multiply(const CompiledAlgorithm& alg, const ExtElement& x, const ExtElement& y) {
    const Poly fx = ext_to_poly(alg, x);
    const Poly fy = ext_to_poly(alg, y);
    return ext_from_poly(alg, poly_mod(poly_mul(fx, fy), alg.Q));
}

// ---------------------------------------------------------------------------
// Reproducible randomness: splitmix64, mapped to field elements by base-p
// digit extraction.

class SplitMix64 {
  public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

  private:
    uint64_t state_;
};

inline FieldElement random_element(const FieldConfig& field, SplitMix64& rng) {
    uint64_t v = rng.next();
    FieldElement e = elem_zero(field);
    for (uint32_t i = 0; i < field.m; ++i) {
        e.d[i] = static_cast<uint8_t>(v % field.p);
        v /= field.p;
    }
    return e;
}

inline ExtElement random_ext_element(const CompiledAlgorithm& alg, SplitMix64& rng) {
    ExtElement e;
    e.coeffs.reserve(alg.n);
    for (uint32_t i = 0; i < alg.n; ++i) e.coeffs.push_back(random_element(*alg.field, rng));
    return e;
}

inline Poly random_poly(const FieldConfig& field, SplitMix64& rng, uint32_t max_degree) {
    std::vector<FieldElement> coeffs;
    coeffs.reserve(max_degree + 1);
    for (uint32_t i = 0; i <= max_degree; ++i) coeffs.push_back(random_element(field, rng));
    return poly_normalize(Poly{&field, std::move(coeffs)});
}

struct VerifyReport {
    bool pass = false;
    uint64_t bilinear_count = 0;
    uint32_t trials = 0;
    uint64_t seed = 0;
    std::string failure;  // empty when pass
};

// Seeded random products compared against the schoolbook oracle; also checks
// that the runtime trace total equals the compiled static count every time.
inline VerifyReport verify(const CompiledAlgorithm& alg, uint32_t trials, uint64_t seed) {
    if (trials < 1) fail(ErrorCode::DegreeMismatch, "verify needs at least one trial");
    VerifyReport report;
    report.bilinear_count = alg.bilinear_count();
    report.trials = trials;
    report.seed = seed;
    for (uint32_t t = 0; t < trials; ++t) {
        SplitMix64 rng(seed + t);
        const ExtElement x = random_ext_element(alg, rng);
        const ExtElement y = random_ext_element(alg, rng);
        const auto [z, trace] = multiply(alg, x, y);
        const ExtElement want = oracle_multiply(alg, x, y);
        if (!ext_eq(z, want)) {
            report.failure = "trial " + std::to_string(t) + ": product mismatch for x=" +
                             poly_to_wire(ext_to_poly(alg, x)) + " y=" + poly_to_wire(ext_to_poly(alg, y));
            return report;
        }
        if (trace.total != alg.bilinear_count()) {
            report.failure = "trial " + std::to_string(t) + ": trace total " + std::to_string(trace.total) +
                             " != static count " + std::to_string(alg.bilinear_count());
            return report;
        }
    }
    report.pass = true;
    return report;
}

inline VerifyReport verify(FieldPtr field, uint32_t n, Strategy strategy, uint32_t trials, uint64_t seed,
                           uint32_t umax = 3) {
    const CompiledAlgorithm alg = compile(std::move(field), n, strategy, umax);
    return verify(alg, trials, seed);
}

}  // namespace rpgc

#endif
