#ifndef RPGC_COMPILER_HPP
#define RPGC_COMPILER_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rpgc/strategy.hpp"

namespace rpgc {

// Product rule for one interpolation point.
struct ScheduleEntry {
    enum class Kind { ScalarMult, TruncatedProduct, SubAlgorithm };
    Kind kind = Kind::ScalarMult;
    uint32_t u = 1;        // TruncatedProduct
    uint32_t degree = 0;   // SubAlgorithm: which shared core multiplies this block
    Mat reduce;            // SubAlgorithm: d x (2d-1), residues of x^i mod this place
    uint32_t offset = 0;   // first row of this point's block in the flattened vectors
    uint32_t width = 1;
};

// Everything shared by all places of one degree: the interpolation spec, the
// two evaluation matrices and the product schedule. Only the per-place
// reduction matrix differs between places of equal degree, and that one lives
// in the parent's schedule entry.
struct DegreeCore {
    InterpolationSpec spec;
    Mat evalL;   // (2n-1) x n, evaluation of L((n-1)P_inf)
    Mat recon;   // (2n-1) x (2n-1), inverse of the evaluation of L((2n-2)P_inf)
    std::vector<ScheduleEntry> schedule;
    uint64_t bilinear_count = 0;

    uint32_t n() const { return spec.n; }
};

struct CompiledAlgorithm {
    FieldPtr field;
    uint32_t n = 0;
    Strategy strategy = Strategy::Deg;
    uint32_t umax = 3;
    Poly Q;       // monic irreducible of degree n; F_{q^n} = F_q[x]/(Q)
    DegreeCore top;
    Mat reduceQ;  // n x (2n-1), reduction of degree <= 2n-2 polynomials mod Q
    std::map<uint32_t, DegreeCore> cores;  // shared sub-algorithms by degree

    uint64_t bilinear_count() const { return top.bilinear_count; }
};

namespace detail {

inline Mat stack_eval_rows(const InterpolationSpec& spec, std::size_t ncols) {
    Mat out = Mat::zero(*spec.field, spec.total_weight(), ncols);
    std::size_t row = 0;
    for (const auto& pt : spec.points) {
        Mat block = eval_row_block(pt, ncols);
        for (std::size_t r = 0; r < block.rows; ++r)
            for (std::size_t c = 0; c < ncols; ++c) out.at(row + r, c) = block.at(r, c);
        row += block.rows;
    }
    return out;
}

inline DegreeCore build_core(const FieldConfig& field, uint32_t n, const InterpolationSpec& spec,
                             Strategy parent, uint32_t umax, std::map<uint32_t, DegreeCore>& cores);

inline void ensure_core(const FieldConfig& field, uint32_t degree, Strategy parent, uint32_t umax,
                        std::map<uint32_t, DegreeCore>& cores) {
    if (cores.count(degree)) return;
    // sub-cores only reference strictly smaller degrees, so the recursion
    // inside build_core fills those slots before this one is inserted
    const Strategy sub = sub_strategy(field, parent, degree);
    const InterpolationSpec spec = build_spec(field, degree, sub, umax);
    DegreeCore core = build_core(field, degree, spec, sub, umax, cores);
    cores.emplace(degree, std::move(core));
}

inline DegreeCore build_core(const FieldConfig& field, uint32_t n, const InterpolationSpec& spec,
                             Strategy parent, uint32_t umax, std::map<uint32_t, DegreeCore>& cores) {
    spec.validate();
    DegreeCore core;
    core.spec = spec;
    core.evalL = stack_eval_rows(spec, n);
    core.recon = mat_inverse(stack_eval_rows(spec, 2 * n - 1));

    uint32_t offset = 0;
    for (const auto& pt : spec.points) {
        ScheduleEntry entry;
        entry.offset = offset;
        entry.width = pt.weight();
        if (pt.is_infinity_lead() || (pt.place.degree() == 1 && pt.u == 1)) {
            entry.kind = ScheduleEntry::Kind::ScalarMult;
            core.bilinear_count += 1;
        } else if (pt.place.degree() == 1) {
            entry.kind = ScheduleEntry::Kind::TruncatedProduct;
            entry.u = pt.u;
            core.bilinear_count += trunc_cost(1, pt.u);
        } else {
            entry.kind = ScheduleEntry::Kind::SubAlgorithm;
            entry.degree = pt.place.degree();
            ensure_core(field, entry.degree, parent, umax, cores);
            entry.reduce = detail::reduction_matrix(pt.place, 2 * entry.degree - 1);
            core.bilinear_count += cores.at(entry.degree).bilinear_count;
        }
        offset += entry.width;
        core.schedule.push_back(std::move(entry));
    }
    return core;
}

}  // namespace detail

// Count bilinear multiplications without materializing matrices.
inline uint64_t bilinear_complexity(const FieldConfig& field, uint32_t n, Strategy s, uint32_t umax = 3) {
    return strategy_cost(field, n, s, umax);
}

inline CompiledAlgorithm compile(FieldPtr field, uint32_t n, Strategy strategy, uint32_t umax = 3,
                                 std::optional<Poly> Q = std::nullopt) {
    if (!field) fail(ErrorCode::ConfigMismatch, "compile needs a field");
    if (n < 2) fail(ErrorCode::DegreeMismatch, "compile needs n >= 2");
    CompiledAlgorithm alg;
    alg.field = field;
    alg.n = n;
    alg.strategy = strategy;
    alg.umax = umax;

    InterpolationSpec spec = build_spec(*field, n, strategy, umax);

    std::vector<Poly> spec_minpolys;
    for (const auto& pt : spec.points)
        if (!pt.is_infinity_lead() && pt.place.degree() == n) spec_minpolys.push_back(pt.place.minpoly);

    if (Q.has_value()) {
        if (!detail::same_field(Q->field, field.get()))
            fail(ErrorCode::ConfigMismatch, "Q lives in a different field");
        if (Q->degree() != int64_t(n) || !Q->is_monic())
            fail(ErrorCode::DegreeMismatch, "Q must be monic of degree n");
        if (!poly_is_irreducible(*Q)) fail(ErrorCode::ReducibleModulus, "Q must be irreducible");
        for (const auto& mp : spec_minpolys)
            if (poly_eq(mp, *Q)) fail(ErrorCode::QInSupport, "Q may not appear among the spec's places");
        alg.Q = *Q;
    } else {
        alg.Q = first_irreducible(*field, n, spec_minpolys);
    }

    alg.top = detail::build_core(*field, n, spec, strategy, umax, alg.cores);
    alg.reduceQ = detail::reduction_matrix(place_finite(alg.Q), 2 * n - 1);
    return alg;
}

// ---------------------------------------------------------------------------
// JSON document round-trip. Every matrix entry is a base-p digit array.

namespace detail {

using json = nlohmann::json;

inline json elem_to_json(const FieldElement& e) {
    json digits = json::array();
    for (uint32_t i = 0; i < e.field->m; ++i) digits.push_back(uint32_t(e.d[i]));
    return digits;
}

inline json poly_to_json(const Poly& f) {
    json out = json::array();
    for (const auto& e : f.c) out.push_back(elem_to_json(e));
    return out;
}

inline json mat_to_json(const Mat& m) {
    json out = json::array();
    for (const auto& e : m.e) out.push_back(elem_to_json(e));
    return out;
}

inline json points_to_json(const std::vector<EvalPoint>& points) {
    json out = json::array();
    for (const auto& pt : points) {
        json rec;
        if (pt.is_infinity_lead()) {
            rec["kind"] = "lead";
            rec["place"] = "infinity";
            rec["u"] = 1;
        } else {
            rec["kind"] = "expansion";
            rec["place"] = poly_to_json(pt.place.minpoly);
            rec["u"] = pt.u;
        }
        out.push_back(rec);
    }
    return out;
}

inline json schedule_to_json(const std::vector<ScheduleEntry>& schedule) {
    json out = json::array();
    for (const auto& s : schedule) {
        json rec;
        switch (s.kind) {
            case ScheduleEntry::Kind::ScalarMult: rec["kind"] = "scalar"; break;
            case ScheduleEntry::Kind::TruncatedProduct:
                rec["kind"] = "trunc";
                rec["u"] = s.u;
                break;
            case ScheduleEntry::Kind::SubAlgorithm:
                rec["kind"] = "sub";
                rec["degree"] = s.degree;
                rec["reduce"] = mat_to_json(s.reduce);
                break;
        }
        out.push_back(rec);
    }
    return out;
}

inline json core_to_json(const DegreeCore& core) {
    json rec;
    rec["spec"] = points_to_json(core.spec.points);
    rec["evalL"] = mat_to_json(core.evalL);
    rec["recon"] = mat_to_json(core.recon);
    rec["schedule"] = schedule_to_json(core.schedule);
    rec["bilinear_count"] = core.bilinear_count;
    return rec;
}

}  // namespace detail

inline std::string export_json(const CompiledAlgorithm& alg) {
    detail::json doc = detail::core_to_json(alg.top);
    doc["p"] = alg.field->p;
    doc["m"] = alg.field->m;
    doc["modulus"] = alg.field->modulus;
    doc["n"] = alg.n;
    doc["strategy"] = strategy_name(alg.strategy);
    doc["umax"] = alg.umax;
    doc["Q"] = detail::poly_to_json(alg.Q);
    doc["reduceQ"] = detail::mat_to_json(alg.reduceQ);
    detail::json cores = detail::json::object();
    for (const auto& [d, core] : alg.cores) cores[std::to_string(d)] = detail::core_to_json(core);
    doc["cores"] = cores;
    return doc.dump(2);
}

namespace detail {

inline FieldElement elem_from_json(const FieldConfig& field, const json& j) {
    if (!j.is_array() || j.size() != field.m) fail(ErrorCode::SchemaViolation, "element digit array malformed");
    std::vector<uint32_t> digits;
    for (const auto& v : j) {
        if (!v.is_number_unsigned()) fail(ErrorCode::SchemaViolation, "element digit must be an integer");
        digits.push_back(v.get<uint32_t>());
    }
    return elem_from_digits(field, digits);
}

inline Poly poly_from_json(const FieldConfig& field, const json& j) {
    if (!j.is_array()) fail(ErrorCode::SchemaViolation, "polynomial must be an array");
    std::vector<FieldElement> coeffs;
    for (const auto& v : j) coeffs.push_back(elem_from_json(field, v));
    return poly_normalize(Poly{&field, std::move(coeffs)});
}

inline Mat mat_from_json(const FieldConfig& field, const json& j, std::size_t rows, std::size_t cols) {
    if (!j.is_array() || j.size() != rows * cols)
        fail(ErrorCode::SchemaViolation, "matrix entry count does not match its shape");
    Mat m = Mat::zero(field, rows, cols);
    for (std::size_t i = 0; i < rows * cols; ++i) m.e[i] = elem_from_json(field, j[i]);
    return m;
}

inline std::vector<EvalPoint> points_from_json(const FieldConfig& field, const json& j) {
    if (!j.is_array()) fail(ErrorCode::SchemaViolation, "spec must be an array of points");
    std::vector<EvalPoint> points;
    for (const auto& rec : j) {
        if (!rec.contains("kind")) fail(ErrorCode::SchemaViolation, "point without kind");
        const std::string kind = rec["kind"].get<std::string>();
        if (kind == "lead") {
            points.push_back(EvalPoint::infinity_lead(field));
        } else if (kind == "expansion") {
            Poly mp = poly_from_json(field, rec.at("place"));
            if (!mp.is_monic() || !poly_is_irreducible(mp))
                fail(ErrorCode::SchemaViolation, "a place needs a monic irreducible polynomial");
            const uint32_t u = rec.value("u", 1u);
            points.push_back(EvalPoint::expansion(place_finite(std::move(mp)), u));
        } else {
            fail(ErrorCode::SchemaViolation, "unknown point kind '" + kind + "'");
        }
    }
    return points;
}

// Rebuild a core from its spec and check every stored matrix against the
// recomputed one; a document that disagrees with its own spec is rejected.
inline DegreeCore core_from_json(const FieldConfig& field, uint32_t n, const json& j,
                                 const std::map<uint32_t, DegreeCore>& cores) {
    DegreeCore core;
    core.spec = InterpolationSpec{&field, n, Strategy::Deg, points_from_json(field, j.at("spec"))};
    core.spec.validate();
    const std::size_t w = 2 * std::size_t(n) - 1;

    core.evalL = mat_from_json(field, j.at("evalL"), w, n);
    if (!mat_eq(core.evalL, stack_eval_rows(core.spec, n)))
        fail(ErrorCode::SchemaViolation, "evalL does not match the spec");
    core.recon = mat_from_json(field, j.at("recon"), w, w);
    if (!mat_eq(mat_mul(core.recon, stack_eval_rows(core.spec, w)), Mat::identity(field, w)))
        fail(ErrorCode::SchemaViolation, "recon is not the inverse of the evaluation matrix");

    const json& sched = j.at("schedule");
    if (!sched.is_array() || sched.size() != core.spec.points.size())
        fail(ErrorCode::SchemaViolation, "schedule length does not match the spec");
    uint32_t offset = 0;
    for (std::size_t i = 0; i < core.spec.points.size(); ++i) {
        const auto& pt = core.spec.points[i];
        const json& rec = sched[i];
        ScheduleEntry entry;
        entry.offset = offset;
        entry.width = pt.weight();
        const std::string kind = rec.at("kind").get<std::string>();
        if (kind == "scalar") {
            if (!(pt.is_infinity_lead() || (pt.place.degree() == 1 && pt.u == 1)))
                fail(ErrorCode::SchemaViolation, "scalar entry on a non-scalar point");
            entry.kind = ScheduleEntry::Kind::ScalarMult;
            core.bilinear_count += 1;
        } else if (kind == "trunc") {
            entry.kind = ScheduleEntry::Kind::TruncatedProduct;
            entry.u = rec.value("u", 0u);
            if (pt.is_infinity_lead() || entry.u != pt.u || pt.place.degree() != 1)
                fail(ErrorCode::SchemaViolation, "trunc entry does not match its point");
            core.bilinear_count += trunc_cost(1, entry.u);
        } else if (kind == "sub") {
            entry.kind = ScheduleEntry::Kind::SubAlgorithm;
            entry.degree = rec.value("degree", 0u);
            if (pt.is_infinity_lead() || entry.degree != pt.place.degree() || entry.degree < 2)
                fail(ErrorCode::SchemaViolation, "sub entry does not match its point");
            if (!cores.count(entry.degree))
                fail(ErrorCode::SchemaViolation, "sub entry references a missing core");
            entry.reduce = mat_from_json(field, rec.at("reduce"), entry.degree, 2 * entry.degree - 1);
            if (!mat_eq(entry.reduce, reduction_matrix(pt.place, 2 * entry.degree - 1)))
                fail(ErrorCode::SchemaViolation, "sub entry reduction matrix does not match its place");
            core.bilinear_count += cores.at(entry.degree).bilinear_count;
        } else {
            fail(ErrorCode::SchemaViolation, "unknown schedule kind '" + kind + "'");
        }
        offset += entry.width;
        core.schedule.push_back(std::move(entry));
    }
    if (j.contains("bilinear_count") && j["bilinear_count"].get<uint64_t>() != core.bilinear_count)
        fail(ErrorCode::SchemaViolation, "stored bilinear count disagrees with the schedule");
    return core;
}

}  // namespace detail

inline CompiledAlgorithm import_json(const std::string& text) {
    detail::json doc;
    try {
        doc = detail::json::parse(text);
    } catch (const std::exception& e) {
        fail(ErrorCode::SchemaViolation, std::string("not a JSON document: ") + e.what());
    }
    CompiledAlgorithm alg;
    try {
        const uint32_t p = doc.at("p").get<uint32_t>();
        const uint32_t m = doc.at("m").get<uint32_t>();
        const auto modulus = doc.at("modulus").get<std::vector<uint32_t>>();
        try {
            alg.field = field_make(p, m, modulus);
        } catch (const Error& e) {
            fail(ErrorCode::FieldMismatch, std::string("bad field parameters: ") + e.what());
        }
        alg.n = doc.at("n").get<uint32_t>();
        if (alg.n < 2) fail(ErrorCode::SchemaViolation, "n must be >= 2");
        if (auto s = strategy_from_name(doc.value("strategy", "deg"))) alg.strategy = *s;
        alg.umax = doc.value("umax", 3u);

        alg.Q = detail::poly_from_json(*alg.field, doc.at("Q"));
        if (alg.Q.degree() != int64_t(alg.n) || !alg.Q.is_monic() || !poly_is_irreducible(alg.Q))
            fail(ErrorCode::FieldMismatch, "Q must be a monic irreducible of degree n");

        // a core only ever uses strictly smaller cores, so building in
        // ascending degree order resolves every reference
        std::map<uint32_t, detail::json> core_docs;
        for (const auto& [key, rec] : doc.at("cores").items()) {
            const uint32_t d = static_cast<uint32_t>(std::stoul(key));
            if (d < 2) fail(ErrorCode::SchemaViolation, "core degrees start at 2");
            core_docs[d] = rec;
        }
        for (const auto& [d, rec] : core_docs)
            alg.cores.emplace(d, detail::core_from_json(*alg.field, d, rec, alg.cores));

        alg.top = detail::core_from_json(*alg.field, alg.n, doc, alg.cores);
        for (const auto& pt : alg.top.spec.points)
            if (!pt.is_infinity_lead() && poly_eq(pt.place.minpoly, alg.Q))
                fail(ErrorCode::FieldMismatch, "Q appears among the spec's places");
        alg.top.spec.strategy = alg.strategy;

        alg.reduceQ = detail::mat_from_json(*alg.field, doc.at("reduceQ"), alg.n, 2 * std::size_t(alg.n) - 1);
        if (!mat_eq(alg.reduceQ, detail::reduction_matrix(place_finite(alg.Q), 2 * alg.n - 1)))
            fail(ErrorCode::SchemaViolation, "reduceQ does not match Q");
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail(ErrorCode::SchemaViolation, std::string("malformed document: ") + e.what());
    }
    return alg;
}

}  // namespace rpgc

#endif
