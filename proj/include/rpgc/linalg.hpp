#ifndef RPGC_LINALG_HPP
#define RPGC_LINALG_HPP

#include <cstdint>
#include <vector>

#include "rpgc/field.hpp"

namespace rpgc {

// Dense row-major matrix over F_q.
struct Mat {
    const FieldConfig* field = nullptr;
    std::size_t rows = 0, cols = 0;
    std::vector<FieldElement> e;

    static Mat zero(const FieldConfig& f, std::size_t r, std::size_t c) {
        return Mat{&f, r, c, std::vector<FieldElement>(r * c, elem_zero(f))};
    }

    static Mat identity(const FieldConfig& f, std::size_t n) {
        Mat m = zero(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = elem_one(f);
        return m;
    }

    FieldElement& at(std::size_t r, std::size_t c) { return e[r * cols + c]; }
    const FieldElement& at(std::size_t r, std::size_t c) const { return e[r * cols + c]; }
};

inline bool mat_eq(const Mat& a, const Mat& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (!elem_eq(a.e[i], b.e[i])) return false;
    return true;
}

inline std::vector<FieldElement> mat_vec(const Mat& m, const std::vector<FieldElement>& v) {
    if (v.size() != m.cols) fail(ErrorCode::DegreeMismatch, "matrix-vector size mismatch");
    std::vector<FieldElement> out(m.rows, elem_zero(*m.field));
    for (std::size_t r = 0; r < m.rows; ++r) {
        FieldElement acc = elem_zero(*m.field);
        const FieldElement* row = &m.e[r * m.cols];
        for (std::size_t c = 0; c < m.cols; ++c) {
            if (!row[c].is_zero() && !v[c].is_zero()) acc = elem_add(acc, elem_mul(row[c], v[c]));
        }
        out[r] = acc;
    }
    return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.cols != b.rows) fail(ErrorCode::DegreeMismatch, "matrix product size mismatch");
    Mat out = Mat::zero(*a.field, a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i)
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols; ++j)
                out.at(i, j) = elem_add(out.at(i, j), elem_mul(a.at(i, k), b.at(k, j)));
        }
    return out;
}

// Gauss-Jordan inverse. Throws SingularEvaluation on pivot failure: for the
// compiler this signals an evaluation map that is not bijective.
inline Mat mat_inverse(const Mat& m) {
    if (m.rows != m.cols) fail(ErrorCode::DegreeMismatch, "only square matrices invert");
    const std::size_t n = m.rows;
    Mat a = m;
    Mat inv = Mat::identity(*m.field, n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n) fail(ErrorCode::SingularEvaluation, "evaluation matrix is singular");
        if (pivot != col) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a.at(pivot, j), a.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        const FieldElement scale = elem_inv(a.at(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            a.at(col, j) = elem_mul(a.at(col, j), scale);
            inv.at(col, j) = elem_mul(inv.at(col, j), scale);
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            const FieldElement f = a.at(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                a.at(r, j) = elem_sub(a.at(r, j), elem_mul(f, a.at(col, j)));
                inv.at(r, j) = elem_sub(inv.at(r, j), elem_mul(f, inv.at(col, j)));
            }
        }
    }
    return inv;
}

}  // namespace rpgc

#endif
