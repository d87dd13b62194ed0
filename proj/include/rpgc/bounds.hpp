#ifndef RPGC_BOUNDS_HPP
#define RPGC_BOUNDS_HPP

#include <cmath>
#include <cstdint>
#include <optional>

#include "rpgc/compiler.hpp"

namespace rpgc {

namespace detail {

// Largest fixed point of base^x = x, for 1 < base < e^{1/e}. Bisection on the
// upper branch, with a snap to the nearest integer when the root is one
// (base = sqrt(2) has the exact fixed point 4).
inline double largest_log_fixed_point(double base) {
    const double lb = std::log(base);
    auto g = [&](double x) { return std::pow(base, x) - x; };
    double lo = std::log(1.0 / lb) / lb;  // stationary point of g
    double hi = lo + 1;
    while (g(hi) <= 0) hi *= 2;
    for (int i = 0; i < 200; ++i) {
        const double mid = (lo + hi) / 2;
        (g(mid) <= 0 ? lo : hi) = mid;
    }
    double root = (lo + hi) / 2;
    const double snapped = std::round(root);
    if (std::fabs(root - snapped) < 1e-9) root = snapped;
    return root;
}

inline double iterated_log_threshold(double base) {
    constexpr double e_inv_e = 1.44466786100976613366;
    if (base >= e_inv_e) return 1.0;
    return std::floor(largest_log_fixed_point(base)) + 1.0;
}

}  // namespace detail

// Number of times log_base must be applied before the value falls to the
// stopping threshold: 1 for bases where the iteration always descends, and
// floor(x0)+1 for small bases with fixed point x0 (5 for base sqrt(2)).
inline uint32_t iterated_log(double base, double value) {
    if (!(base > 1.0)) fail(ErrorCode::BaseOutOfRange, "iterated logarithm needs base > 1");
    const double threshold = detail::iterated_log_threshold(base);
    uint32_t count = 0;
    double v = value;
    while (v > threshold) {
        v = std::log(v) / std::log(base);
        ++count;
    }
    return count;
}

inline uint32_t iterated_log(double base, uint64_t n) { return iterated_log(base, double(n)); }

// C n (4q^2/(q-1))^{log*_sqrt(q)(2n)}, C = 14/5 for q = 2 and 1 otherwise.
inline double uniform_bound(const FieldConfig& field, uint32_t n) {
    if (n < 2) fail(ErrorCode::DegreeMismatch, "bound defined for n >= 2");
    const double q = double(field.q());
    const uint32_t logstar = iterated_log(std::sqrt(q), double(2 * n));
    const double c = field.q() == 2 ? 14.0 / 5.0 : 1.0;
    const double bound = c * n * std::pow(4.0 * q * q / (q - 1.0), logstar);
    if (bound < double(2 * n - 1)) fail(ErrorCode::Infeasible, "bound fell below the 2n-1 floor");
    return bound;
}

// d q^{d/2+1} - q^d <= q^{d+1}, evaluated exactly: for every d the inequality
// is equivalent to d^2 <= (q+1)^2 q^{d-2} (square both sides; the d = 1 case
// reduces to q <= (q+1)^2).
inline bool bound_step_inequality(uint64_t q, uint32_t d) {
    if (q < 2 || d < 1) fail(ErrorCode::DegreeMismatch, "need q >= 2 and d >= 1");
    if (d == 1) return true;
    const uint64_t lhs = uint64_t(d) * d;
    unsigned __int128 rhs = (unsigned __int128)(q + 1) * (q + 1);
    for (uint32_t i = 0; i + 2 < d; ++i) {
        if (rhs >= lhs) return true;  // multiplying by q >= 2 keeps it above
        rhs *= q;
    }
    return rhs >= lhs;
}

struct BoundReport {
    uint64_t q = 0;
    uint32_t n = 0;
    uint64_t count_deg = 0;
    std::optional<uint64_t> count_div;  // absent when the construction does not apply
    uint64_t count_opt = 0;
    uint64_t lower = 0;  // Winograd-De Groote floor 2n-1
    double uniform = 0;
    uint32_t logstar = 0;
    bool within_bounds = false;
};

inline BoundReport bound_report(const FieldConfig& field, uint32_t n, uint32_t umax = 3) {
    BoundReport r;
    r.q = field.q();
    r.n = n;
    r.count_deg = bilinear_complexity(field, n, Strategy::Deg);
    if (div_applicable(field, n)) r.count_div = bilinear_complexity(field, n, Strategy::Div);
    r.count_opt = bilinear_complexity(field, n, Strategy::Opt, umax);
    r.lower = 2 * uint64_t(n) - 1;
    r.uniform = uniform_bound(field, n);
    r.logstar = iterated_log(std::sqrt(double(r.q)), double(2 * n));
    r.within_bounds = r.lower <= r.count_deg && double(r.count_deg) <= r.uniform &&
                      r.lower <= r.count_opt && double(r.count_opt) <= r.uniform &&
                      (!r.count_div || (r.lower <= *r.count_div && double(*r.count_div) <= r.uniform));
    return r;
}

}  // namespace rpgc

#endif
