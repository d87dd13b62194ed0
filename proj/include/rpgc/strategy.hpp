#ifndef RPGC_STRATEGY_HPP
#define RPGC_STRATEGY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "rpgc/evaluation.hpp"

namespace rpgc {

enum class Strategy { Deg, Div, Opt };

inline const char* strategy_name(Strategy s) {
    switch (s) {
        case Strategy::Deg: return "deg";
        case Strategy::Div: return "div";
        default: return "opt";
    }
}

inline std::optional<Strategy> strategy_from_name(const std::string& s) {
    if (s == "deg") return Strategy::Deg;
    if (s == "div") return Strategy::Div;
    if (s == "opt") return Strategy::Opt;
    return std::nullopt;
}

// Ordered interpolation point list of total weight 2n-1 for multiplying in
// F_{q^n}: interpolation on L((n-1)P_inf) x L((n-1)P_inf) -> L((2n-2)P_inf).
struct InterpolationSpec {
    const FieldConfig* field = nullptr;
    uint32_t n = 0;
    Strategy strategy = Strategy::Deg;
    std::vector<EvalPoint> points;

    uint32_t total_weight() const {
        uint32_t w = 0;
        for (const auto& p : points) w += p.weight();
        return w;
    }

    void validate() const {
        if (n < 2) fail(ErrorCode::DegreeMismatch, "interpolation spec needs n >= 2");
        if (total_weight() != 2 * n - 1)
            fail(ErrorCode::DegreeMismatch, "point weights must sum to 2n-1");
        uint32_t inf_count = 0;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const auto& p = points[i];
            if (p.is_infinity_lead()) {
                ++inf_count;
                continue;
            }
            if (p.u > 1 && (p.place.degree() != 1 || p.u >= n - 1))
                fail(ErrorCode::UnsupportedMultiplicity,
                     "multiplicity above 1 needs a rational place and u < n-1");
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (!points[j].is_infinity_lead() && points[j].place == p.place)
                    fail(ErrorCode::DegreeMismatch, "a place appears twice in the spec");
        }
        if (inf_count > 1) fail(ErrorCode::DegreeMismatch, "at most one leading-coefficient point");
    }
};

// Evaluate f at every point of a spec; the degree cap k tells the
// leading-coefficient point which coefficient to read (n-1 on the function
// side, 2n-2 on the product side).
inline EvalVector evaluate_spec(const Poly& f, const InterpolationSpec& spec, uint32_t k) {
    return evaluate_points(f, spec.points, k);
}

// Bilinear scheme for the truncated product of two u-term expansions at a
// rational place. Each product multiplies matching digit sums of both factors;
// outputs are small integer combinations of the products.
struct TruncScheme {
    uint32_t u = 1;
    std::vector<std::vector<uint32_t>> product_terms;
    std::vector<std::vector<int32_t>> output_coeffs;  // output_coeffs[k][j] applies to product j
};

inline const TruncScheme& trunc_scheme(uint32_t d, uint32_t u) {
    if (d != 1 || u < 1 || u > 3)
        fail(ErrorCode::UnsupportedMultiplicity,
             "truncated-product schemes exist for rational places with u in {1,2,3}");
    static const TruncScheme schemes[3] = {
        {1, {{0}}, {{1}}},
        {2, {{0}, {1}, {0, 1}}, {{1, 0, 0}, {-1, -1, 1}}},
        {3,
         {{0}, {1}, {2}, {0, 1}, {0, 2}},
         {{1, 0, 0, 0, 0}, {-1, -1, 0, 1, 0}, {-1, 1, -1, 0, 1}}},
    };
    return schemes[u - 1];
}

inline uint64_t trunc_cost(uint32_t d, uint32_t u) { return trunc_scheme(d, u).product_terms.size(); }

// ---------------------------------------------------------------------------
// P^deg: places taken by increasing degree.

// Degree profile of the increasing-degree point set. d is the smallest degree
// with sum_{k<=d} k B_k >= 2n+1; the highest degree gets the ceiling share and
// one degree k < d loses a place when the target 2n-1 overshoots.
inline std::map<uint32_t, uint64_t> nk_profile_deg(const FieldConfig& field, uint32_t n) {
    if (n < 2) fail(ErrorCode::DegreeMismatch, "profile needs n >= 2");
    const int64_t target = 2 * int64_t(n) - 1;
    uint32_t d = 0;
    int64_t cum = 0;
    while (cum < target + 2) {
        ++d;
        cum += int64_t(d) * int64_t(count_places(field, d));
    }
    int64_t below = 0;
    for (uint32_t k = 1; k < d; ++k) below += int64_t(k) * int64_t(count_places(field, k));
    const int64_t r = target - below;                      // can be -1 at the boundary
    const int64_t nd = r <= 0 ? 0 : (r + d - 1) / d;       // ceil(r/d)
    const int64_t excess = int64_t(d) * nd - r;            // in [0, d)
    std::map<uint32_t, uint64_t> profile;
    for (uint32_t k = 1; k < d; ++k) {
        uint64_t bk = count_places(field, k);
        profile[k] = (excess > 0 && k == uint32_t(excess)) ? bk - 1 : bk;
    }
    profile[d] = uint64_t(nd);
    int64_t check = 0;
    for (const auto& [k, cnt] : profile) check += int64_t(k) * int64_t(cnt);
    if (check != target) fail(ErrorCode::Infeasible, "degree profile does not meet the weight target");
    return profile;
}

namespace detail {

// Realize a degree profile as points in canonical order: the weight-1 slots
// take the leading-coefficient point first, then finite rational places.
inline std::vector<EvalPoint> realize_profile(const FieldConfig& field,
                                              const std::map<uint32_t, uint64_t>& profile) {
    std::vector<EvalPoint> points;
    for (const auto& [k, cnt] : profile) {
        if (cnt == 0) continue;
        const auto places = enumerate_places(field, k);
        if (cnt > places.size()) fail(ErrorCode::Infeasible, "profile asks for more places than exist");
        if (k == 1) {
            points.push_back(EvalPoint::infinity_lead(field));
            for (uint64_t i = 1; i < cnt; ++i) points.push_back(EvalPoint::expansion(places[i]));
        } else {
            // skip the infinite place slot only present at degree 1
            for (uint64_t i = 0; i < cnt; ++i) points.push_back(EvalPoint::expansion(places[i]));
        }
    }
    return points;
}

}  // namespace detail

inline InterpolationSpec build_spec_deg(const FieldConfig& field, uint32_t n) {
    InterpolationSpec spec{&field, n, Strategy::Deg, detail::realize_profile(field, nk_profile_deg(field, n))};
    spec.validate();
    return spec;
}

// ---------------------------------------------------------------------------
// P^div: places of degree dividing d, d minimal with q^d >= 2n-1.

inline bool div_applicable(const FieldConfig& field, uint32_t n) { return 2 * uint64_t(n) > field.q() + 2; }

// Smallest degree d whose places of degree dividing d carry enough weight:
// q^d + 1 >= 2n, so that dropping one rational place still leaves 2n-1.
inline uint32_t div_degree_parameter(const FieldConfig& field, uint32_t n) {
    const uint64_t q = field.q();
    const uint64_t target = 2 * uint64_t(n) - 1;
    uint32_t d = 1;
    unsigned __int128 qd = q;
    while (qd < target) {
        qd *= q;
        ++d;
    }
    return d;
}

// Degree profile of the divisor construction. Step one takes q rational
// points, every place of each proper divisor degree, and floor-many of degree
// d; step two settles the remainder delta.
inline std::map<uint32_t, uint64_t> nk_profile_div(const FieldConfig& field, uint32_t n) {
    if (!div_applicable(field, n))
        fail(ErrorCode::PreconditionSmallN, "divisor construction needs n > q/2 + 1");
    const uint64_t q = field.q();
    const uint64_t target = 2 * uint64_t(n) - 1;
    const uint32_t d = div_degree_parameter(field, n);
    std::vector<uint32_t> divisors;
    for (uint32_t k = 1; k <= d; ++k)
        if (d % k == 0) divisors.push_back(k);

    uint64_t S = 0;
    for (uint32_t k : divisors)
        if (k != d) S += uint64_t(k) * count_places(field, k);
    S -= 1;  // one rational place is left out

    std::map<uint32_t, uint64_t> profile;
    profile[1] = q;
    for (uint32_t k : divisors)
        if (k != 1 && k != d) profile[k] = count_places(field, k);
    profile[d] = (target - S) / d;
    const uint64_t delta = (target - S) % d;

    if (delta != 0) {
        if (d % delta != 0) {
            profile[delta] += 1;
        } else {
            uint32_t ell = 1;  // largest divisor of d below d
            for (uint32_t k : divisors)
                if (k != d) ell = std::max(ell, k);
            if (ell + delta == d && profile[d] >= count_places(field, d))
                fail(ErrorCode::Infeasible, "no degree-d place left for the delta adjustment");
            profile[ell + delta] += 1;
            profile[ell] -= 1;
        }
    }

    uint64_t check = 0;
    for (const auto& [k, cnt] : profile) check += uint64_t(k) * cnt;
    if (check != target) fail(ErrorCode::Infeasible, "divisor profile misses the weight target");
    return profile;
}

inline InterpolationSpec build_spec_div(const FieldConfig& field, uint32_t n) {
    InterpolationSpec spec{&field, n, Strategy::Div, detail::realize_profile(field, nk_profile_div(field, n))};
    spec.validate();
    return spec;
}

// Strategy used for the sub-algorithm at a degree-d place. Deg and Opt recurse
// into themselves. Div recurses into Div where it applies and does not ask for
// a place of its own degree (which happens for q=2, d=3), else into Deg.
inline Strategy sub_strategy(const FieldConfig& field, Strategy parent, uint32_t d) {
    if (parent != Strategy::Div) return parent;
    if (!div_applicable(field, d)) return Strategy::Deg;
    auto profile = nk_profile_div(field, d);
    auto it = profile.find(d);
    if (it != profile.end() && it->second > 0) return Strategy::Deg;
    return Strategy::Div;
}

// ---------------------------------------------------------------------------
// Bilinear counts (recursion over profiles, no matrices).

uint64_t opt_cost(const FieldConfig& field, uint32_t n, uint32_t umax);

inline uint64_t strategy_cost(const FieldConfig& field, uint32_t n, Strategy s, uint32_t umax = 3) {
    if (n == 0) fail(ErrorCode::DegreeMismatch, "extension degree must be >= 1");
    if (n == 1) return 1;
    // Div at sizes where it does not apply means: build P^deg instead.
    if (s == Strategy::Div && !div_applicable(field, n)) s = Strategy::Deg;

    static std::mutex mu;
    static std::map<std::tuple<uint64_t, int, uint32_t, uint32_t>, uint64_t> memo;
    const auto key = std::make_tuple(field.q(), int(s), s == Strategy::Opt ? umax : 0, n);
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }

    uint64_t total = 0;
    if (s == Strategy::Opt) {
        total = opt_cost(field, n, umax);
    } else {
        const auto profile = s == Strategy::Deg ? nk_profile_deg(field, n) : nk_profile_div(field, n);
        for (const auto& [k, cnt] : profile) {
            if (cnt == 0) continue;
            const uint64_t unit = k == 1 ? 1 : strategy_cost(field, k, sub_strategy(field, s, k), umax);
            total += cnt * unit;
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    memo.emplace(key, total);
    return total;
}

// ---------------------------------------------------------------------------
// Opt: exact-weight minimum-cost selection with derivative evaluations.
//
// Items: the leading-coefficient point (weight 1, cost 1, at most once), each
// finite rational place at a chosen multiplicity u (weight u, cost 1/3/5), and
// places of degree >= 2 at multiplicity 1 (weight d, cost of the recursive
// degree-d algorithm). A small DP finds the cheapest multiset of total weight
// exactly 2n-1; ties prefer lower maximum degree, then lower multiplicities,
// then keeping the infinity point.

struct OptSolution {
    uint64_t cost = 0;
    bool use_inf = false;
    uint32_t rationals_u1 = 0, rationals_u2 = 0, rationals_u3 = 0;
    std::map<uint32_t, uint64_t> higher;  // degree >= 2 -> count
};

inline OptSolution opt_solve(const FieldConfig& field, uint32_t n, uint32_t umax) {
    if (n < 2) fail(ErrorCode::DegreeMismatch, "opt spec needs n >= 2");
    if (umax < 1 || umax > 3)
        fail(ErrorCode::UnsupportedMultiplicity, "multiplicity cap must be in {1,2,3}");
    const uint64_t q = field.q();
    const uint32_t W = 2 * n - 1;
    const uint32_t U = n >= 4 ? std::min<uint32_t>(umax, n - 2) : 1;

    // degrees worth offering: enough capacity for W, plus slack for the
    // occasional case where one larger degree beats many smaller ones
    uint32_t dmax = 1;
    {
        unsigned __int128 capacity = 1 + (unsigned __int128)q * U;
        while (capacity < W && dmax < n - 1) {
            ++dmax;
            capacity += (unsigned __int128)dmax * count_places(field, dmax);
        }
        dmax = std::min<uint32_t>(dmax + 2, n - 1);
    }

    // dp over places of degree >= 2: per weight, the cheapest count vector,
    // ties preferring fewer places of the highest degrees
    const uint32_t ndeg = dmax >= 2 ? dmax - 1 : 0;
    struct Sol {
        uint64_t cost = UINT64_MAX;
        std::vector<uint16_t> cnt;  // count per degree, index 0 <-> degree 2
    };
    auto cnt_less = [ndeg](const std::vector<uint16_t>& a, const std::vector<uint16_t>& b) {
        for (uint32_t i = ndeg; i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    };
    std::vector<Sol> dp(W + 1);
    dp[0] = Sol{0, std::vector<uint16_t>(ndeg, 0)};
    for (uint32_t d = 2; d <= dmax; ++d) {
        const uint64_t unit = strategy_cost(field, d, Strategy::Opt, umax);
        const uint64_t avail = count_places(field, d);
        for (uint32_t w = W; w >= d; --w) {
            for (uint64_t k = 1; k <= avail && k * d <= w; ++k) {
                const Sol& src = dp[w - k * d];
                if (src.cost == UINT64_MAX) continue;
                Sol cand = src;
                cand.cost += k * unit;
                cand.cnt[d - 2] = static_cast<uint16_t>(cand.cnt[d - 2] + k);
                if (cand.cost < dp[w].cost ||
                    (cand.cost == dp[w].cost && cnt_less(cand.cnt, dp[w].cnt)))
                    dp[w] = std::move(cand);
            }
        }
    }

    // weight-1 block: the infinity point plus rational places with chosen
    // multiplicities; preference at equal cost: fewer high multiplicities,
    // then keeping the infinity point
    OptSolution best;
    best.cost = UINT64_MAX;
    std::vector<uint16_t> best_cnt;
    std::array<uint64_t, 4> best_block{0, 0, 0, 0};
    const uint64_t max3 = U >= 3 ? q : 0;
    const uint64_t max2 = U >= 2 ? q : 0;
    for (uint64_t a3 = 0; a3 <= max3; ++a3)
        for (uint64_t a2 = 0; a3 + a2 <= (U >= 2 ? q : a3); ++a2) {
            if (a2 > max2) break;
            for (uint64_t a1 = 0; a3 + a2 + a1 <= q; ++a1)
                for (uint64_t use_inf = 0; use_inf <= 1; ++use_inf) {
                    const uint64_t w0 = use_inf + a1 + 2 * a2 + 3 * a3;
                    if (w0 > W) continue;
                    const Sol& hi = dp[W - w0];
                    if (hi.cost == UINT64_MAX) continue;
                    const uint64_t cost = use_inf + a1 + 3 * a2 + 5 * a3 + hi.cost;
                    const std::array<uint64_t, 4> block{a3, a2, 1 - use_inf, a1};
                    bool take = cost < best.cost;
                    if (!take && cost == best.cost) {
                        if (cnt_less(hi.cnt, best_cnt))
                            take = true;
                        else if (!cnt_less(best_cnt, hi.cnt))
                            take = block < best_block;
                    }
                    if (!take) continue;
                    best.cost = cost;
                    best.use_inf = use_inf != 0;
                    best.rationals_u1 = uint32_t(a1);
                    best.rationals_u2 = uint32_t(a2);
                    best.rationals_u3 = uint32_t(a3);
                    best.higher.clear();
                    for (uint32_t i = 0; i < ndeg; ++i)
                        if (hi.cnt[i]) best.higher[i + 2] = hi.cnt[i];
                    best_cnt = hi.cnt;
                    best_block = block;
                }
        }
    if (best.cost == UINT64_MAX) fail(ErrorCode::Infeasible, "no exact-weight selection exists");
    return best;
}

inline uint64_t opt_cost(const FieldConfig& field, uint32_t n, uint32_t umax) {
    return opt_solve(field, n, umax).cost;
}

inline InterpolationSpec build_spec_opt(const FieldConfig& field, uint32_t n, uint32_t umax = 3) {
    const OptSolution sol = opt_solve(field, n, umax);
    InterpolationSpec spec{&field, n, Strategy::Opt, {}};
    if (sol.use_inf) spec.points.push_back(EvalPoint::infinity_lead(field));
    const auto rationals = enumerate_places(field, 1);  // [infinity, x, x-1, ...]
    std::vector<uint32_t> mults;
    for (uint32_t i = 0; i < sol.rationals_u3; ++i) mults.push_back(3);
    for (uint32_t i = 0; i < sol.rationals_u2; ++i) mults.push_back(2);
    for (uint32_t i = 0; i < sol.rationals_u1; ++i) mults.push_back(1);
    for (std::size_t i = 0; i < mults.size(); ++i)
        spec.points.push_back(EvalPoint::expansion(rationals[i + 1], mults[i]));
    for (const auto& [d, cnt] : sol.higher) {
        const auto places = enumerate_places(field, d);
        for (uint64_t i = 0; i < cnt; ++i) spec.points.push_back(EvalPoint::expansion(places[i]));
    }
    spec.validate();
    return spec;
}

inline InterpolationSpec build_spec(const FieldConfig& field, uint32_t n, Strategy s, uint32_t umax = 3) {
    switch (s) {
        case Strategy::Deg: return build_spec_deg(field, n);
        case Strategy::Div: return build_spec_div(field, n);
        default: return build_spec_opt(field, n, umax);
    }
}

// Cost of one point inside a spec built with strategy `parent`.
inline uint64_t point_cost(const FieldConfig& field, const EvalPoint& p, Strategy parent, uint32_t umax = 3) {
    if (p.is_infinity_lead()) return 1;
    const uint32_t d = p.place.degree();
    if (d == 1) return trunc_cost(1, p.u);
    return strategy_cost(field, d, sub_strategy(field, parent, d), umax);
}

inline uint64_t spec_cost(const InterpolationSpec& spec, uint32_t umax = 3) {
    uint64_t total = 0;
    for (const auto& p : spec.points) total += point_cost(*spec.field, p, spec.strategy, umax);
    return total;
}

}  // namespace rpgc

#endif
