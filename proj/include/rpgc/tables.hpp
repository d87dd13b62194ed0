#ifndef RPGC_TABLES_HPP
#define RPGC_TABLES_HPP

#include <cstdint>
#include <optional>

#include "rpgc/strategy.hpp"

namespace rpgc {

// Published bilinear complexities for these constructions over F_2, F_3 and
// F_4, extensions n = 2..18. The acceptance suite reproduces them offline.
namespace tables {

inline constexpr uint32_t kMinN = 2, kMaxN = 18;

// increasing-degree construction
inline constexpr uint64_t kDegRef[3][17] = {
    // q = 2
    {3, 6, 11, 15, 18, 26, 29, 37, 40, 48, 51, 60, 65, 70, 78, 81, 90},
    // q = 3
    {3, 6, 9, 12, 16, 19, 24, 28, 31, 36, 40, 43, 48, 52, 55, 60, 64},
    // q = 4
    {3, 5, 8, 11, 14, 17, 20, 23, 27, 30, 33, 37, 40, 43, 47, 50, 53},
};

// derivative-evaluation improvements; 0 marks entries with no published value
inline constexpr uint64_t kOptRef[3][17] = {
    // q = 2
    {0, 0, 10, 14, 0, 22, 28, 32, 38, 42, 48, 52, 58, 64, 68, 76, 80},
    // q = 3
    {0, 0, 0, 0, 15, 0, 23, 27, 0, 35, 39, 0, 47, 51, 0, 59, 63},
    // q = 4
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
};

inline int q_row(uint64_t q) { return q == 2 ? 0 : q == 3 ? 1 : q == 4 ? 2 : -1; }

}  // namespace tables

inline std::optional<uint64_t> table_reference(uint64_t q, uint32_t n, Strategy s) {
    const int row = tables::q_row(q);
    if (row < 0 || n < tables::kMinN || n > tables::kMaxN) return std::nullopt;
    if (s == Strategy::Deg) return tables::kDegRef[row][n - 2];
    if (s == Strategy::Opt) {
        const uint64_t v = tables::kOptRef[row][n - 2];
        if (v) return v;
    }
    return std::nullopt;
}

}  // namespace rpgc

#endif
