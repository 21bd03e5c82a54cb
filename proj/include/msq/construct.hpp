#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "msq/grid.hpp"

namespace msq {

/**
 * The two doubly-even constructions. Both tile the grid with 4x4 blocks
 * and split each block along its two diagonals:
 *
 *   Proposed  -- keeps the sequential value on the block diagonals and
 *                complements everything else.
 *   Classical -- complements the block diagonals and keeps the rest.
 *
 * The two outputs are cell-for-cell complements of each other.
 */
enum class ConstructionMethod { Proposed, Classical };

inline const char* to_string(ConstructionMethod m) {
    return m == ConstructionMethod::Proposed ? "proposed" : "classical";
}

inline ConstructionMethod parse_method(std::string_view s) {
    if (s == "proposed") return ConstructionMethod::Proposed;
    if (s == "classical") return ConstructionMethod::Classical;
    throw std::invalid_argument("unknown construction method '" + std::string(s) +
                                "' (expected 'proposed' or 'classical')");
}

/// True iff 1-based (i, j) lies on a main or anti diagonal of its 4x4 block.
inline bool block_diagonal_mask(int i, int j) noexcept {
    const int q = (i - 1) % 4 + 1;
    const int q1 = (j - 1) % 4 + 1;
    return q == q1 || q + q1 == 5;
}

/**
 * Builds a normal magic square of doubly even order n with line sum
 * magic_constant(n). Rejects any other order, naming its class.
 */
inline Grid construct(int n, ConstructionMethod method) {
    const OrderClass cls = classify_order(n);
    if (cls != OrderClass::DoublyEven) {
        throw std::invalid_argument("order " + std::to_string(n) + " is " + to_string(cls) +
                                    "; construction requires a doubly even order (a multiple of 4)");
    }
    const std::int64_t sq = static_cast<std::int64_t>(n) * n;
    std::vector<Cell> cells(static_cast<std::size_t>(sq));
    std::size_t pos = 0;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j, ++pos) {
            const std::int64_t v = static_cast<std::int64_t>(i - 1) * n + j;
            const bool keep =
                block_diagonal_mask(i, j) == (method == ConstructionMethod::Proposed);
            cells[pos] = keep ? v : sq + 1 - v;
        }
    }
    return Grid(n, std::move(cells));
}

}  // namespace msq
