#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "msq/grid.hpp"

namespace msq {

// Grid-to-grid transformations. Magic preservation varies: see apply().
struct AddScalar {
    Cell k;
};
struct MulScalar {
    Cell k;
};
struct Transpose {};
struct SwapRowsEquidistant {
    int row;  // 1-based; swapped with row n+1-row
};
struct SwapColsEquidistant {
    int col;  // 1-based; swapped with column n+1-col
};
struct ExchangeDiagonalQuadrants {};
struct Exchange1234Rows {};
struct Exchange1234Cols {};

using TransformSpec = std::variant<AddScalar, MulScalar, Transpose, SwapRowsEquidistant,
                                   SwapColsEquidistant, ExchangeDiagonalQuadrants,
                                   Exchange1234Rows, Exchange1234Cols>;

namespace detail {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

inline void check_equidistant_index(int idx, int n, const char* what) {
    if (idx < 1 || idx > n) {
        throw std::out_of_range(std::string(what) + " " + std::to_string(idx) +
                                " outside 1.." + std::to_string(n));
    }
    if (idx == n + 1 - idx) {
        throw std::invalid_argument(std::string(what) + " " + std::to_string(idx) +
                                    " is its own equidistant partner in order " +
                                    std::to_string(n));
    }
}

inline void check_pairable(int n, const char* what) {
    if (n % 4 != 0) {
        throw std::invalid_argument(std::string(what) + " requires an order divisible by 4; got " +
                                    std::to_string(n));
    }
}

inline std::vector<Cell> swap_row_pair(const Grid& g, int a, int b) {  // 0-based rows
    std::vector<Cell> out(g.cells().begin(), g.cells().end());
    const int n = g.order();
    std::swap_ranges(out.begin() + static_cast<std::ptrdiff_t>(a) * n,
                     out.begin() + static_cast<std::ptrdiff_t>(a + 1) * n,
                     out.begin() + static_cast<std::ptrdiff_t>(b) * n);
    return out;
}

}  // namespace detail

/**
 * Applies one transformation, producing a new grid.
 *
 * What each one preserves, stated where it is literally true:
 *  - AddScalar(k): magic with constant sigma stays magic with sigma + n*k.
 *  - MulScalar(k): magic with constant sigma stays magic with k*sigma
 *    (k = 0 gives the all-zero magic square; normality is lost).
 *  - Transpose: preserves magic, normality and the constant for every grid.
 *  - ExchangeDiagonalQuadrants: preserves magic and the constant for every
 *    even-order magic square (a half-turn cyclic shift in both axes, so
 *    each line of the result permutes a line of the input).
 *  - SwapRows/ColsEquidistant: always preserves the row and column sums;
 *    preserves magic whenever the input is associative (the displaced
 *    diagonal cells pair into center-symmetric complements).
 *  - Exchange1234Rows/Cols: always preserves row and column sums;
 *    preserves magic on both constructions' outputs, whose block
 *    complement symmetry compensates the diagonals. Not guaranteed for
 *    arbitrary magic squares.
 */
inline Grid apply(const Grid& g, const TransformSpec& t) {
    const int n = g.order();
    const auto cells = g.cells();

    return std::visit(
        detail::overloaded{
            [&](AddScalar s) {
                std::vector<Cell> out(cells.size());
                for (std::size_t p = 0; p < cells.size(); ++p) {
                    if (__builtin_add_overflow(cells[p], s.k, &out[p])) {
                        throw std::overflow_error("adding " + std::to_string(s.k) +
                                                  " overflows the 64-bit cell range");
                    }
                }
                return Grid(n, std::move(out));
            },
            [&](MulScalar s) {
                std::vector<Cell> out(cells.size());
                for (std::size_t p = 0; p < cells.size(); ++p) {
                    if (__builtin_mul_overflow(cells[p], s.k, &out[p])) {
                        throw std::overflow_error("multiplying by " + std::to_string(s.k) +
                                                  " overflows the 64-bit cell range");
                    }
                }
                return Grid(n, std::move(out));
            },
            [&](Transpose) {
                std::vector<Cell> out(cells.size());
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c)
                        out[static_cast<std::size_t>(c) * n + r] =
                            cells[static_cast<std::size_t>(r) * n + c];
                return Grid(n, std::move(out));
            },
            [&](SwapRowsEquidistant s) {
                detail::check_equidistant_index(s.row, n, "row");
                return Grid(n, detail::swap_row_pair(g, s.row - 1, n - s.row));
            },
            [&](SwapColsEquidistant s) {
                detail::check_equidistant_index(s.col, n, "column");
                std::vector<Cell> out(cells.begin(), cells.end());
                for (int r = 0; r < n; ++r)
                    std::swap(out[static_cast<std::size_t>(r) * n + s.col - 1],
                              out[static_cast<std::size_t>(r) * n + n - s.col]);
                return Grid(n, std::move(out));
            },
            [&](ExchangeDiagonalQuadrants) {
                if (n % 2 != 0) {
                    throw std::invalid_argument(
                        "quadrant exchange requires an even order; got " + std::to_string(n));
                }
                const int h = n / 2;
                std::vector<Cell> out(cells.size());
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c < n; ++c)
                        out[static_cast<std::size_t>(r) * n + c] =
                            cells[static_cast<std::size_t>((r + h) % n) * n + (c + h) % n];
                return Grid(n, std::move(out));
            },
            [&](Exchange1234Rows) {
                detail::check_pairable(n, "1-2-3-4 row exchange");
                std::vector<Cell> out(cells.begin(), cells.end());
                for (int r = 0; r + 1 < n; r += 2)
                    std::swap_ranges(out.begin() + static_cast<std::ptrdiff_t>(r) * n,
                                     out.begin() + static_cast<std::ptrdiff_t>(r + 1) * n,
                                     out.begin() + static_cast<std::ptrdiff_t>(r + 1) * n);
                return Grid(n, std::move(out));
            },
            [&](Exchange1234Cols) {
                detail::check_pairable(n, "1-2-3-4 column exchange");
                std::vector<Cell> out(cells.begin(), cells.end());
                for (int r = 0; r < n; ++r)
                    for (int c = 0; c + 1 < n; c += 2)
                        std::swap(out[static_cast<std::size_t>(r) * n + c],
                                  out[static_cast<std::size_t>(r) * n + c + 1]);
                return Grid(n, std::move(out));
            },
        },
        t);
}

/**
 * Parses the textual transform syntax used on the command line:
 *   add:K, mul:K, transpose, swap-rows-eq:R, swap-cols-eq:C,
 *   quadrants, exchange-1234-rows, exchange-1234-cols
 */
inline TransformSpec parse_transform(std::string_view s) {
    const auto colon = s.find(':');
    const std::string_view head = s.substr(0, colon);
    const bool has_arg = colon != std::string_view::npos;
    const std::string_view arg = has_arg ? s.substr(colon + 1) : std::string_view{};

    auto parse_int = [&](auto& out) {
        const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), out);
        if (ec != std::errc{} || ptr != arg.data() + arg.size()) {
            throw std::invalid_argument("transform '" + std::string(s) +
                                        "' needs an integer argument after ':'");
        }
    };
    auto no_arg = [&] {
        if (has_arg) {
            throw std::invalid_argument("transform '" + std::string(head) +
                                        "' takes no argument");
        }
    };

    if (head == "add") {
        Cell k;
        parse_int(k);
        return AddScalar{k};
    }
    if (head == "mul") {
        Cell k;
        parse_int(k);
        return MulScalar{k};
    }
    if (head == "swap-rows-eq") {
        int r;
        parse_int(r);
        return SwapRowsEquidistant{r};
    }
    if (head == "swap-cols-eq") {
        int c;
        parse_int(c);
        return SwapColsEquidistant{c};
    }
    if (head == "transpose") {
        no_arg();
        return Transpose{};
    }
    if (head == "quadrants") {
        no_arg();
        return ExchangeDiagonalQuadrants{};
    }
    if (head == "exchange-1234-rows") {
        no_arg();
        return Exchange1234Rows{};
    }
    if (head == "exchange-1234-cols") {
        no_arg();
        return Exchange1234Cols{};
    }
    throw std::invalid_argument(
        "unknown transform '" + std::string(s) +
        "' (expected add:K, mul:K, transpose, swap-rows-eq:R, swap-cols-eq:C, quadrants, "
        "exchange-1234-rows or exchange-1234-cols)");
}

inline std::string to_string(const TransformSpec& t) {
    return std::visit(
        detail::overloaded{
            [](AddScalar s) { return "add:" + std::to_string(s.k); },
            [](MulScalar s) { return "mul:" + std::to_string(s.k); },
            [](Transpose) { return std::string("transpose"); },
            [](SwapRowsEquidistant s) { return "swap-rows-eq:" + std::to_string(s.row); },
            [](SwapColsEquidistant s) { return "swap-cols-eq:" + std::to_string(s.col); },
            [](ExchangeDiagonalQuadrants) { return std::string("quadrants"); },
            [](Exchange1234Rows) { return std::string("exchange-1234-rows"); },
            [](Exchange1234Cols) { return std::string("exchange-1234-cols"); },
        },
        t);
}

}  // namespace msq
