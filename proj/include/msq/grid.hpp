#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace msq {

using Cell = std::int64_t;

/**
 * Order classification of a square grid.
 *
 * Doubly even means n is divisible by four, singly even means n is even
 * but not divisible by four. n = 1 is a trivial single cell and n = 2
 * admits no magic square at all.
 */
enum class OrderClass { Trivial, Impossible, Odd, SinglyEven, DoublyEven };

inline const char* to_string(OrderClass c) {
    switch (c) {
        case OrderClass::Trivial: return "trivial";
        case OrderClass::Impossible: return "impossible";
        case OrderClass::Odd: return "odd";
        case OrderClass::SinglyEven: return "singly even";
        case OrderClass::DoublyEven: return "doubly even";
    }
    return "?";
}

inline OrderClass classify_order(int n) {
    if (n < 1) {
        throw std::invalid_argument("order must be positive, got " + std::to_string(n));
    }
    if (n == 1) return OrderClass::Trivial;
    if (n == 2) return OrderClass::Impossible;
    if (n % 2 == 1) return OrderClass::Odd;
    return n % 4 == 0 ? OrderClass::DoublyEven : OrderClass::SinglyEven;
}

/// Common line sum of a normal magic square of order n: n(n^2+1)/2.
inline std::int64_t magic_constant(int n) {
    if (n < 1) {
        throw std::invalid_argument("order must be positive, got " + std::to_string(n));
    }
    const auto m = static_cast<std::int64_t>(n);
    // one of n and n^2+1 is even, so the division is exact
    return m % 2 == 0 ? (m / 2) * (m * m + 1) : m * ((m * m + 1) / 2);
}

/// Row-major sequential fill value (i-1)*n + j for 1-based row i, column j.
inline std::int64_t cell_value(int i, int j, int n) {
    if (i < 1 || i > n || j < 1 || j > n) {
        throw std::out_of_range("cell (" + std::to_string(i) + ", " + std::to_string(j) +
                                ") outside grid of order " + std::to_string(n));
    }
    return static_cast<std::int64_t>(i - 1) * n + j;
}

/// Complement of a cell value within {1, ..., n^2}: n^2 + 1 - v.
inline std::int64_t complement(std::int64_t v, int n) {
    const std::int64_t sq = static_cast<std::int64_t>(n) * n;
    if (v < 1 || v > sq) {
        throw std::out_of_range("value " + std::to_string(v) + " outside 1.." + std::to_string(sq));
    }
    return sq + 1 - v;
}

/**
 * An n-by-n square of 64-bit integers, stored row-major.
 *
 * Immutable after construction; all operations on grids build new ones.
 * A Grid makes no promise that its entries are 1..n^2 -- normality is a
 * checkable predicate, not a constructor guarantee.
 */
class Grid {
public:
    Grid(int order, std::vector<Cell> cells)
        : order_(order), cells_(std::move(cells)) {
        if (order_ < 1) {
            throw std::invalid_argument("order must be positive, got " + std::to_string(order_));
        }
        const auto expected = static_cast<std::size_t>(order_) * static_cast<std::size_t>(order_);
        if (cells_.size() != expected) {
            throw std::invalid_argument("grid of order " + std::to_string(order_) + " needs " +
                                        std::to_string(expected) + " cells, got " +
                                        std::to_string(cells_.size()));
        }
    }

    static Grid from_rows(const std::vector<std::vector<Cell>>& rows) {
        const int n = static_cast<int>(rows.size());
        std::vector<Cell> cells;
        cells.reserve(rows.size() * rows.size());
        for (const auto& row : rows) {
            if (row.size() != rows.size()) {
                throw std::invalid_argument("rows of a square grid must all have length " +
                                            std::to_string(rows.size()));
            }
            cells.insert(cells.end(), row.begin(), row.end());
        }
        return Grid(n, std::move(cells));
    }

    int order() const noexcept { return order_; }

    /// Cell at 0-based (row, col).
    Cell at(int row, int col) const {
        if (row < 0 || row >= order_ || col < 0 || col >= order_) {
            throw std::out_of_range("cell (" + std::to_string(row) + ", " + std::to_string(col) +
                                    ") outside grid of order " + std::to_string(order_));
        }
        return cells_[static_cast<std::size_t>(row) * order_ + col];
    }

    std::span<const Cell> cells() const noexcept { return cells_; }

    bool operator==(const Grid&) const = default;

private:
    int order_;
    std::vector<Cell> cells_;
};

}  // namespace msq
