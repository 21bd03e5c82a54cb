#pragma once

#include <numeric>
#include <vector>

#include <msq/grid.hpp>

// Hand-checked reference squares shared across the test suites. Each one
// was verified by summing its lines independently before being frozen
// here.
namespace fixtures {

/// Expected output of the proposed construction at order 8; every row,
/// column and diagonal sums to 260.
inline msq::Grid proposed_order8() {
    return msq::Grid::from_rows({
        {1, 63, 62, 4, 5, 59, 58, 8},
        {56, 10, 11, 53, 52, 14, 15, 49},
        {48, 18, 19, 45, 44, 22, 23, 41},
        {25, 39, 38, 28, 29, 35, 34, 32},
        {33, 31, 30, 36, 37, 27, 26, 40},
        {24, 42, 43, 21, 20, 46, 47, 17},
        {16, 50, 51, 13, 12, 54, 55, 9},
        {57, 7, 6, 60, 61, 3, 2, 64},
    });
}

/// Expected output of the proposed construction at order 4 (line sum 34).
inline msq::Grid proposed_order4() {
    return msq::Grid::from_rows({
        {1, 15, 14, 4},
        {12, 6, 7, 9},
        {8, 10, 11, 5},
        {13, 3, 2, 16},
    });
}

/// Expected output of the classical construction at order 4; the
/// elementwise complement of proposed_order4().
inline msq::Grid classical_order4() {
    return msq::Grid::from_rows({
        {16, 2, 3, 13},
        {5, 11, 10, 8},
        {9, 7, 6, 12},
        {4, 14, 15, 1},
    });
}

/// A most-perfect order-4 square: pandiagonal, every wrapped 2x2 block
/// sums to 34, cells two apart on any diagonal sum to 17.
inline msq::Grid most_perfect_order4() {
    return msq::Grid::from_rows({
        {7, 12, 1, 14},
        {2, 13, 8, 11},
        {16, 3, 10, 5},
        {9, 6, 15, 4},
    });
}

/// The classic order-3 square (line sum 15, associative).
inline msq::Grid lo_shu() {
    return msq::Grid::from_rows({
        {2, 7, 6},
        {9, 5, 1},
        {4, 3, 8},
    });
}

/// Lo Shu with columns rotated left: rows and columns still sum to 15
/// but both diagonals break (12 and 6).
inline msq::Grid semi_magic3() {
    return msq::Grid::from_rows({
        {7, 6, 2},
        {5, 1, 9},
        {3, 8, 4},
    });
}

/// Row-major sequential fill 1..n^2 -- normal but not magic for n > 1.
inline msq::Grid sequential(int n) {
    std::vector<msq::Cell> cells(static_cast<std::size_t>(n) * n);
    std::iota(cells.begin(), cells.end(), msq::Cell{1});
    return msq::Grid(n, std::move(cells));
}

}  // namespace fixtures
