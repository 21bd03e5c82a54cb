#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "msq/grid.hpp"

namespace msq {

/**
 * Verification verdict for one grid: all 2n+2 line sums, the common
 * constant when every line agrees, and whether the entries are exactly
 * {1, ..., n^2}.
 */
struct MagicReport {
    int order = 0;
    std::vector<std::int64_t> row_sums;
    std::vector<std::int64_t> col_sums;
    std::int64_t main_diag_sum = 0;
    std::int64_t anti_diag_sum = 0;
    std::optional<std::int64_t> observed_constant;  // present iff all lines agree
    bool is_magic = false;
    bool is_normal = false;
    std::int64_t expected_constant = 0;  // magic_constant(order)
};

inline MagicReport verify_magic(const Grid& g) {
    const int n = g.order();
    const auto cells = g.cells();

    MagicReport rep;
    rep.order = n;
    rep.expected_constant = magic_constant(n);
    rep.row_sums.assign(n, 0);
    rep.col_sums.assign(n, 0);
    for (int r = 0; r < n; ++r) {
        const Cell* row = cells.data() + static_cast<std::size_t>(r) * n;
        std::int64_t rs = 0;
        for (int c = 0; c < n; ++c) {
            rs += row[c];
            rep.col_sums[c] += row[c];
        }
        rep.row_sums[r] = rs;
        rep.main_diag_sum += row[r];
        rep.anti_diag_sum += row[n - 1 - r];
    }

    const std::int64_t s = rep.row_sums[0];
    rep.is_magic = std::all_of(rep.row_sums.begin(), rep.row_sums.end(),
                               [s](std::int64_t x) { return x == s; }) &&
                   std::all_of(rep.col_sums.begin(), rep.col_sums.end(),
                               [s](std::int64_t x) { return x == s; }) &&
                   rep.main_diag_sum == s && rep.anti_diag_sum == s;
    if (rep.is_magic) rep.observed_constant = s;

    const std::int64_t sq = static_cast<std::int64_t>(n) * n;
    std::vector<bool> seen(static_cast<std::size_t>(sq), false);
    rep.is_normal = true;
    for (const Cell v : cells) {
        if (v < 1 || v > sq || seen[static_cast<std::size_t>(v - 1)]) {
            rep.is_normal = false;
            break;
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
    return rep;
}

/// True iff every center-symmetric cell pair sums to n^2 + 1.
inline bool is_associative(const Grid& g) {
    const int n = g.order();
    const auto cells = g.cells();
    const std::int64_t target = static_cast<std::int64_t>(n) * n + 1;
    const std::size_t total = cells.size();
    for (std::size_t p = 0; p < total; ++p) {
        if (cells[p] + cells[total - 1 - p] != target) return false;
    }
    return true;
}

/**
 * True iff g is magic and every broken diagonal in both directions also
 * sums to the observed constant. Non-magic grids are simply not
 * pandiagonal.
 */
inline bool is_pandiagonal(const Grid& g) {
    const MagicReport rep = verify_magic(g);
    if (!rep.is_magic) return false;
    const int n = g.order();
    const std::int64_t s = *rep.observed_constant;
    for (int d = 0; d < n; ++d) {
        std::int64_t down = 0;  // cells (r, r+d mod n)
        std::int64_t up = 0;    // cells (r, d-r mod n)
        for (int r = 0; r < n; ++r) {
            down += g.at(r, (r + d) % n);
            up += g.at(r, ((d - r) % n + n) % n);
        }
        if (down != s || up != s) return false;
    }
    return true;
}

/**
 * Most-perfect check, defined only for doubly even order:
 *
 *   (a) cells n/2 apart along any toroidal diagonal, in either
 *       direction, sum to n^2 + 1 -- which reduces to pairing (r, c)
 *       with (r + n/2, c + n/2) mod n, since shifting n/2 steps along
 *       either diagonal moves n/2 both ways mod n;
 *   (b) every 2x2 subsquare with toroidal wraparound (all n^2 of them)
 *       sums to 2(n^2 + 1).
 *
 * The shared 2x2 constant can only be 2(n^2+1): the n^2 wrapped
 * subsquares together count every entry exactly four times, so for a
 * normal square the constant is 4 * (n^2(n^2+1)/2) / n^2.
 */
inline bool is_most_perfect(const Grid& g) {
    const int n = g.order();
    if (classify_order(n) != OrderClass::DoublyEven) {
        throw std::invalid_argument("most-perfect is defined only for doubly even orders; order " +
                                    std::to_string(n) + " is " + to_string(classify_order(n)));
    }
    const int h = n / 2;
    const std::int64_t pair_target = static_cast<std::int64_t>(n) * n + 1;
    // each unordered half-turn pair once: rows 0..h-1 against rows h..n-1
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < n; ++c) {
            if (g.at(r, c) + g.at(r + h, (c + h) % n) != pair_target) return false;
        }
    }
    const std::int64_t block_target = 2 * pair_target;
    for (int r = 0; r < n; ++r) {
        const int r1 = (r + 1) % n;
        for (int c = 0; c < n; ++c) {
            const int c1 = (c + 1) % n;
            if (g.at(r, c) + g.at(r, c1) + g.at(r1, c) + g.at(r1, c1) != block_target)
                return false;
        }
    }
    return true;
}

}  // namespace msq
