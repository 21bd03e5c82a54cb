#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "msq/grid.hpp"

namespace msq {

/// Largest order the exhaustive search accepts. Order 5 is far beyond
/// desk scale (well over 10^14 candidate prefixes survive pruning).
inline constexpr int kMaxEnumerationOrder = 4;

struct EnumerationResult {
    int order = 0;
    std::uint64_t total_count = 0;
    // canonical representatives under the 8 rotations/reflections
    std::uint64_t essentially_different_count = 0;
    std::vector<Grid> members;  // empty when counts-only was requested
};

/// The 8 rotation/reflection images of g, identity first.
inline std::vector<Grid> symmetry_images(const Grid& g) {
    const int n = g.order();
    const auto cells = g.cells();
    auto build = [&](auto&& dest_index) {
        std::vector<Cell> out(cells.size());
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                out[dest_index(r, c)] = cells[static_cast<std::size_t>(r) * n + c];
        return Grid(n, std::move(out));
    };
    auto idx = [n](int r, int c) { return static_cast<std::size_t>(r) * n + c; };
    std::vector<Grid> images;
    images.reserve(8);
    images.push_back(g);
    images.push_back(build([&](int r, int c) { return idx(c, n - 1 - r); }));          // rot 90
    images.push_back(build([&](int r, int c) { return idx(n - 1 - r, n - 1 - c); }));  // rot 180
    images.push_back(build([&](int r, int c) { return idx(n - 1 - c, r); }));          // rot 270
    images.push_back(build([&](int r, int c) { return idx(c, r); }));                  // transpose
    images.push_back(build([&](int r, int c) { return idx(n - 1 - c, n - 1 - r); }));  // anti-transpose
    images.push_back(build([&](int r, int c) { return idx(n - 1 - r, c); }));          // flip rows
    images.push_back(build([&](int r, int c) { return idx(r, n - 1 - c); }));          // flip cols
    return images;
}

/// Lexicographically smallest (row-major) of the 8 symmetry images.
inline Grid canonical_form(const Grid& g) {
    auto images = symmetry_images(g);
    auto least = std::min_element(images.begin(), images.end(),
                                  [](const Grid& a, const Grid& b) {
                                      return std::ranges::lexicographical_compare(a.cells(),
                                                                                  b.cells());
                                  });
    return *least;
}

namespace detail {

// Row-major backtracking fill over the unused values. A line is pruned
// as soon as its partial sum plus the smallest (largest) possible
// remainder overshoots (undershoots) the magic constant; a line's last
// cell is forced outright.
class MagicSquareSearch {
public:
    MagicSquareSearch(int n, bool collect)
        : n_(n),
          square_(n * n),
          sigma_(magic_constant(n)),
          collect_(collect),
          cells_(static_cast<std::size_t>(square_)),
          row_sum_(static_cast<std::size_t>(n)),
          col_sum_(static_cast<std::size_t>(n)) {
        // min_tail_[k] / max_tail_[k]: least/greatest sum k distinct values
        // from 1..n^2 can contribute
        min_tail_.resize(static_cast<std::size_t>(n_) + 1);
        max_tail_.resize(static_cast<std::size_t>(n_) + 1);
        for (int k = 0; k <= n_; ++k) {
            min_tail_[k] = static_cast<std::int64_t>(k) * (k + 1) / 2;
            max_tail_[k] = static_cast<std::int64_t>(k) * square_ -
                           static_cast<std::int64_t>(k) * (k - 1) / 2;
        }
    }

    EnumerationResult run() {
        result_.order = n_;
        fill_cell(0);
        return std::move(result_);
    }

private:
    bool value_admissible(int pos, int v) const {
        const int r = pos / n_;
        const int c = pos % n_;

        const std::int64_t rs = row_sum_[r] + v;
        if (c == n_ - 1) {
            if (rs != sigma_) return false;
        } else {
            const int k = n_ - 1 - c;
            if (rs + min_tail_[k] > sigma_ || rs + max_tail_[k] < sigma_) return false;
        }

        const std::int64_t cs = col_sum_[c] + v;
        if (r == n_ - 1) {
            if (cs != sigma_) return false;
        } else {
            const int k = n_ - 1 - r;
            if (cs + min_tail_[k] > sigma_ || cs + max_tail_[k] < sigma_) return false;
        }

        if (r == c) {
            const std::int64_t ds = diag_sum_ + v;
            if (r == n_ - 1) {
                if (ds != sigma_) return false;
            } else {
                const int k = n_ - 1 - r;
                if (ds + min_tail_[k] > sigma_ || ds + max_tail_[k] < sigma_) return false;
            }
        }
        if (r + c == n_ - 1) {
            const std::int64_t as = anti_sum_ + v;
            if (r == n_ - 1) {  // cell (n-1, 0) completes the anti diagonal
                if (as != sigma_) return false;
            } else {
                const int k = n_ - 1 - r;
                if (as + min_tail_[k] > sigma_ || as + max_tail_[k] < sigma_) return false;
            }
        }
        return true;
    }

    void place(int pos, int v) {
        const int r = pos / n_;
        const int c = pos % n_;
        cells_[static_cast<std::size_t>(pos)] = v;
        used_ |= std::uint32_t{1} << (v - 1);
        row_sum_[r] += v;
        col_sum_[c] += v;
        if (r == c) diag_sum_ += v;
        if (r + c == n_ - 1) anti_sum_ += v;
    }

    void unplace(int pos, int v) {
        const int r = pos / n_;
        const int c = pos % n_;
        used_ &= ~(std::uint32_t{1} << (v - 1));
        row_sum_[r] -= v;
        col_sum_[c] -= v;
        if (r == c) diag_sum_ -= v;
        if (r + c == n_ - 1) anti_sum_ -= v;
    }

    void try_value(int pos, int v) {
        if (v < 1 || v > square_) return;
        if (used_ & (std::uint32_t{1} << (v - 1))) return;
        if (!value_admissible(pos, v)) return;
        place(pos, v);
        fill_cell(pos + 1);
        unplace(pos, v);
    }

    void fill_cell(int pos) {
        if (pos == square_) {
            emit();
            return;
        }
        const int r = pos / n_;
        const int c = pos % n_;
        if (c == n_ - 1) {
            try_value(pos, static_cast<int>(sigma_ - row_sum_[r]));
        } else if (r == n_ - 1) {
            try_value(pos, static_cast<int>(sigma_ - col_sum_[c]));
        } else {
            for (int v = 1; v <= square_; ++v) try_value(pos, v);
        }
    }

    void emit() {
        Grid g(n_, cells_);
        ++result_.total_count;
        const auto images = symmetry_images(g);
        if (n_ >= 3) {
            // no order >= 3 normal magic square may be fixed by a nontrivial
            // symmetry; checked rather than assumed
            for (std::size_t a = 0; a < images.size(); ++a)
                for (std::size_t b = a + 1; b < images.size(); ++b)
                    if (images[a] == images[b]) {
                        throw std::logic_error(
                            "enumeration found a magic square fixed by a nontrivial symmetry");
                    }
        }
        const Grid* least = &images[0];
        for (const Grid& im : images) {
            if (std::ranges::lexicographical_compare(im.cells(), least->cells())) least = &im;
        }
        if (*least == g) ++result_.essentially_different_count;
        if (collect_) result_.members.push_back(std::move(g));
    }

    int n_;
    int square_;
    std::int64_t sigma_;
    bool collect_;
    std::vector<Cell> cells_;
    std::uint32_t used_ = 0;
    std::vector<std::int64_t> row_sum_, col_sum_;
    std::int64_t diag_sum_ = 0, anti_sum_ = 0;
    std::vector<std::int64_t> min_tail_, max_tail_;
    EnumerationResult result_;
};

}  // namespace detail

/**
 * Exhaustively enumerates every normal magic square of order n <= 4,
 * each exactly once, counting canonical representatives along the way.
 * With collect_members = false only the counts are kept.
 */
inline EnumerationResult enumerate(int n, bool collect_members = true) {
    if (n < 1) {
        throw std::invalid_argument("order must be positive, got " + std::to_string(n));
    }
    if (n > kMaxEnumerationOrder) {
        throw std::invalid_argument("exhaustive enumeration is limited to order <= " +
                                    std::to_string(kMaxEnumerationOrder) + "; order " +
                                    std::to_string(n) + " is beyond desk scale");
    }
    return detail::MagicSquareSearch(n, collect_members).run();
}

/**
 * Membership test against a materialized enumeration: g is looked up by
 * canonical form, then confirmed against the matching member's images.
 */
inline bool contains(const EnumerationResult& result, const Grid& g) {
    if (g.order() != result.order) {
        throw std::invalid_argument("grid order " + std::to_string(g.order()) +
                                    " does not match enumeration order " +
                                    std::to_string(result.order));
    }
    if (result.members.empty() && result.total_count > 0) {
        throw std::invalid_argument("membership test needs a materialized enumeration "
                                    "(collect_members = true)");
    }
    const Grid canon = canonical_form(g);
    for (const Grid& m : result.members) {
        if (canonical_form(m) == canon) {
            const auto images = symmetry_images(m);
            return std::find(images.begin(), images.end(), g) != images.end();
        }
    }
    return false;
}

}  // namespace msq
