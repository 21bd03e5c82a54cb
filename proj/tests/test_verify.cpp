#include <catch_amalgamated.hpp>

#include <random>

#include <msq/construct.hpp>
#include <msq/verify.hpp>

#include "fixtures.hpp"

using msq::ConstructionMethod;

namespace {

msq::Grid transpose_by_hand(const msq::Grid& g) {
    const int n = g.order();
    std::vector<msq::Cell> out(g.cells().size());
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c)
            out[static_cast<std::size_t>(c) * n + r] = g.at(r, c);
    return msq::Grid(n, std::move(out));
}

msq::Grid random_grid(std::mt19937_64& rng, int n, std::int64_t lo, std::int64_t hi) {
    std::uniform_int_distribution<std::int64_t> dist(lo, hi);
    std::vector<msq::Cell> cells(static_cast<std::size_t>(n) * n);
    for (auto& c : cells) c = dist(rng);
    return msq::Grid(n, std::move(cells));
}

}  // namespace

TEST_CASE("verify_magic on reference squares", "[verify]") {
    SECTION("the order-8 construction output") {
        const msq::MagicReport rep = msq::verify_magic(fixtures::proposed_order8());
        CHECK(rep.is_magic);
        CHECK(rep.is_normal);
        REQUIRE(rep.observed_constant.has_value());
        CHECK(*rep.observed_constant == 260);
        CHECK(rep.expected_constant == 260);
        CHECK(rep.row_sums == std::vector<std::int64_t>(8, 260));
        CHECK(rep.col_sums == std::vector<std::int64_t>(8, 260));
        CHECK(rep.main_diag_sum == 260);
        CHECK(rep.anti_diag_sum == 260);
    }

    SECTION("the classic order-3 square") {
        const msq::MagicReport rep = msq::verify_magic(fixtures::lo_shu());
        CHECK(rep.is_magic);
        CHECK(rep.is_normal);
        CHECK(rep.observed_constant == 15);
    }

    SECTION("sequential fill is normal but not magic") {
        const msq::MagicReport rep = msq::verify_magic(fixtures::sequential(3));
        CHECK_FALSE(rep.is_magic);
        CHECK(rep.is_normal);
        CHECK_FALSE(rep.observed_constant.has_value());
        CHECK(rep.row_sums == std::vector<std::int64_t>{6, 15, 24});
    }

    SECTION("rows and columns agreeing is not enough") {
        const msq::MagicReport rep = msq::verify_magic(fixtures::semi_magic3());
        CHECK(rep.row_sums == std::vector<std::int64_t>(3, 15));
        CHECK(rep.col_sums == std::vector<std::int64_t>(3, 15));
        CHECK(rep.main_diag_sum == 12);
        CHECK(rep.anti_diag_sum == 6);
        CHECK_FALSE(rep.is_magic);
        CHECK_FALSE(rep.observed_constant.has_value());
        CHECK(rep.is_normal);
    }

    SECTION("single cell") {
        const msq::MagicReport rep = msq::verify_magic(msq::Grid(1, {1}));
        CHECK(rep.is_magic);
        CHECK(rep.is_normal);
        CHECK(rep.observed_constant == 1);
    }

    SECTION("non-normal entries are reported") {
        const msq::MagicReport dup = msq::verify_magic(msq::Grid(2, {1, 1, 2, 2}));
        CHECK_FALSE(dup.is_normal);
        const msq::MagicReport range = msq::verify_magic(msq::Grid(2, {0, 5, 2, 3}));
        CHECK_FALSE(range.is_normal);
        // magic without normality: constant entries
        const msq::MagicReport flat = msq::verify_magic(msq::Grid(2, {7, 7, 7, 7}));
        CHECK(flat.is_magic);
        CHECK_FALSE(flat.is_normal);
        CHECK(flat.observed_constant == 14);
    }
}

TEST_CASE("magic verdict is transpose-stable", "[verify]") {
    std::mt19937_64 rng(20240817);
    std::vector<msq::Grid> pool = {
        fixtures::proposed_order4(),  fixtures::classical_order4(), fixtures::lo_shu(),
        fixtures::semi_magic3(),      fixtures::sequential(4),      fixtures::proposed_order8(),
        fixtures::most_perfect_order4(),
    };
    for (int k = 0; k < 40; ++k) pool.push_back(random_grid(rng, 1 + k % 6, -50, 50));

    for (const msq::Grid& g : pool) {
        const msq::MagicReport a = msq::verify_magic(g);
        const msq::MagicReport b = msq::verify_magic(transpose_by_hand(g));
        CHECK(a.is_magic == b.is_magic);
        CHECK(a.is_normal == b.is_normal);
        CHECK(a.observed_constant == b.observed_constant);
    }
}

TEST_CASE("associativity predicate", "[verify]") {
    CHECK(msq::is_associative(fixtures::proposed_order8()));
    CHECK(msq::is_associative(fixtures::proposed_order4()));
    CHECK(msq::is_associative(fixtures::classical_order4()));
    CHECK(msq::is_associative(fixtures::lo_shu()));  // center-symmetric pairs sum to 10
    CHECK_FALSE(msq::is_associative(fixtures::most_perfect_order4()));  // corners 7 + 4 = 11
    // no magic requirement: a plain sequential fill pairs v with n^2+1-v too
    CHECK(msq::is_associative(fixtures::sequential(4)));
    CHECK(msq::is_associative(fixtures::sequential(5)));

    SECTION("a single violated pair flips the verdict") {
        auto rows = std::vector<std::vector<msq::Cell>>{
            {2, 7, 6}, {9, 5, 1}, {4, 3, 9}};  // corner pair 2 + 9 != 10
        CHECK_FALSE(msq::is_associative(msq::Grid::from_rows(rows)));
    }
}

TEST_CASE("pandiagonality predicate", "[verify]") {
    CHECK(msq::is_pandiagonal(fixtures::most_perfect_order4()));
    CHECK_FALSE(msq::is_pandiagonal(fixtures::proposed_order4()));
    CHECK_FALSE(msq::is_pandiagonal(fixtures::classical_order4()));
    CHECK_FALSE(msq::is_pandiagonal(fixtures::lo_shu()));
    // non-magic grids are never pandiagonal
    CHECK_FALSE(msq::is_pandiagonal(fixtures::sequential(4)));

    SECTION("the defeating broken diagonal of the order-4 construction") {
        const msq::Grid g = fixtures::proposed_order4();
        CHECK(g.at(0, 1) + g.at(1, 2) + g.at(2, 3) + g.at(3, 0) == 40);
    }

    SECTION("pandiagonal implies magic") {
        const msq::Grid g = fixtures::most_perfect_order4();
        REQUIRE(msq::is_pandiagonal(g));
        CHECK(msq::verify_magic(g).is_magic);
    }
}

TEST_CASE("most-perfect predicate", "[verify]") {
    CHECK(msq::is_most_perfect(fixtures::most_perfect_order4()));
    CHECK_FALSE(msq::is_most_perfect(fixtures::proposed_order4()));
    CHECK_FALSE(msq::is_most_perfect(fixtures::classical_order4()));
    CHECK_FALSE(msq::is_most_perfect(msq::construct(8, ConstructionMethod::Proposed)));
    CHECK_FALSE(msq::is_most_perfect(msq::construct(8, ConstructionMethod::Classical)));

    SECTION("the defeating 2x2 block of the order-4 construction") {
        const msq::Grid g = fixtures::proposed_order4();
        CHECK(g.at(0, 1) + g.at(0, 2) + g.at(1, 1) + g.at(1, 2) == 42);
    }

    SECTION("all wrapped 2x2 sums and half-diagonal pairs of the reference square") {
        const msq::Grid g = fixtures::most_perfect_order4();
        for (int r = 0; r < 4; ++r) {
            for (int c = 0; c < 4; ++c) {
                CHECK(g.at(r, c) + g.at(r, (c + 1) % 4) + g.at((r + 1) % 4, c) +
                          g.at((r + 1) % 4, (c + 1) % 4) == 34);
                CHECK(g.at(r, c) + g.at((r + 2) % 4, (c + 2) % 4) == 17);
            }
        }
    }

    SECTION("defined only for doubly even orders") {
        CHECK_THROWS_AS(msq::is_most_perfect(fixtures::lo_shu()), std::invalid_argument);
        CHECK_THROWS_AS(msq::is_most_perfect(fixtures::sequential(6)), std::invalid_argument);
    }
}
