#include <doctest.h>

#include <cstdint>

#include "equihitch/hitchin.hpp"
#include "equihitch/moduli.hpp"

using namespace equihitch;

namespace {

CoverData double_cover() {
    CoverData cover;
    cover.genus_base = 2;
    cover.group_order = 2;
    cover.branch_points = {BranchPoint{2}, BranchPoint{2}};
    return cover;
}

} // namespace

TEST_CASE("moduli dimension of the worked double-cover examples") {
    const CoverData cover = double_cover();

    SUBCASE("r=2, theta=(1,1) at both points") {
        const GlobalType g(2, {LocalType({1, 1}), LocalType({1, 1})});
        const DimensionBreakdown b = moduli_dimension(cover, g);
        CHECK(b.total == 7);
        CHECK(b.base_term == 5);
        REQUIRE(b.per_branch_corrections.size() == 2);
        CHECK(b.per_branch_corrections[0] == Rational(1));
        CHECK(b.per_branch_corrections[1] == Rational(1));
        CHECK(moduli_dimension_form_a(cover, g) == 7);
    }

    SUBCASE("r=3, theta=(2,1) at both points") {
        const GlobalType g(3, {LocalType({2, 1}), LocalType({2, 1})});
        const DimensionBreakdown b = moduli_dimension(cover, g);
        CHECK(b.total == 14);
        CHECK(b.base_term == 10);
        CHECK(b.per_branch_corrections[0] == Rational(2));
        CHECK(moduli_dimension_form_a(cover, g) == 14);
    }

    SUBCASE("unramified cover reduces to the base term") {
        CoverData c;
        c.genus_base = 2;
        c.group_order = 2;
        const GlobalType g(2, {});
        CHECK(moduli_dimension(c, g).total == 5);
        CHECK(moduli_dimension_form_a(c, g) == 5);
        CoverData c3 = c;
        c3.group_order = 3;
        CHECK(moduli_dimension_form_a(c3, g) == 5);
    }
}

TEST_CASE("full types have vanishing corrections") {
    const CoverData cover = double_cover();
    for (int r = 1; r <= 5; ++r) {
        std::vector<int> full = {r, 0};
        const GlobalType g(r, {LocalType(full), LocalType(full)});
        CHECK(moduli_dimension(cover, g).total == static_cast<long long>(r) * r + 1);
    }
}

TEST_CASE("forms agree and dimension is shift-invariant over a sweep") {
    CoverData cover;
    cover.genus_base = 3;
    cover.group_order = 6;
    cover.branch_points = {BranchPoint{2}, BranchPoint{3}, BranchPoint{6}};
    REQUIRE(validate(cover).empty());

    for (int r = 1; r <= 3; ++r) {
        for (const LocalType& t2 : enumerate_local_types(r, 2)) {
            for (const LocalType& t3 : enumerate_local_types(r, 3)) {
                for (const LocalType& t6 : enumerate_local_types(r, 6)) {
                    const GlobalType g(r, {t2, t3, t6});
                    const long long total = moduli_dimension(cover, g).total;
                    CHECK(moduli_dimension_form_a(cover, g) == total);
                    for (int j = 1; j < 6; ++j) {
                        const GlobalType h(
                            r, {shift(t2, j % 2), shift(t3, j % 3), shift(t6, j % 6)});
                        CHECK(moduli_dimension(cover, h).total == total);
                    }
                }
            }
        }
    }
}

TEST_CASE("forms agree on randomized higher-rank types") {
    // beyond the exhaustive envelope: random types of rank 5..9
    std::uint64_t state = 0x2545F4914F6CDD1DULL;
    auto next = [&state](int bound) {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return static_cast<int>(state % static_cast<std::uint64_t>(bound));
    };
    CoverData cover;
    cover.genus_base = 3;
    cover.group_order = 12;
    cover.branch_points = {BranchPoint{4}, BranchPoint{4}, BranchPoint{6}};
    REQUIRE(validate(cover).empty());

    for (int trial = 0; trial < 200; ++trial) {
        const int r = 5 + next(5);
        std::vector<LocalType> types;
        for (const BranchPoint& bp : cover.branch_points) {
            std::vector<int> mult(static_cast<std::size_t>(bp.ram_index), 0);
            for (int unit = 0; unit < r; ++unit) ++mult[static_cast<std::size_t>(next(bp.ram_index))];
            types.emplace_back(std::move(mult));
        }
        const GlobalType g(r, std::move(types));
        const DimensionBreakdown b = moduli_dimension(cover, g);
        CHECK(moduli_dimension_form_a(cover, g) == b.total);
        CHECK(hitchin_base_dim(cover, g).total == b.total);
    }
}

TEST_CASE("incompatible type and cover are rejected") {
    const CoverData cover = double_cover();
    CHECK_THROWS_AS(moduli_dimension(cover, GlobalType(2, {LocalType({1, 1})})), input_error);
    CHECK_THROWS_AS(moduli_dimension_form_a(cover, GlobalType(2, {LocalType({1, 1})})),
                    input_error);
}
