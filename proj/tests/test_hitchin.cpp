#include <doctest.h>

#include "equihitch/hitchin.hpp"

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

TEST_CASE("twist divisor coefficients") {
    const CoverData cover = double_cover();

    const GlobalType regular(2, {LocalType({1, 1}), LocalType({1, 1})});
    CHECK(twist_divisor(cover, regular, 2).coefficients == std::vector<long long>{0, 0});

    const GlobalType full(2, {LocalType({2, 0}), LocalType({2, 0})});
    CHECK(twist_divisor(cover, full, 2).coefficients == std::vector<long long>{-2, -2});

    // delta(1) = 1 always, so i=1 gives 1 - e at every point
    for (const GlobalType& g : {regular, full})
        CHECK(twist_divisor(cover, g, 1).coefficients == std::vector<long long>{-1, -1});

    CHECK_THROWS_AS(twist_divisor(cover, regular, 0), input_error);
    CHECK_THROWS_AS(twist_divisor(cover, regular, 3), input_error);
}

TEST_CASE("Hitchin component dims of the worked examples") {
    const CoverData cover = double_cover();
    const GlobalType g2(2, {LocalType({1, 1}), LocalType({1, 1})});
    CHECK(hitchin_component_dim(cover, g2, 1) == 2);  // h^0(K_Y) = g_Y
    CHECK(hitchin_component_dim(cover, g2, 2) == 5);

    const GlobalType g3(3, {LocalType({2, 1}), LocalType({2, 1})});
    CHECK(hitchin_component_dim(cover, g3, 3) == 7);
}

TEST_CASE("Hitchin base breakdown matches moduli dimension") {
    const CoverData cover = double_cover();

    SUBCASE("r=2 worked example") {
        const GlobalType g(2, {LocalType({1, 1}), LocalType({1, 1})});
        const HitchinBaseBreakdown b = hitchin_base_dim(cover, g);
        REQUIRE(b.per_degree.size() == 2);
        CHECK(b.per_degree[0] == std::pair<int, long long>{1, 2});
        CHECK(b.per_degree[1] == std::pair<int, long long>{2, 5});
        CHECK(b.total == 7);
    }

    SUBCASE("unramified classical count") {
        CoverData c;
        c.genus_base = 2;
        c.group_order = 2;
        const HitchinBaseBreakdown b = hitchin_base_dim(c, GlobalType(2, {}));
        CHECK(b.total == 5);  // 2 + 3
    }

    SUBCASE("r=3 worked example") {
        const GlobalType g(3, {LocalType({2, 1}), LocalType({2, 1})});
        CHECK(hitchin_base_dim(cover, g).total == 14);
    }
}

TEST_CASE("Hitchin identity and negative twists over an exhaustive sweep") {
    CoverData cover;
    cover.genus_base = 2;
    cover.group_order = 6;
    cover.branch_points = {BranchPoint{2}, BranchPoint{3}, BranchPoint{6}};
    REQUIRE(validate(cover).empty());

    for (int r = 1; r <= 3; ++r) {
        for (const LocalType& ta : enumerate_local_types(r, 2)) {
            for (const LocalType& tb : enumerate_local_types(r, 3)) {
                for (const LocalType& tc : enumerate_local_types(r, 6)) {
                    const GlobalType g(r, {ta, tb, tc});
                    const HitchinBaseBreakdown b = hitchin_base_dim(cover, g);
                    CHECK(b.total == moduli_dimension(cover, g).total);
                    for (int i = 1; i <= r; ++i)
                        for (long long c : twist_divisor(cover, g, i).coefficients)
                            CHECK(c <= 0);
                }
            }
        }
    }
}

TEST_CASE("component dims are shift-invariant") {
    const CoverData cover = double_cover();
    for (const LocalType& ta : enumerate_local_types(3, 2)) {
        for (const LocalType& tb : enumerate_local_types(3, 2)) {
            const GlobalType g(3, {ta, tb});
            for (int i = 1; i <= 3; ++i) {
                const long long dim = hitchin_component_dim(cover, g, i);
                const GlobalType h(3, {shift(ta, 1), shift(tb, 1)});
                CHECK(hitchin_component_dim(cover, h, i) == dim);
            }
        }
    }
}
