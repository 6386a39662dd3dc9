#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "d4u/rootsys.hpp"

using namespace d4u;

TEST_CASE("the twelve positive roots") {
    CHECK(roots().size() == 12);
    CHECK(root(12).coeffs == std::array<int, 4>{1, 1, 2, 1});
    CHECK(root(12).height == 5);
    CHECK(root(11).coeffs == std::array<int, 4>{1, 1, 1, 1});
    CHECK(root(5).coeffs == std::array<int, 4>{1, 0, 1, 0});
    CHECK(root(5).height == 2);
    CHECK(root(6).coeffs == std::array<int, 4>{0, 1, 1, 0});
    CHECK(root(7).coeffs == std::array<int, 4>{0, 0, 1, 1});
    CHECK(root(8).coeffs == std::array<int, 4>{1, 1, 1, 0});
    CHECK(root(9).coeffs == std::array<int, 4>{1, 0, 1, 1});
    CHECK(root(10).coeffs == std::array<int, 4>{0, 1, 1, 1});
    CHECK(root(1).coeffs == std::array<int, 4>{1, 0, 0, 0});
    CHECK(root(1).height == 1);

    std::map<int, int> heights;
    for (const Root& r : roots()) ++heights[r.height];
    CHECK(heights == std::map<int, int>{{1, 4}, {2, 3}, {3, 3}, {4, 1}, {5, 1}});
}

TEST_CASE("commutator relations") {
    auto r13 = comm(1, 3);
    REQUIRE(r13.has_value());
    CHECK(r13->k == 5);
    CHECK(r13->sign == +1);

    auto r16 = comm(1, 6);
    REQUIRE(r16.has_value());
    CHECK(r16->k == 8);
    CHECK(r16->sign == -1);

    CHECK_FALSE(comm(1, 2).has_value());
    CHECK_THROWS(comm(3, 3));

    // swapped pairs negate the sign
    auto r31 = comm(3, 1);
    REQUIRE(r31.has_value());
    CHECK(r31->k == 5);
    CHECK(r31->sign == -1);

    CHECK(comm_table().size() == 16);
    int nontrivial = 0;
    for (int i = 1; i <= 12; ++i)
        for (int j = i + 1; j <= 12; ++j) {
            auto rel = comm(i, j);
            auto sum = root_sum(i, j);
            CHECK(rel.has_value() == sum.has_value());
            if (rel) {
                ++nontrivial;
                CHECK(rel->k == *sum);
                // coefficient sum and height growth
                for (int t = 0; t < 4; ++t)
                    CHECK(root(rel->k).coeffs[(size_t)t] ==
                          root(i).coeffs[(size_t)t] + root(j).coeffs[(size_t)t]);
                CHECK(root(rel->k).height >
                      std::max(root(i).height, root(j).height));
            }
        }
    CHECK(nontrivial == 16);
}

TEST_CASE("hooks, arms and legs") {
    CHECK(hook(12) == RootSet::of({3, 5, 6, 7, 8, 9, 10, 11, 12}));
    CHECK(arm(12) == RootSet::of({8, 9, 10, 11}));
    CHECK(leg(12) == RootSet::of({3, 5, 6, 7}));

    CHECK(hook(1) == RootSet::of({1}));
    CHECK(leg(1).empty());

    CHECK(leg(11) == RootSet::of({1, 2, 4}));
    CHECK(arm(11) == RootSet::of({8, 9, 10}));

    CHECK(leg(8) == RootSet::of({1, 2}));

    // hook = arm + leg + {alpha}, disjoint, with |arm| = |leg|
    for (int a = 1; a <= 12; ++a) {
        RootSet h = hook(a), ar = arm(a), lg = leg(a);
        CHECK(h.size() == 1 + ar.size() + lg.size());
        CHECK(ar.size() == lg.size());
        CHECK((ar & lg).empty());
        CHECK(h.contains(a));
        CHECK_FALSE(ar.contains(a));
        CHECK_FALSE(lg.contains(a));
        CHECK((ar | lg | RootSet::of({a})) == h);
    }

    // leg sizes by height drive the midafi degrees
    const int want[6] = {0, 0, 1, 2, 3, 4};
    for (const Root& r : roots()) CHECK(leg(r.index).size() == want[r.height]);
}

TEST_CASE("closed sets") {
    CHECK(is_closed(RootSet::of({1, 3, 5})));
    CHECK_FALSE(is_closed(RootSet::of({1, 3})));
    CHECK_THROWS(is_closed(RootSet()));

    for (int a = 1; a <= 12; ++a) {
        CHECK(is_closed(v_alpha(a)));
        CHECK(is_closed(hook(a)));
    }

    CHECK(v_alpha(12) == RootSet::of({1, 2, 4, 8, 9, 10, 11, 12}));
    CHECK(v_alpha(1) == RootSet::all());
    CHECK(v_alpha(8) == RootSet::all() - RootSet::of({1, 2}));
}

TEST_CASE("upper-closed sets") {
    CHECK(is_upper_closed(RootSet::of({12})));
    CHECK(is_upper_closed(RootSet::of({11, 12})));
    CHECK(is_upper_closed(RootSet::of({5, 6, 7, 8, 9, 10, 11, 12})));
    CHECK_FALSE(is_upper_closed(RootSet::of({5})));   // 5+10 = 12
    CHECK_FALSE(is_upper_closed(RootSet::of({1, 3, 5})));
    // upper-closed implies closed
    for (std::uint16_t bits = 1; bits < (1u << 12); ++bits) {
        RootSet s(bits);
        if (is_upper_closed(s)) CHECK(is_closed(s));
    }
}
