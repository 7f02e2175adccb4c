#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "ctab/propagation.hpp"
#include "ctab/staircase.hpp"
#include "test_util.hpp"

using namespace ctab;
using testutil::all_compositions;
using testutil::worked_example;

TEST_CASE("maximal staircases of the worked example", "[staircase]") {
    Diagram d(worked_example());
    auto stairs = enumerate_staircases(d);
    REQUIRE(stairs.size() == 3);

    CHECK(stairs[0].cols == std::vector<int>{5, 6, 7});
    CHECK(stairs[0].first_height == 2);
    CHECK(stairs[0].last_height == 4);
    CHECK(stairs[0].base == BoxCoord{2, 4});
    CHECK(stairs[0].right_extremal);

    CHECK(stairs[1].cols == std::vector<int>{8});
    CHECK(stairs[1].depth() == 1);
    CHECK(stairs[1].base == BoxCoord{1, 7});
    CHECK_FALSE(stairs[1].right_extremal);

    CHECK(stairs[2].cols == std::vector<int>{9, 10});
    CHECK(stairs[2].first_height == 1);
    CHECK(stairs[2].depth() == 2);
    CHECK(stairs[2].base == BoxCoord{1, 8});
    CHECK(stairs[2].right_extremal);
}

TEST_CASE("no right-extremal staircase in (1,2,1,1,1,2,3)", "[staircase]") {
    Diagram d(Composition({1, 2, 1, 1, 1, 2, 3}));
    auto stairs = enumerate_staircases(d);
    REQUIRE(stairs.size() == 3);
    CHECK(stairs[0].cols == std::vector<int>{3});
    CHECK(stairs[1].cols == std::vector<int>{4});
    CHECK(stairs[2].cols == std::vector<int>{5, 6});
    for (const auto& s : stairs) CHECK_FALSE(s.right_extremal);
}

TEST_CASE("staircases partition the columns owning a left neighbour", "[staircase]") {
    for (int m = 1; m <= 8; ++m) {
        for (const auto& c : all_compositions(m)) {
            Diagram d(c);
            std::map<int, int> hits;
            for (const auto& s : enumerate_staircases(d)) {
                int expect = s.first_height;
                for (int col : s.cols) {
                    REQUIRE(d.height(col) == expect);
                    REQUIRE(left_neighbor(d, col).has_value());
                    ++hits[col];
                    ++expect;
                }
            }
            for (int col = 1; col <= d.columns(); ++col)
                REQUIRE(hits[col] == (left_neighbor(d, col) ? 1 : 0));
        }
    }
}

TEST_CASE("at most one right-extremal staircase per depth", "[staircase]") {
    for (int m = 1; m <= 8; ++m) {
        for (const auto& c : all_compositions(m)) {
            std::map<int, int> per_depth;
            for (const auto& s : enumerate_staircases(Diagram(c)))
                if (s.right_extremal) REQUIRE(++per_depth[s.depth()] == 1);
        }
    }
}

TEST_CASE("right-extremal boxes of the worked example", "[staircase]") {
    Diagram d(worked_example());
    std::set<BoxCoord> expected{{2, 4}, {4, 7}, {1, 8}, {1, 10}, {2, 10}};
    CHECK(right_extremal_boxes(d) == expected);
    CHECK(is_right_extremal(d, BoxCoord{2, 4}));
    CHECK_FALSE(is_right_extremal(d, BoxCoord{3, 7}));
}

TEST_CASE("extremal boxes are exactly the entries that exit the diagram", "[staircase]") {
    for (int m = 1; m <= 8; ++m) {
        for (const auto& c : all_compositions(m)) {
            Tableau t = build_tableau(c);
            auto ext = propagate(t, PrecedenceOrder(t));
            std::set<BoxCoord> exits;
            for (Entry e = 1; e <= t.n(); ++e)
                if (ext.trajectory(e).stop.kind == StopKind::EndOfDiagram) exits.insert(t.box_of(e));
            REQUIRE(right_extremal_boxes(t.diagram()) == exits);
        }
    }
}

TEST_CASE("extremality is monotone under suffix removal", "[staircase]") {
    for (int m = 1; m <= 8; ++m) {
        for (const auto& c : all_compositions(m)) {
            const int k = c.columns();
            std::vector<std::set<BoxCoord>> per_prefix;
            for (int q = 1; q <= k; ++q) per_prefix.push_back(right_extremal_boxes(Diagram(c.prefix(q))));
            for (int q = 2; q <= k; ++q)
                for (const BoxCoord& b : per_prefix[static_cast<size_t>(q) - 1])
                    if (b.col <= q - 1) REQUIRE(per_prefix[static_cast<size_t>(q) - 2].count(b) == 1);
        }
    }
}

TEST_CASE("oracle composition map golden values", "[staircase]") {
    auto oracle = [](const Composition& c) {
        Tableau t = build_tableau(c);
        return oracle_composition_map(t.diagram(), t);
    };
    CHECK(oracle(Composition({2, 1})) == std::vector<Entry>{3, 2, 0});
    CHECK(oracle(Composition({1, 1})) == std::vector<Entry>{2, 1});
    CHECK(oracle(Composition({1, 2, 4, 3, 2, 3, 4, 1, 1})) == std::vector<Entry>{21, 20, 18, 19, 9});
    CHECK(oracle(worked_example()) == std::vector<Entry>{22, 23, 20, 19, 9});
    CHECK(oracle(Composition({1, 2, 1, 1, 1, 2, 3})) == std::vector<Entry>{9, 10, 11, 0});
}

TEST_CASE("oracle map equals propagation map on every small composition", "[staircase]") {
    for (int m = 1; m <= 8; ++m) {
        for (const auto& c : all_compositions(m)) {
            Tableau t = build_tableau(c);
            REQUIRE(oracle_composition_map(t.diagram(), t) == composition_map(t));
        }
    }
}

TEST_CASE("profile footprint golden values", "[staircase]") {
    Tableau t = build_tableau(worked_example());
    const Diagram& d = t.diagram();
    CHECK(profile_footprint(d, t, 9) ==
          std::vector<BoxCoord>{{2, 4}, {3, 5}, {4, 6}, {5, 7}, {5, 8}, {5, 9}, {5, 10}});
    CHECK(profile_footprint(d, t, 19) == std::vector<BoxCoord>{{4, 7}, {4, 8}, {4, 9}, {4, 10}});
    CHECK(profile_footprint(d, t, 22) == std::vector<BoxCoord>{{1, 10}});

    Tableau t2 = build_tableau(Composition({3, 2, 1}));
    const Diagram& d2 = t2.diagram();
    CHECK(profile_footprint(d2, t2, 1) == std::vector<BoxCoord>{{1, 1}});
    CHECK(profile_footprint(d2, t2, 2) == std::vector<BoxCoord>{{2, 1}});
    CHECK(profile_footprint(d2, t2, 3) == std::vector<BoxCoord>{{3, 1}, {3, 2}, {3, 3}});
    CHECK(profile_footprint(d2, t2, 4) == std::vector<BoxCoord>{{1, 2}});
    CHECK(profile_footprint(d2, t2, 5) == std::vector<BoxCoord>{{2, 2}, {2, 3}});
    CHECK(profile_footprint(d2, t2, 6) == std::vector<BoxCoord>{{1, 3}});
}

TEST_CASE("footprints match trajectories on every small composition", "[staircase]") {
    for (int m = 1; m <= 8; ++m) {
        for (const auto& c : all_compositions(m)) {
            Tableau t = build_tableau(c);
            auto ext = propagate(t, PrecedenceOrder(t));
            for (Entry e = 1; e <= t.n(); ++e)
                REQUIRE(profile_footprint(t.diagram(), t, e) == ext.trajectory(e).cells);
        }
    }
}

TEST_CASE("replacement chain golden values", "[staircase]") {
    CHECK(replacement_chain(Diagram(Composition({2, 1, 1})), 1) ==
          std::vector<BoxCoord>{{2, 1}, {1, 2}});
    CHECK(replacement_chain(Diagram(Composition({3, 1, 2, 1, 2})), 1) ==
          std::vector<BoxCoord>{{3, 1}, {1, 3}});
    CHECK(replacement_chain(Diagram(Composition({3, 1, 2, 1, 2, 1, 2})), 1) ==
          std::vector<BoxCoord>{{3, 1}, {1, 3}, {1, 5}});
    // Already extremal: no matching staircase, the box stays put.
    CHECK(replacement_chain(Diagram(Composition({2, 1})), 1) == std::vector<BoxCoord>{{2, 1}});
    CHECK(replacement_chain(Diagram(Composition({3, 1, 2})), 1) == std::vector<BoxCoord>{{3, 1}});
}

TEST_CASE("replacement chain rejects unsuitable columns", "[staircase]") {
    Diagram d(Composition({3, 1, 2}));
    CHECK_THROWS_AS(replacement_chain(d, 2), std::invalid_argument);  // shorter than columns right
    CHECK_THROWS_AS(replacement_chain(d, 3), std::invalid_argument);  // surplus two
    CHECK_THROWS_AS(replacement_chain(d, 4), std::invalid_argument);  // out of range
    CHECK_THROWS_AS(replacement_chain(Diagram(Composition({1, 2})), 2), std::invalid_argument);
}
